#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "flowgame/common.hpp"

namespace flowgame {

class BreakpointFunction;

// Piecewise-constant rate function on [start, end). times has one more entry
// than values; the value on [times[i], times[i+1]) is values[i]. Evaluation is
// right-continuous. Immutable after construction.
class StepFunction {
 public:
  StepFunction(std::vector<double> times, std::vector<double> values);

  static StepFunction constant(double start, double end, double value);
  // Pieces (t0, t1, v) must be non-overlapping; gaps are filled with zero and
  // the result covers [start, end).
  static StepFunction from_pieces(double start, double end,
                                  const std::vector<std::array<double, 3>>& pieces);

  double start() const { return times_.front(); }
  double end() const { return times_.back(); }
  std::size_t piece_count() const { return values_.size(); }
  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& values() const { return values_; }

  // Value at t, right-continuous; t must lie in [start, end).
  double value_at(double t) const;

  double max_abs() const;

  StepFunction shifted(double delta) const;
  // Restrict to [a, b) intersected with the domain; the result covers [a, b)
  // with zero fill outside the original domain.
  StepFunction clipped(double a, double b) const;

  BreakpointFunction integral() const;

  friend StepFunction add(const StepFunction& f, const StepFunction& g);
  friend StepFunction sub(const StepFunction& f, const StepFunction& g);
  StepFunction scaled(double factor) const;

  friend StepFunction sum(const std::vector<StepFunction>& fs);

  bool almost_equal(const StepFunction& other, double tol) const;

 private:
  std::vector<double> times_;
  std::vector<double> values_;
};

// Continuous piecewise-linear function given by values at breakpoints.
// Immutable after construction.
class BreakpointFunction {
 public:
  BreakpointFunction(std::vector<double> times, std::vector<double> values);

  static BreakpointFunction constant(double start, double end, double value);

  double start() const { return times_.front(); }
  double end() const { return times_.back(); }
  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& values() const { return values_; }

  double value_at(double t) const;  // DomainError outside [start, end]
  bool nondecreasing(double tol = kTimeEps) const;

  BreakpointFunction shifted(double delta) const;
  BreakpointFunction scaled(double factor) const;
  friend BreakpointFunction add(const BreakpointFunction& f, const BreakpointFunction& g);
  friend BreakpointFunction sub(const BreakpointFunction& f, const BreakpointFunction& g);

  // Largest t with f(t) = y, for nondecreasing f; on a flat segment at level y
  // this is the right endpoint of the segment. NotAttained if y is outside the
  // range.
  double max_preimage(double y) const;
  // Smallest t with f(t) = y (left endpoint of a flat segment).
  double min_preimage(double y) const;

  double max_abs_diff(const BreakpointFunction& other) const;

 private:
  std::vector<double> times_;
  std::vector<double> values_;
};

BreakpointFunction integrate(const StepFunction& f);

// Merges a sorted list of candidate breakpoints, dropping entries closer than
// kTimeEps to their predecessor (the earlier time wins).
std::vector<double> merge_breakpoints(std::vector<double> times);

// CSV export, header "theta,value". StepFunction rows include interval
// midpoints so the step shape survives plotting.
void write_csv(std::ostream& os, const StepFunction& f);
void write_csv(std::ostream& os, const BreakpointFunction& f);

}  // namespace flowgame
