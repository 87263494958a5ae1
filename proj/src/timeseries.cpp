#include "flowgame/timeseries.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace flowgame {

namespace {

void check_grid(const std::vector<double>& times) {
  if (times.size() < 2) fail(Errc::DomainError, "function needs at least two breakpoints");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1]))
      fail(Errc::DomainError, "breakpoints must be strictly increasing");
    if (!std::isfinite(times[i])) fail(Errc::DomainError, "non-finite breakpoint");
  }
}

// Union of two breakpoint grids over a common domain.
std::vector<double> union_grid(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return merge_breakpoints(std::move(out));
}

void check_common_domain(double sa, double ea, double sb, double eb) {
  if (std::abs(sa - sb) > kTimeEps || std::abs(ea - eb) > kTimeEps)
    fail(Errc::DomainError, "operands must share a domain");
}

}  // namespace

std::vector<double> merge_breakpoints(std::vector<double> times) {
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    if (out.empty() || t - out.back() > kTimeEps) out.push_back(t);
  }
  return out;
}

StepFunction::StepFunction(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
  check_grid(times_);
  if (values_.size() + 1 != times_.size())
    fail(Errc::DomainError, "need one value per interval");
  for (double v : values_)
    if (!std::isfinite(v)) fail(Errc::DomainError, "non-finite value");
}

StepFunction StepFunction::constant(double start, double end, double value) {
  return StepFunction({start, end}, {value});
}

StepFunction StepFunction::from_pieces(double start, double end,
                                       const std::vector<std::array<double, 3>>& pieces) {
  std::vector<std::array<double, 3>> sorted = pieces;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  std::vector<double> times{start};
  std::vector<double> values;
  for (const auto& p : sorted) {
    double a = std::max(p[0], start), b = std::min(p[1], end);
    if (b - a <= kTimeEps) continue;
    if (a - times.back() > kTimeEps) {
      values.push_back(0.0);
      times.push_back(a);
    }
    if (b - times.back() > kTimeEps) {
      values.push_back(p[2]);
      times.push_back(b);
    }
  }
  if (end - times.back() > kTimeEps) {
    values.push_back(0.0);
    times.push_back(end);
  } else {
    times.back() = end;
  }
  if (values.empty()) return constant(start, end, 0.0);
  return StepFunction(std::move(times), std::move(values));
}

double StepFunction::value_at(double t) const {
  if (t < start() - kTimeEps || t > end() + kTimeEps)
    fail(Errc::DomainError, "evaluation outside domain");
  if (t >= end()) return values_.back();
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  std::size_t idx = (it == times_.begin()) ? 0 : (it - times_.begin() - 1);
  if (idx >= values_.size()) idx = values_.size() - 1;
  return values_[idx];
}

double StepFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

StepFunction StepFunction::shifted(double delta) const {
  std::vector<double> t = times_;
  for (double& x : t) x += delta;
  return StepFunction(std::move(t), values_);
}

StepFunction StepFunction::clipped(double a, double b) const {
  if (!(b > a)) fail(Errc::DomainError, "empty clip window");
  std::vector<std::array<double, 3>> pieces;
  for (std::size_t i = 0; i < values_.size(); ++i)
    pieces.push_back({times_[i], times_[i + 1], values_[i]});
  return from_pieces(a, b, pieces);
}

StepFunction StepFunction::scaled(double factor) const {
  std::vector<double> v = values_;
  for (double& x : v) x *= factor;
  return StepFunction(times_, std::move(v));
}

StepFunction add(const StepFunction& f, const StepFunction& g) {
  check_common_domain(f.start(), f.end(), g.start(), g.end());
  std::vector<double> grid = union_grid(f.times_, g.times_);
  std::vector<double> vals(grid.size() - 1);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    double mid = 0.5 * (grid[i] + grid[i + 1]);
    vals[i] = f.value_at(std::min(mid, f.end() - kTimeEps)) +
              g.value_at(std::min(mid, g.end() - kTimeEps));
  }
  return StepFunction(std::move(grid), std::move(vals));
}

StepFunction sub(const StepFunction& f, const StepFunction& g) {
  return add(f, g.scaled(-1.0));
}

StepFunction sum(const std::vector<StepFunction>& fs) {
  if (fs.empty()) fail(Errc::DomainError, "sum of no functions");
  StepFunction acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = add(acc, fs[i]);
  return acc;
}

bool StepFunction::almost_equal(const StepFunction& other, double tol) const {
  if (std::abs(start() - other.start()) > tol || std::abs(end() - other.end()) > tol)
    return false;
  std::vector<double> grid = union_grid(times_, other.times_);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    double mid = 0.5 * (grid[i] + grid[i + 1]);
    if (std::abs(value_at(std::min(mid, end() - kTimeEps)) -
                 other.value_at(std::min(mid, other.end() - kTimeEps))) > tol)
      return false;
  }
  return true;
}

BreakpointFunction integrate(const StepFunction& f) { return f.integral(); }

BreakpointFunction StepFunction::integral() const {
  std::vector<double> vals(times_.size());
  vals[0] = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    vals[i + 1] = vals[i] + values_[i] * (times_[i + 1] - times_[i]);
  return BreakpointFunction(times_, std::move(vals));
}

BreakpointFunction::BreakpointFunction(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
  check_grid(times_);
  if (values_.size() != times_.size())
    fail(Errc::DomainError, "need one value per breakpoint");
  for (double v : values_)
    if (!std::isfinite(v)) fail(Errc::DomainError, "non-finite value");
}

BreakpointFunction BreakpointFunction::constant(double start, double end, double value) {
  return BreakpointFunction({start, end}, {value, value});
}

double BreakpointFunction::value_at(double t) const {
  if (t < start() - kTimeEps || t > end() + kTimeEps)
    fail(Errc::DomainError, "evaluation outside domain");
  t = std::clamp(t, start(), end());
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  std::size_t hi = std::min<std::size_t>(it - times_.begin(), times_.size() - 1);
  std::size_t lo = hi - 1;
  double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
  return values_[lo] + w * (values_[hi] - values_[lo]);
}

bool BreakpointFunction::nondecreasing(double tol) const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] < values_[i - 1] - tol) return false;
  return true;
}

BreakpointFunction BreakpointFunction::shifted(double delta) const {
  std::vector<double> t = times_;
  for (double& x : t) x += delta;
  return BreakpointFunction(std::move(t), values_);
}

BreakpointFunction BreakpointFunction::scaled(double factor) const {
  std::vector<double> v = values_;
  for (double& x : v) x *= factor;
  return BreakpointFunction(times_, std::move(v));
}

BreakpointFunction add(const BreakpointFunction& f, const BreakpointFunction& g) {
  check_common_domain(f.start(), f.end(), g.start(), g.end());
  std::vector<double> grid = union_grid(f.times_, g.times_);
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    vals[i] = f.value_at(grid[i]) + g.value_at(grid[i]);
  return BreakpointFunction(std::move(grid), std::move(vals));
}

BreakpointFunction sub(const BreakpointFunction& f, const BreakpointFunction& g) {
  return add(f, g.scaled(-1.0));
}

double BreakpointFunction::max_preimage(double y) const {
  if (y < values_.front() - kTimeEps || y > values_.back() + kTimeEps)
    fail(Errc::NotAttained, "level outside range");
  y = std::clamp(y, values_.front(), values_.back());
  // last index with value <= y (values nondecreasing by precondition)
  auto it = std::upper_bound(values_.begin(), values_.end(), y);
  std::size_t k = (it - values_.begin()) - 1;
  if (values_[k] >= y) return times_[k];  // right end of flat segment at level y
  // strictly inside segment (k, k+1)
  double v0 = values_[k], v1 = values_[k + 1];
  double w = (y - v0) / (v1 - v0);
  return times_[k] + w * (times_[k + 1] - times_[k]);
}

double BreakpointFunction::min_preimage(double y) const {
  if (y < values_.front() - kTimeEps || y > values_.back() + kTimeEps)
    fail(Errc::NotAttained, "level outside range");
  y = std::clamp(y, values_.front(), values_.back());
  // first index with value >= y
  auto it = std::lower_bound(values_.begin(), values_.end(), y);
  std::size_t k = it - values_.begin();
  if (values_[k] <= y || k == 0) return times_[k];
  double v0 = values_[k - 1], v1 = values_[k];
  double w = (y - v0) / (v1 - v0);
  return times_[k - 1] + w * (times_[k] - times_[k - 1]);
}

double BreakpointFunction::max_abs_diff(const BreakpointFunction& other) const {
  double lo = std::max(start(), other.start());
  double hi = std::min(end(), other.end());
  std::vector<double> grid = union_grid(times_, other.times_);
  double m = 0.0;
  for (double t : grid) {
    if (t < lo || t > hi) continue;
    m = std::max(m, std::abs(value_at(t) - other.value_at(t)));
  }
  return m;
}

void write_csv(std::ostream& os, const StepFunction& f) {
  os << "theta,value\n";
  const auto& t = f.times();
  const auto& v = f.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << format_double(t[i]) << ',' << format_double(v[i]) << '\n';
    os << format_double(0.5 * (t[i] + t[i + 1])) << ',' << format_double(v[i]) << '\n';
  }
  os << format_double(t.back()) << ',' << format_double(v.back()) << '\n';
}

void write_csv(std::ostream& os, const BreakpointFunction& f) {
  os << "theta,value\n";
  for (std::size_t i = 0; i < f.times().size(); ++i)
    os << format_double(f.times()[i]) << ',' << format_double(f.values()[i]) << '\n';
}

}  // namespace flowgame
