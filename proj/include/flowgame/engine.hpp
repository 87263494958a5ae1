#pragma once

#include <cstddef>
#include <vector>

#include "flowgame/dynamics.hpp"
#include "flowgame/instance.hpp"
#include "flowgame/strategy.hpp"
#include "flowgame/timeseries.hpp"

namespace flowgame {

struct SimConfig {
  enum class Mode { EventDriven, FixedStep };
  // Event tie perturbation for the uniqueness replay: Latest advances to the
  // far end of a coincidence cluster instead of the near end.
  enum class TieMode { Earliest, Latest };

  Mode mode = Mode::EventDriven;
  double step = 0.0;  // fixed-step size (absolute time units)
  double eps_time = kTimeEps;
  std::size_t max_events = 1'000'000;
  TieMode tie_mode = TieMode::Earliest;
  bool reverse_edges = false;
};

struct FlowOverTime {
  double horizon = 0.0;
  // [edge][player], step functions on [0,H)
  std::vector<std::vector<StepFunction>> inflow;
  std::vector<std::vector<StepFunction>> outflow;
  std::vector<EdgeTrajectory> edges;

  StepFunction total_inflow(int edge) const;
  StepFunction total_outflow(int edge) const;
};

// Constructs the unique feasible flow over time induced by the strategy
// profile. Event-driven mode is exact for table/builtin strategies; fixed-step
// mode freezes information at interval left endpoints and has O(h) error in
// cumulative flows.
FlowOverTime simulate(const Instance& instance, const std::vector<Strategy>& profile,
                      const SimConfig& config = {});

FlowOverTime simulate_fixed_step(const Instance& instance, const std::vector<Strategy>& profile,
                                 SimConfig config);

struct ReplayReport {
  double event_deviation = 0.0;           // across event-driven variants
  std::vector<double> fixed_step_sizes;   // h values used
  std::vector<double> fixed_step_errors;  // sup deviation vs event-driven
  std::vector<double> convergence_ratios; // error(h) / error(h/10)
  bool events_agree = false;
  bool fixed_converges = false;
  bool pass = false;
};

// Runs the event-driven engine twice (normal and perturbed tie handling) and
// the fixed-step engine at three step sizes; reports sup-norm deviations of
// cumulative flows.
ReplayReport replay_uniqueness_check(const Instance& instance,
                                     const std::vector<Strategy>& profile);

// Sup-norm distance between the cumulative flows of two runs.
double cumulative_deviation(const FlowOverTime& a, const FlowOverTime& b);

}  // namespace flowgame
