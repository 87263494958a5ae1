#pragma once

#include <string>
#include <vector>

#include "flowgame/instance.hpp"
#include "flowgame/timeseries.hpp"

namespace flowgame {

// Per-edge trajectories of a flow over time.
struct EdgeTrajectory {
  std::vector<BreakpointFunction> cumulative_inflow;   // per player, on [0,H]
  std::vector<BreakpointFunction> cumulative_outflow;  // per player, on [0,H]
  BreakpointFunction queue;                            // z_e on [0,H]
  BreakpointFunction exit_time;                        // T_e on [0,H], nondecreasing
};

struct EdgeFlowResult {
  StepFunction outflow;       // total outflow on the inflow domain (0 before tau)
  BreakpointFunction queue;   // z_e on the inflow domain
};

// Unique total outflow and queue satisfying the non-deficit and capacity
// rules: the edge serves at capacity whenever the queue is positive, else at
// min(inflow, capacity). Depletion times are computed in closed form.
EdgeFlowResult total_outflow(const StepFunction& total_inflow, const Edge& edge);

inline double waiting_time(double queue, const Edge& edge) { return queue / edge.capacity; }
inline double exit_time(double theta, double queue, const Edge& edge) {
  return theta + queue / edge.capacity + edge.transit;
}

// Builds the exit-time trajectory T_e(theta) = theta + z(theta)/nu + tau from a
// queue trajectory.
BreakpointFunction exit_time_trajectory(const BreakpointFunction& queue, const Edge& edge);

// Splits a total outflow among players in proportion to their inflow shares at
// the entrance time phi = max T^-1(theta); share 0 where total inflow at phi
// vanishes (previous shares are carried when the total outflow is positive
// there, which can only happen on a null set).
std::vector<StepFunction> split_outflow(const std::vector<StepFunction>& inflows,
                                        const StepFunction& total_out,
                                        const BreakpointFunction& exit_times);

struct FeasibilityRow {
  std::string constraint;  // conservation | non_deficit | capacity | merge
  std::string subject;     // edge or node id
  std::string player;      // empty when not player-specific
  double theta = 0.0;
  double magnitude = 0.0;
};

struct FeasibilityReport {
  std::vector<FeasibilityRow> worst_rows;  // worst row per constraint kind
  double max_violation = 0.0;

  std::string to_csv() const;
};

struct FlowOverTime;  // engine.hpp

// Checks conservation, non-deficit, capacity and merge conditions at every
// breakpoint and interval midpoint; violations are data, not exceptions.
FeasibilityReport audit_feasibility(const FlowOverTime& flow, const Instance& instance);

}  // namespace flowgame
