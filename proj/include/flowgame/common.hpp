#pragma once

#include <stdexcept>
#include <string>

namespace flowgame {

// Tolerance for breakpoint merging and event coincidence. Breakpoints closer
// than this are merged, keeping the earlier time.
inline constexpr double kTimeEps = 1e-9;

enum class Errc {
  // instance
  NonPositiveCapacity,
  NonPositiveSupply,
  NegativeTransit,
  ZeroTransitOnGeneral,
  UnreachableDestination,
  DuplicateId,
  NonPositiveHorizon,
  UnknownNode,
  ParseError,
  SchemaVersionMismatch,
  // timeseries
  DomainError,
  NotAttained,
  // strategy
  MalformedRule,
  ModelMismatch,
  NotParallel,
  NotTwoParallel,
  HypothesesViolated,
  // engine
  EventBudgetExceeded,
  NonLipschitzDetected,
  NotEventDrivenCapable,
  // cli
  UsageError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

// Shortest round-trip decimal formatting (same convention as the JSON layer),
// so CSV and summary output is byte-stable across runs.
std::string format_double(double v);

}  // namespace flowgame
