#include "flowgame/common.hpp"

#include <charconv>
#include <cmath>

namespace flowgame {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPositiveCapacity: return "NonPositiveCapacity";
    case Errc::NonPositiveSupply: return "NonPositiveSupply";
    case Errc::NegativeTransit: return "NegativeTransit";
    case Errc::ZeroTransitOnGeneral: return "ZeroTransitOnGeneral";
    case Errc::UnreachableDestination: return "UnreachableDestination";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::NonPositiveHorizon: return "NonPositiveHorizon";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaVersionMismatch: return "SchemaVersionMismatch";
    case Errc::DomainError: return "DomainError";
    case Errc::NotAttained: return "NotAttained";
    case Errc::MalformedRule: return "MalformedRule";
    case Errc::ModelMismatch: return "ModelMismatch";
    case Errc::NotParallel: return "NotParallel";
    case Errc::NotTwoParallel: return "NotTwoParallel";
    case Errc::HypothesesViolated: return "HypothesesViolated";
    case Errc::EventBudgetExceeded: return "EventBudgetExceeded";
    case Errc::NonLipschitzDetected: return "NonLipschitzDetected";
    case Errc::NotEventDrivenCapable: return "NotEventDrivenCapable";
    case Errc::UsageError: return "UsageError";
  }
  return "UnknownError";
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace flowgame
