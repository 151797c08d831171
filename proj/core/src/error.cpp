#include "regreg/error.hpp"

namespace regreg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::missing_domain: return "MissingDomain";
    case Errc::undefined_rule: return "UndefinedRule";
    case Errc::not_regular: return "NotRegular";
    case Errc::not_tlog_bounded: return "NotTLogBounded";
    case Errc::negative_out_of_range: return "NegativeOutOfRange";
    case Errc::infeasible_small_range: return "InfeasibleSmallRange";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::too_large: return "TooLarge";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace regreg
