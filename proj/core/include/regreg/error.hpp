#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regreg {

enum class Errc {
  invalid_argument,
  missing_domain,
  undefined_rule,
  not_regular,
  not_tlog_bounded,
  negative_out_of_range,
  infeasible_small_range,
  invariant_violation,
  too_large,
  parse_error,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace regreg
