#include "regreg/ktuple.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "regreg/error.hpp"

namespace regreg {

KTuple::KTuple(std::vector<Value> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw Error(Errc::invalid_argument, "k-tuple needs at least 2 coordinates");
  }
  auto [lo, hi] = std::minmax_element(coords_.begin(), coords_.end());
  if (*lo < 0) {
    throw Error(Errc::invalid_argument, "k-tuple coordinates must be nonnegative");
  }
  min_ = *lo;
  max_ = *hi;
}

std::string KTuple::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const KTuple& x) {
  os << '(';
  for (std::size_t i = 0; i < x.arity(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  return os << ')';
}

std::size_t domain_arity(const Domain& d) {
  if (d.empty()) throw Error(Errc::invalid_argument, "domain is empty");
  const std::size_t k = d.begin()->arity();
  for (const auto& x : d) {
    if (x.arity() != k) {
      throw Error(Errc::invalid_argument, "mixed-arity domain: " + x.to_string());
    }
  }
  return k;
}

}  // namespace regreg
