#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace regreg {

using Value = std::int64_t;

/// A point of N^k: at least two nonnegative coordinates.
class KTuple {
 public:
  explicit KTuple(std::vector<Value> coords);
  KTuple(std::initializer_list<Value> coords) : KTuple(std::vector<Value>(coords)) {}

  std::size_t arity() const noexcept { return coords_.size(); }
  std::span<const Value> coords() const noexcept { return coords_; }
  Value operator[](std::size_t i) const { return coords_[i]; }

  Value min() const noexcept { return min_; }
  Value max() const noexcept { return max_; }

  // Lexicographic on coordinates; arity compared first only when lengths differ.
  friend auto operator<=>(const KTuple& a, const KTuple& b) {
    return a.coords_ <=> b.coords_;
  }
  friend bool operator==(const KTuple& a, const KTuple& b) { return a.coords_ == b.coords_; }

  std::string to_string() const;

 private:
  std::vector<Value> coords_;
  Value min_ = 0;
  Value max_ = 0;
};

std::ostream& operator<<(std::ostream& os, const KTuple& x);

/// Finite subsets of N^k, kept in lexicographic order.
using Domain = std::set<KTuple>;

/// Common arity of a domain; throws InvalidArgument on a mixed-arity or empty set.
std::size_t domain_arity(const Domain& d);

}  // namespace regreg
