#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "regreg/ktuple.hpp"

namespace regreg {

/// Canonical form of a tuple's pattern of `<` and `=` among coordinates:
/// ranks[i] is the number of distinct coordinate values strictly below x[i].
/// Two tuples are order equivalent exactly when their signatures match.
class OrderTypeSig {
 public:
  OrderTypeSig() = default;
  /// Validates that ranks are dense (cover 0..d-1 with no gaps).
  explicit OrderTypeSig(std::vector<int> ranks);

  const std::vector<int>& ranks() const noexcept { return ranks_; }
  std::size_t arity() const noexcept { return ranks_.size(); }
  /// Number of distinct coordinate values in any tuple of this class.
  int distinct_values() const noexcept;

  /// "0,2,1" form used as a JSON key.
  std::string to_string() const;
  static OrderTypeSig parse(const std::string& text);

  friend auto operator<=>(const OrderTypeSig&, const OrderTypeSig&) = default;
  friend bool operator==(const OrderTypeSig&, const OrderTypeSig&) = default;

 private:
  std::vector<int> ranks_;
};

OrderTypeSig signature(const KTuple& x);

/// All order-type classes of N^k, found by taking the signature of every
/// tuple in {0..k-1}^k. Accepts 2 <= k <= 8.
std::set<OrderTypeSig> enumerate_classes(int k);

/// Surjections from a k-set onto a j-set, by inclusion-exclusion.
std::uint64_t surjection_count(int k, int j);

/// sum_{j=1..k} surjection_count(k, j): the number of order-type classes,
/// computed without touching any tuple. Accepts 1 <= k <= 15.
std::uint64_t class_count_formula(int k);

/// k^k, saturating at UINT64_MAX.
std::uint64_t k_pow_k(int k);

}  // namespace regreg
