#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "regreg/ktuple.hpp"

namespace regreg {

/// The Cartesian power E^k of a finite set E of naturals, |E| = p >= 2.
class GridE {
 public:
  /// Throws InvalidArgument unless k >= 2, |E| >= 2 and all elements >= 0.
  GridE(std::set<Value> e, int k);

  const std::vector<Value>& elements() const noexcept { return e_; }
  int k() const noexcept { return k_; }
  std::size_t p() const noexcept { return e_.size(); }
  /// e0 = min(E).
  Value e0() const noexcept { return e_.front(); }
  /// p^k; throws TooLarge past 2^24 tuples.
  std::size_t size() const;

  /// Every tuple of E^k in lexicographic order.
  std::vector<KTuple> tuples() const;
  Domain domain() const;

  friend bool operator==(const GridE&, const GridE&) = default;

 private:
  std::vector<Value> e_;
  int k_;
};

}  // namespace regreg
