#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "regreg/families.hpp"
#include "regreg/grid.hpp"

namespace regreg {

/// rho : E^k -> N with rho(x) >= min(x) everywhere.
class RhoFn {
 public:
  /// Throws InvalidArgument if some rho(x) < min(x).
  explicit RhoFn(std::map<KTuple, Value> values);

  const std::map<KTuple, Value>& entries() const noexcept { return values_; }
  /// Throws MissingDomain outside the domain.
  Value at(const KTuple& x) const;
  /// rho(x) - min(x), always >= 0.
  Value offset(const KTuple& x) const { return at(x) - x.min(); }

  friend bool operator==(const RhoFn&, const RhoFn&) = default;

 private:
  std::map<KTuple, Value> values_;
};

/// gamma : E^k -> Z, unrestricted.
class GammaFn {
 public:
  explicit GammaFn(std::map<KTuple, Value> values) : values_(std::move(values)) {}

  const std::map<KTuple, Value>& entries() const noexcept { return values_; }
  Value at(const KTuple& x) const;

  friend bool operator==(const GammaFn&, const GammaFn&) = default;

 private:
  std::map<KTuple, Value> values_;
};

/// floor(t * log2(p^k)): how many distinct small offsets a t-log bounded rho
/// may use.
std::size_t small_offset_cap(std::size_t p, int k, int t);

/// e0 * k^k, the boundary between small and large offsets. Throws TooLarge
/// on overflow.
Value small_threshold(Value e0, int k);

/// 2^(k^k) * (p^k)^t, saturating at UINT64_MAX.
std::uint64_t comparison_bound(int k, std::size_t p, int t);
/// 2^(k^k) + (p^k)^t, saturating at UINT64_MAX.
std::uint64_t enumeration_bound(int k, std::size_t p, int t);

/// Seeded t-log bounded rho. m = min(cap, p^k) tuples, picked by a seeded
/// shuffle, get distinct offsets in (0, e0 k^k); the rest get distinct
/// offsets >= e0 k^k. Throws InfeasibleSmallRange if (0, e0 k^k) holds fewer
/// than m integers, InvalidArgument if t < 1.
RhoFn gen_rho_tlog(const GridE& grid, int t, std::uint64_t seed);

/// Seeded gamma with values uniform in [-bound, bound]; bound >= 1.
GammaFn gen_gamma(const GridE& grid, std::uint64_t seed, Value bound);

/// |{rho(x) - min(x) : 0 < rho(x) - min(x) < e0 k^k, x in E^k}| <= cap,
/// counted over distinct values.
bool check_tlog_bounded(const RhoFn& rho, const GridE& grid, int t);

struct Deltas {
  std::set<Value> below;        // f(x) - min(E) over E0
  std::set<Value> between;      // gamma(x) over E1
  std::set<Value> at_or_above;  // rho(x) - min(x) over E2
};

/// The three value sets of the block partition, deduplicated.
Deltas build_deltas(const FiniteFn& f, const GridE& grid, const RhoFn& rho,
                    const GammaFn& gamma);

/// H_p in solver-ready form. Values are distinct within and across fields:
///  negatives        in [-e0, 0)
///  small_positives  in (0, e0 k^k)
///  large_positives  >= e0 k^k
/// Zero offsets are dropped and counted in dropped_zeros. `zero_kept` is set
/// only by build_structured(..., keep_zeros = true) when a zero was present;
/// such an instance is solved trivially and has no file form.
struct StructuredInstance {
  int k = 2;
  std::size_t p = 2;
  int t = 1;
  Value e0 = 0;
  std::vector<Value> negatives;
  std::vector<Value> small_positives;
  std::vector<Value> large_positives;
  std::size_t dropped_zeros = 0;
  bool zero_kept = false;

  Value threshold() const { return small_threshold(e0, k); }
  /// Every value of the instance, ascending (including 0 when zero_kept).
  std::vector<Value> values() const;
  /// Re-checks ranges, ordering and counts; throws InvariantViolation.
  void validate() const;

  friend bool operator==(const StructuredInstance&, const StructuredInstance&) = default;
};

/// Requires f regressively regular over the grid (else NotRegular) and rho
/// t-log bounded (else NotTLogBounded).
StructuredInstance build_structured(const FiniteFn& f, const GridE& grid, const RhoFn& rho,
                                    int t, bool keep_zeros = false);

}  // namespace regreg
