#include "regreg/instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "regreg/error.hpp"
#include "regreg/ordertype.hpp"
#include "regreg/regularity.hpp"
#include "rng.hpp"

namespace regreg {

RhoFn::RhoFn(std::map<KTuple, Value> values) : values_(std::move(values)) {
  for (const auto& [x, v] : values_) {
    if (v < x.min()) {
      throw Error(Errc::invalid_argument, "rho" + x.to_string() + " is below min(x)");
    }
  }
}

Value RhoFn::at(const KTuple& x) const {
  auto it = values_.find(x);
  if (it == values_.end()) throw Error(Errc::missing_domain, "rho undefined at " + x.to_string());
  return it->second;
}

Value GammaFn::at(const KTuple& x) const {
  auto it = values_.find(x);
  if (it == values_.end()) {
    throw Error(Errc::missing_domain, "gamma undefined at " + x.to_string());
  }
  return it->second;
}

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp && r != kSat; ++i) r = sat_mul(r, base);
  return r;
}

void check_params(std::size_t p, int k, int t) {
  if (k < 2) throw Error(Errc::invalid_argument, "k must be >= 2");
  if (p < 2) throw Error(Errc::invalid_argument, "p must be >= 2");
  if (t < 1) throw Error(Errc::invalid_argument, "t must be >= 1");
}

}  // namespace

std::size_t small_offset_cap(std::size_t p, int k, int t) {
  check_params(p, k, t);
  // Largest m with 2^m <= p^(k t). Exact while p^(k t) fits in 127 bits.
  const long double bits = static_cast<long double>(k) * t * std::log2(static_cast<long double>(p));
  if (bits < 126.0L) {
    unsigned __int128 n = 1;
    for (int i = 0; i < k * t; ++i) n *= p;
    std::size_t m = 0;
    while (n > 1) {
      n >>= 1;
      ++m;
    }
    return m;
  }
  return static_cast<std::size_t>(std::floor(bits));
}

Value small_threshold(Value e0, int k) {
  const std::uint64_t kk = k_pow_k(k);
  if (e0 < 0) throw Error(Errc::invalid_argument, "e0 must be >= 0");
  const std::uint64_t th = sat_mul(static_cast<std::uint64_t>(e0), kk);
  if (th > static_cast<std::uint64_t>(std::numeric_limits<Value>::max())) {
    throw Error(Errc::too_large, "e0 * k^k overflows");
  }
  return static_cast<Value>(th);
}

std::uint64_t comparison_bound(int k, std::size_t p, int t) {
  check_params(p, k, t);
  const std::uint64_t kk = k_pow_k(k);
  const std::uint64_t neg = kk >= 64 ? kSat : (std::uint64_t{1} << kk);
  return sat_mul(neg, sat_pow(sat_pow(p, k), static_cast<std::uint64_t>(t)));
}

std::uint64_t enumeration_bound(int k, std::size_t p, int t) {
  check_params(p, k, t);
  const std::uint64_t kk = k_pow_k(k);
  const std::uint64_t neg = kk >= 64 ? kSat : (std::uint64_t{1} << kk);
  const std::uint64_t pos = sat_pow(sat_pow(p, k), static_cast<std::uint64_t>(t));
  return neg > kSat - pos ? kSat : neg + pos;
}

RhoFn gen_rho_tlog(const GridE& grid, int t, std::uint64_t seed) {
  const auto tuples = grid.tuples();
  const std::size_t n = tuples.size();
  const std::size_t m = std::min(small_offset_cap(grid.p(), grid.k(), t), n);
  const Value threshold = small_threshold(grid.e0(), grid.k());
  if (threshold - 1 < static_cast<Value>(m)) {
    throw Error(Errc::infeasible_small_range,
                "need " + std::to_string(m) + " distinct offsets in (0, " +
                    std::to_string(threshold) + ")");
  }

  detail::Rng rng(seed);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  detail::shuffle(order, rng);

  const auto small =
      detail::sample_distinct(rng, 1, static_cast<std::uint64_t>(threshold - 1), m);
  const std::size_t n_large = n - m;
  const std::uint64_t large_span = std::max<std::uint64_t>(4 * n_large, 16);
  const auto large = detail::sample_distinct(rng, threshold, large_span, n_large);

  std::map<KTuple, Value> values;
  for (std::size_t i = 0; i < n; ++i) {
    const KTuple& x = tuples[order[i]];
    const Value offset = i < m ? small[i] : large[i - m];
    values.emplace(x, x.min() + offset);
  }
  return RhoFn(std::move(values));
}

GammaFn gen_gamma(const GridE& grid, std::uint64_t seed, Value bound) {
  if (bound < 1) throw Error(Errc::invalid_argument, "gamma bound must be >= 1");
  detail::Rng rng(seed);
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  std::map<KTuple, Value> values;
  for (const auto& x : grid.tuples()) {
    values.emplace(x, static_cast<Value>(detail::uniform_below(rng, width)) - bound);
  }
  return GammaFn(std::move(values));
}

bool check_tlog_bounded(const RhoFn& rho, const GridE& grid, int t) {
  const Value threshold = small_threshold(grid.e0(), grid.k());
  std::set<Value> small;
  for (const auto& x : grid.tuples()) {
    const Value off = rho.offset(x);
    if (off > 0 && off < threshold) small.insert(off);
  }
  return small.size() <= small_offset_cap(grid.p(), grid.k(), t);
}

Deltas build_deltas(const FiniteFn& f, const GridE& grid, const RhoFn& rho,
                    const GammaFn& gamma) {
  const BlockPartition blocks = partition_blocks(f, grid);
  for (const auto& x : grid.tuples()) {
    rho.at(x);
    gamma.at(x);
  }
  Deltas d;
  for (const auto& x : blocks.below) d.below.insert(f.at(x) - grid.e0());
  for (const auto& x : blocks.between) d.between.insert(gamma.at(x));
  for (const auto& x : blocks.at_or_above) d.at_or_above.insert(rho.offset(x));
  return d;
}

std::vector<Value> StructuredInstance::values() const {
  std::vector<Value> out;
  out.reserve(negatives.size() + small_positives.size() + large_positives.size() + 1);
  out.insert(out.end(), negatives.begin(), negatives.end());
  if (zero_kept) out.push_back(0);
  out.insert(out.end(), small_positives.begin(), small_positives.end());
  out.insert(out.end(), large_positives.begin(), large_positives.end());
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::invariant_violation, what);
}

bool strictly_ascending(const std::vector<Value>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

}  // namespace

void StructuredInstance::validate() const {
  require(k >= 2 && k <= 8, "k must be in [2, 8]");
  require(p >= 2, "p must be >= 2");
  require(t >= 1, "t must be >= 1");
  require(e0 >= 0, "e0 must be >= 0");
  Value th = 0;
  try {
    th = threshold();
  } catch (const Error& e) {
    throw Error(Errc::invariant_violation, e.what());
  }

  require(strictly_ascending(negatives), "negatives not strictly ascending");
  require(strictly_ascending(small_positives), "small_positives not strictly ascending");
  require(strictly_ascending(large_positives), "large_positives not strictly ascending");

  for (Value v : negatives) require(v >= -e0 && v < 0, "negative out of [-e0, 0)");
  for (Value v : small_positives) require(v > 0 && v < th, "small positive out of (0, e0 k^k)");
  for (Value v : large_positives) require(v >= th, "large positive below e0 k^k");

  require(negatives.size() <= class_count_formula(k), "more negatives than order-type classes");
  require(small_positives.size() <= small_offset_cap(p, k, t),
          "more small positives than floor(t log2(p^k))");

  const std::uint64_t tuples = sat_pow(p, static_cast<std::uint64_t>(k));
  const std::uint64_t used = negatives.size() + small_positives.size() + large_positives.size() +
                             (zero_kept ? 1 : 0);
  require(used <= tuples, "more values than tuples in E^k");
  require(dropped_zeros <= tuples, "dropped_zeros exceeds p^k");
}

StructuredInstance build_structured(const FiniteFn& f, const GridE& grid, const RhoFn& rho,
                                    int t, bool keep_zeros) {
  if (!check_regressively_regular(f, grid).is_regular) {
    throw Error(Errc::not_regular, "f is not regressively regular over the grid");
  }
  if (!check_tlog_bounded(rho, grid, t)) {
    throw Error(Errc::not_tlog_bounded, "rho is not t-log bounded over the grid");
  }
  const BlockPartition blocks = partition_blocks(f, grid);
  if (!blocks.between.empty()) {
    throw Error(Errc::invariant_violation, "regular f left a tuple in the middle block");
  }

  StructuredInstance inst;
  inst.k = grid.k();
  inst.p = grid.p();
  inst.t = t;
  inst.e0 = grid.e0();
  const Value threshold = inst.threshold();

  std::set<Value> neg, small, large;
  for (const auto& x : blocks.below) {
    const Value v = f.at(x) - inst.e0;
    if (v < -inst.e0) {
      throw Error(Errc::negative_out_of_range, "f" + x.to_string() + " is negative");
    }
    neg.insert(v);
  }
  for (const auto& x : blocks.at_or_above) {
    const Value off = rho.offset(x);
    if (off == 0) {
      if (keep_zeros) {
        inst.zero_kept = true;
      } else {
        ++inst.dropped_zeros;
      }
    } else if (off < threshold) {
      small.insert(off);
    } else {
      large.insert(off);
    }
  }
  inst.negatives.assign(neg.begin(), neg.end());
  inst.small_positives.assign(small.begin(), small.end());
  inst.large_positives.assign(large.begin(), large.end());
  inst.validate();
  return inst;
}

}  // namespace regreg
