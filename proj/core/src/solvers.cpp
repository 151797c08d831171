#include "regreg/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <unordered_map>

#include "regreg/error.hpp"

namespace regreg {

std::string_view to_string(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::found: return "found";
    case SolveStatus::none: return "none";
    case SolveStatus::trivial_zero: return "trivial_zero";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxSideBits = 30;

std::vector<Value> as_sorted_set(std::span<const Value> values) {
  std::vector<Value> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Sum of |v| must fit in Value so that no subset sum overflows.
void check_magnitude(std::span<const Value> values) {
  __int128 total = 0;
  for (Value v : values) {
    total += v < 0 ? -static_cast<__int128>(v) : static_cast<__int128>(v);
  }
  if (total > std::numeric_limits<Value>::max()) {
    throw Error(Errc::too_large, "sum of |values| overflows 64-bit arithmetic");
  }
}

// sums[mask] for every mask over `items`, bit i <-> items[i].
std::vector<Value> subset_sums(const std::vector<Value>& items) {
  std::vector<Value> sums(std::size_t{1} << items.size(), 0);
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    sums[mask] = sums[mask & (mask - 1)] + items[std::countr_zero(mask)];
  }
  return sums;
}

void append_mask(std::vector<Value>& out, const std::vector<Value>& items, std::uint64_t mask) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (mask >> i & 1U) out.push_back(items[i]);
  }
}

SolveResult trivial_zero() {
  return {SolveStatus::trivial_zero, std::vector<Value>{0}, {}};
}

SolveResult found(std::vector<Value> witness, SolveStats stats) {
  std::sort(witness.begin(), witness.end());
  return {SolveStatus::found, std::move(witness), stats};
}

}  // namespace

SolveResult solve_structured(const StructuredInstance& inst) {
  inst.validate();
  if (inst.zero_kept) return trivial_zero();

  const std::vector<Value>& neg = inst.negatives;
  const std::vector<Value>& pos = inst.small_positives;
  if (neg.size() > kMaxSideBits || pos.size() > kMaxSideBits) {
    throw Error(Errc::too_large, "structured side exceeds 2^30 subsets");
  }
  check_magnitude(neg);
  check_magnitude(pos);

  SolveStats stats;
  const std::vector<Value> neg_sums = subset_sums(neg);
  stats.sums_enumerated += neg_sums.size();
  std::unordered_map<Value, std::uint64_t> first_mask;
  first_mask.reserve(neg_sums.size());
  for (std::uint64_t mask = 0; mask < neg_sums.size(); ++mask) {
    first_mask.try_emplace(neg_sums[mask], mask);
  }

  std::optional<SolveResult> result;
  const std::uint64_t pos_count = std::uint64_t{1} << pos.size();
  for (std::uint64_t mask = 1; mask < pos_count; ++mask) {
    Value sum = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (mask >> i & 1U) sum += pos[i];
    }
    ++stats.sums_enumerated;
    ++stats.comparisons;
    // sum > 0, so a hit can never be the empty negative subset.
    if (auto it = first_mask.find(-sum); it != first_mask.end()) {
      std::vector<Value> w;
      append_mask(w, neg, it->second);
      append_mask(w, pos, mask);
      result = found(std::move(w), stats);
      break;
    }
  }
  if (!result) result = SolveResult{SolveStatus::none, std::nullopt, stats};

  if (result->stats.comparisons > comparison_bound(inst.k, inst.p, inst.t) ||
      result->stats.sums_enumerated > enumeration_bound(inst.k, inst.p, inst.t)) {
    throw Error(Errc::invariant_violation, "structured solve exceeded its operation bound");
  }
  return *result;
}

namespace {

std::vector<Value> prune_unusable(std::vector<Value> v) {
  while (true) {
    Value neg_mass = 0, pos_mass = 0;
    for (Value x : v) (x < 0 ? neg_mass : pos_mass) += std::abs(x);
    const auto before = v.size();
    std::erase_if(v, [&](Value x) { return x > 0 ? x > neg_mass : -x > pos_mass; });
    if (v.size() == before) return v;
  }
}

}  // namespace

SolveResult solve_mitm(std::span<const Value> values, MitmOptions opts) {
  std::vector<Value> v = as_sorted_set(values);
  if (std::binary_search(v.begin(), v.end(), Value{0})) return trivial_zero();
  check_magnitude(v);
  if (opts.prune) v = prune_unusable(std::move(v));
  if (v.size() > kMitmMaxValues) {
    throw Error(Errc::too_large, "meet-in-the-middle takes at most 40 values, got " +
                                     std::to_string(v.size()));
  }

  const std::size_t half = v.size() / 2;
  const std::vector<Value> low(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(half));
  const std::vector<Value> high(v.begin() + static_cast<std::ptrdiff_t>(half), v.end());

  SolveStats stats;
  const std::vector<Value> low_sums = subset_sums(low);
  stats.sums_enumerated += low_sums.size();
  std::unordered_map<Value, std::uint64_t> first_mask;  // includes the empty mask
  first_mask.reserve(low_sums.size());
  std::optional<std::uint64_t> low_zero;  // first nonempty low mask summing to 0
  for (std::uint64_t mask = 0; mask < low_sums.size(); ++mask) {
    first_mask.try_emplace(low_sums[mask], mask);
    if (mask != 0 && low_sums[mask] == 0 && !low_zero) low_zero = mask;
  }

  // Combined mask = low | high << |low|; scanning high masks ascending and
  // taking the smallest matching low mask gives the first combined hit.
  ++stats.comparisons;
  if (low_zero) {
    std::vector<Value> w;
    append_mask(w, low, *low_zero);
    return found(std::move(w), stats);
  }
  const std::vector<Value> high_sums = subset_sums(high);
  stats.sums_enumerated += high_sums.size() - 1;
  for (std::uint64_t mask = 1; mask < high_sums.size(); ++mask) {
    ++stats.comparisons;
    if (auto it = first_mask.find(-high_sums[mask]); it != first_mask.end()) {
      std::vector<Value> w;
      append_mask(w, low, it->second);
      append_mask(w, high, mask);
      return found(std::move(w), stats);
    }
  }
  return {SolveStatus::none, std::nullopt, stats};
}

SolveResult solve_dp(std::span<const Value> values) {
  const std::vector<Value> v = as_sorted_set(values);
  if (std::binary_search(v.begin(), v.end(), Value{0})) return trivial_zero();

  std::uint64_t neg_mass = 0, pos_mass = 0;
  for (Value x : v) {
    const std::uint64_t mag = static_cast<std::uint64_t>(x < 0 ? -x : x);
    if (mag > kDpMaxMagnitude) throw Error(Errc::too_large, "dp table bound exceeded");
    (x < 0 ? neg_mass : pos_mass) += mag;
    if (neg_mass + pos_mass > kDpMaxMagnitude) {
      throw Error(Errc::too_large, "dp table needs sum |v| <= 10^7");
    }
  }

  const auto offset = static_cast<Value>(neg_mass);
  const std::size_t width = neg_mass + pos_mass + 1;
  // item[s]: index of the value that first reached sum s - offset with a
  // nonempty subset; -1 if unreached. single[s]: that subset was {value}.
  std::vector<std::int32_t> item(width, -1);
  std::vector<std::uint8_t> single(width, 0);
  std::vector<Value> reached;
  const auto zero = static_cast<std::size_t>(offset);

  SolveStats stats;
  auto reconstruct = [&] {
    std::vector<Value> w;
    std::size_t s = zero;
    while (true) {
      const Value x = v[static_cast<std::size_t>(item[s])];
      w.push_back(x);
      if (single[s]) break;
      s = static_cast<std::size_t>(static_cast<Value>(s) - x);
    }
    return found(std::move(w), stats);
  };

  for (std::size_t i = 0; i < v.size(); ++i) {
    const Value x = v[i];
    const std::size_t before = reached.size();
    auto visit = [&](Value sum, bool alone) {
      ++stats.comparisons;
      const auto s = static_cast<std::size_t>(sum + offset);
      if (item[s] >= 0) return false;
      item[s] = static_cast<std::int32_t>(i);
      single[s] = alone ? 1 : 0;
      reached.push_back(sum);
      ++stats.sums_enumerated;
      return s == zero;
    };
    if (visit(x, true)) return reconstruct();
    for (std::size_t j = 0; j < before; ++j) {
      if (visit(reached[j] + x, false)) return reconstruct();
    }
  }
  return {SolveStatus::none, std::nullopt, stats};
}

bool verify_witness(std::span<const Value> values, std::span<const Value> witness) {
  if (witness.empty()) return false;
  std::vector<Value> w(witness.begin(), witness.end());
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end()) return false;
  const std::vector<Value> pool = as_sorted_set(values);
  __int128 sum = 0;
  for (Value x : w) {
    if (!std::binary_search(pool.begin(), pool.end(), x)) return false;
    sum += x;
  }
  return sum == 0;
}

}  // namespace regreg
