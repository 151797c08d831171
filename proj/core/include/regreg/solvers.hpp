#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "regreg/instances.hpp"

namespace regreg {

enum class SolveStatus { found, none, trivial_zero };

std::string_view to_string(SolveStatus s) noexcept;

struct SolveStats {
  std::uint64_t sums_enumerated = 0;
  /// Lookups of one candidate sum against the opposite side's index.
  std::uint64_t comparisons = 0;
};

/// Target is zero and the subset must be nonempty. A found witness is a set
/// of instance values, ascending.
struct SolveResult {
  SolveStatus status = SolveStatus::none;
  std::optional<std::vector<Value>> witness;
  SolveStats stats;
};

/// Split enumeration for structured instances: index every subset sum of the
/// negatives, then probe with the negation of every nonempty subset sum of
/// the small positives. Large positives never take part: each one exceeds
/// the total magnitude of all negatives.
///
/// Enumeration is in ascending binary-counter order over ascending values;
/// the witness is the first hit. Throws InvariantViolation if the instance
/// fails validation or if the run exceeds 2^(k^k) (p^k)^t comparisons.
SolveResult solve_structured(const StructuredInstance& inst);

struct MitmOptions {
  /// Drop values that cannot occur in any zero-sum subset: positives larger
  /// than the total magnitude of the negatives, and vice versa, to fixpoint.
  bool prune = true;
};

inline constexpr std::size_t kMitmMaxValues = 40;
inline constexpr std::uint64_t kDpMaxMagnitude = 10'000'000;

/// Generic meet-in-the-middle oracle over a set of integers (duplicates are
/// collapsed). Throws TooLarge beyond kMitmMaxValues values after pruning.
SolveResult solve_mitm(std::span<const Value> values, MitmOptions opts = {});

/// Pseudopolynomial reachability over shifted sums with back-pointers.
/// Throws TooLarge when the sum of |v| exceeds kDpMaxMagnitude.
SolveResult solve_dp(std::span<const Value> values);

/// Nonempty, no repeats, contained in `values`, sums to exactly 0.
bool verify_witness(std::span<const Value> values, std::span<const Value> witness);

}  // namespace regreg
