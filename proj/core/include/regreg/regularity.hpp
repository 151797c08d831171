#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "regreg/families.hpp"
#include "regreg/grid.hpp"
#include "regreg/ordertype.hpp"

namespace regreg {

/// Split of E^k by where f(x) falls:
///   below: f(x) < min(E)
///   between: min(E) <= f(x) < min(x)
///   at_or_above: f(x) >= min(x)
struct BlockPartition {
  Domain below;        // E0
  Domain between;      // E1
  Domain at_or_above;  // E2
};

BlockPartition partition_blocks(const FiniteFn& f, const GridE& grid);

enum class VerdictKind { constant_below_min, geq_min, fail };

struct ClassVerdict {
  VerdictKind kind = VerdictKind::fail;
  /// The shared value, for constant_below_min.
  std::optional<Value> value;
  /// One tuple that is neither below min(E) nor >= its own min, or two
  /// tuples of the class with different values (the first below min(E)).
  std::vector<KTuple> witness;
};

struct RegRegReport {
  bool is_regular = false;
  std::map<OrderTypeSig, ClassVerdict> classes;
  std::size_t regressive_value_count = 0;
};

/// Classifies every order-type class present in E^k. Throws MissingDomain if
/// E^k is not inside domain(f).
RegRegReport check_regressively_regular(const FiniteFn& f, const GridE& grid);

/// {f(x) : x in X, f(x) < min(x)}.
std::set<Value> regressive_values(const FiniteFn& f, const std::vector<KTuple>& xs);
std::set<Value> regressive_values(const FiniteFn& f, const Domain& xs);

struct RegularFind {
  FiniteFn fn;
  GridE grid;
  RegRegReport report;
  std::size_t candidates_tried = 0;
};

/// Walks the p-subsets of `ground` in lexicographic order, builds
/// f = make_fn(spec, E^k) on each, and returns the first regular pair.
/// Gives up (nullopt) after `budget` candidates or when subsets run out.
std::optional<RegularFind> find_regressively_regular(const FamilySpec& spec, int k,
                                                     std::size_t p,
                                                     const std::set<Value>& ground,
                                                     std::size_t budget);

}  // namespace regreg
