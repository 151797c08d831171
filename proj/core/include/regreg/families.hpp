#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "regreg/ktuple.hpp"

namespace regreg {

/// A function with finite domain D in N^k and integer values.
///
/// Values are integers rather than naturals so the same type can also hold
/// an arbitrary signed map on E^k. Immutable once built.
class FiniteFn {
 public:
  /// Throws InvalidArgument if `values` is empty or has mixed arity.
  explicit FiniteFn(std::map<KTuple, Value> values);

  std::size_t arity() const noexcept { return k_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::map<KTuple, Value>& entries() const noexcept { return values_; }
  Domain domain() const;

  bool contains(const KTuple& x) const { return values_.count(x) != 0; }
  /// Throws MissingDomain when x is outside the domain.
  Value at(const KTuple& x) const;

  friend bool operator==(const FiniteFn&, const FiniteFn&) = default;

 private:
  std::size_t k_;
  std::map<KTuple, Value> values_;
};

enum class FamilyId { min, min_field, max_min, custom };

std::string_view to_string(FamilyId id) noexcept;
/// Accepts "MIN", "MIN_FIELD", "MAX_MIN" (case-insensitive).
std::optional<FamilyId> parse_family(std::string_view name);

/// Rule for CUSTOM families: value at x given the whole domain D, or
/// nullopt where the rule is undefined.
using FamilyRule = std::function<std::optional<Value>(const Domain& d, const KTuple& x)>;

/// Selects one member f_D of a family for every finite domain D.
///
///  - MIN:       f_D(x) = min(x)
///  - MIN_FIELD: f_D(x) = min(field(D_x + {x}))
///  - MAX_MIN:   f_D(x) = max{min(z) : z in D_x}, or min(x) when D_x is empty.
///               Not jump free; kept as a negative control.
///
/// MIN and MIN_FIELD are full (defined for every finite D), reflexive, and
/// jump free: growing D_x can only lower a minimum over it.
struct FamilySpec {
  FamilyId id = FamilyId::min;
  FamilyRule rule;  // only consulted for FamilyId::custom

  static FamilySpec min() { return {FamilyId::min, {}}; }
  static FamilySpec min_field() { return {FamilyId::min_field, {}}; }
  static FamilySpec max_min() { return {FamilyId::max_min, {}}; }
  static FamilySpec custom(FamilyRule r) { return {FamilyId::custom, std::move(r)}; }
};

/// Every coordinate of every tuple in `a`.
std::set<Value> field_of(const Domain& a);

/// D_x: the members of D whose max is strictly below max(x).
Domain restricted_domain(const Domain& d, const KTuple& x);

/// Throws InvalidArgument on an empty or mixed-arity domain, and
/// UndefinedRule when a custom rule has no value somewhere on D.
FiniteFn make_fn(const FamilySpec& spec, const Domain& d);

/// range(f) is contained in field(domain(f)).
bool check_reflexive(const FiniteFn& f);

struct JumpViolation {
  KTuple x;
  Value value_a;
  Value value_b;
};

/// First x (lexicographic) in A∩B where A_x ⊆ B_x, f_A = f_B on A_x, and
/// still f_A(x) < f_B(x). nullopt means the pair passes.
std::optional<JumpViolation> check_jump_free_pair(const FiniteFn& fa, const FiniteFn& fb);

/// Sampled stand-in for fullness: make_fn succeeds and is reflexive on every
/// sampled domain.
bool check_full_sample(const FamilySpec& spec, const std::vector<Domain>& domains);

}  // namespace regreg
