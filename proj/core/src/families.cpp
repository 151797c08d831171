#include "regreg/families.hpp"

#include <algorithm>
#include <cctype>

#include "regreg/error.hpp"

namespace regreg {

FiniteFn::FiniteFn(std::map<KTuple, Value> values) : k_(0), values_(std::move(values)) {
  if (values_.empty()) throw Error(Errc::invalid_argument, "function domain is empty");
  k_ = values_.begin()->first.arity();
  for (const auto& [x, v] : values_) {
    if (x.arity() != k_) {
      throw Error(Errc::invalid_argument, "mixed-arity domain: " + x.to_string());
    }
  }
}

Domain FiniteFn::domain() const {
  Domain d;
  for (const auto& entry : values_) d.insert(d.end(), entry.first);
  return d;
}

Value FiniteFn::at(const KTuple& x) const {
  auto it = values_.find(x);
  if (it == values_.end()) {
    throw Error(Errc::missing_domain, x.to_string() + " is not in the domain");
  }
  return it->second;
}

std::string_view to_string(FamilyId id) noexcept {
  switch (id) {
    case FamilyId::min: return "MIN";
    case FamilyId::min_field: return "MIN_FIELD";
    case FamilyId::max_min: return "MAX_MIN";
    case FamilyId::custom: return "CUSTOM";
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "MIN") return FamilyId::min;
  if (upper == "MIN_FIELD") return FamilyId::min_field;
  if (upper == "MAX_MIN") return FamilyId::max_min;
  return std::nullopt;
}

std::set<Value> field_of(const Domain& a) {
  std::set<Value> out;
  for (const auto& x : a) out.insert(x.coords().begin(), x.coords().end());
  return out;
}

Domain restricted_domain(const Domain& d, const KTuple& x) {
  Domain out;
  for (const auto& z : d) {
    if (z.max() < x.max()) out.insert(out.end(), z);
  }
  return out;
}

namespace {

Value min_field_rule(const Domain& d, const KTuple& x) {
  Value m = x.min();
  for (const auto& z : d) {
    if (z.max() < x.max()) m = std::min(m, z.min());
  }
  return m;
}

Value max_min_rule(const Domain& d, const KTuple& x) {
  std::optional<Value> best;
  for (const auto& z : d) {
    if (z.max() < x.max()) best = std::max(best.value_or(z.min()), z.min());
  }
  return best.value_or(x.min());
}

}  // namespace

FiniteFn make_fn(const FamilySpec& spec, const Domain& d) {
  domain_arity(d);
  std::map<KTuple, Value> values;
  for (const auto& x : d) {
    Value v = 0;
    switch (spec.id) {
      case FamilyId::min:
        v = x.min();
        break;
      case FamilyId::min_field:
        v = min_field_rule(d, x);
        break;
      case FamilyId::max_min:
        v = max_min_rule(d, x);
        break;
      case FamilyId::custom: {
        if (!spec.rule) throw Error(Errc::undefined_rule, "custom family without a rule");
        auto r = spec.rule(d, x);
        if (!r) throw Error(Errc::undefined_rule, "custom rule undefined at " + x.to_string());
        v = *r;
        break;
      }
    }
    values.emplace_hint(values.end(), x, v);
  }
  return FiniteFn(std::move(values));
}

bool check_reflexive(const FiniteFn& f) {
  const auto field = field_of(f.domain());
  return std::all_of(f.entries().begin(), f.entries().end(),
                     [&](const auto& e) { return field.count(e.second) != 0; });
}

std::optional<JumpViolation> check_jump_free_pair(const FiniteFn& fa, const FiniteFn& fb) {
  if (fa.arity() != fb.arity()) {
    throw Error(Errc::invalid_argument, "jump-free check needs equal arity");
  }
  const Domain a = fa.domain();
  const Domain b = fb.domain();
  for (const auto& x : a) {
    if (!b.count(x)) continue;
    const Domain ax = restricted_domain(a, x);
    const Domain bx = restricted_domain(b, x);
    if (!std::includes(bx.begin(), bx.end(), ax.begin(), ax.end())) continue;
    const bool agree = std::all_of(ax.begin(), ax.end(),
                                   [&](const KTuple& y) { return fa.at(y) == fb.at(y); });
    if (!agree) continue;
    if (fa.at(x) < fb.at(x)) return JumpViolation{x, fa.at(x), fb.at(x)};
  }
  return std::nullopt;
}

bool check_full_sample(const FamilySpec& spec, const std::vector<Domain>& domains) {
  for (const auto& d : domains) {
    try {
      if (!check_reflexive(make_fn(spec, d))) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

}  // namespace regreg
