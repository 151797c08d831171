#pragma once

// Seeded generators shared by the unit and acceptance suites.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "regreg/families.hpp"
#include "regreg/grid.hpp"
#include "regreg/instances.hpp"
#include "regreg/ordertype.hpp"

namespace fixtures {

using regreg::Domain;
using regreg::KTuple;
using regreg::Value;
using Rng = std::mt19937_64;

inline Value draw(Rng& rng, Value lo, Value hi) {  // inclusive
  return lo + static_cast<Value>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline KTuple random_tuple(Rng& rng, int k, Value max_coord) {
  std::vector<Value> c(k);
  for (auto& v : c) v = draw(rng, 0, max_coord);
  return KTuple(std::move(c));
}

inline Domain random_domain(Rng& rng, int k, Value max_coord, std::size_t max_size) {
  Domain d;
  const auto target = static_cast<std::size_t>(draw(rng, 1, static_cast<Value>(max_size)));
  while (d.size() < target) d.insert(random_tuple(rng, k, max_coord));
  return d;
}

/// A ⊆ B when `nested`, otherwise two domains with a forced common tuple.
inline std::pair<Domain, Domain> random_domain_pair(Rng& rng, int k, Value max_coord,
                                                    std::size_t max_size, bool nested) {
  Domain a = random_domain(rng, k, max_coord, max_size);
  Domain b;
  if (nested) {
    b = a;
    const std::size_t extra = static_cast<std::size_t>(draw(rng, 0, 4));
    for (std::size_t i = 0; i < extra && b.size() < max_size; ++i) {
      b.insert(random_tuple(rng, k, max_coord));
    }
  } else {
    b = random_domain(rng, k, max_coord, max_size - 1);
    b.insert(*a.begin());
  }
  return {a, b};
}

inline regreg::GridE random_grid(Rng& rng, int k, std::size_t p, Value lo, Value hi) {
  std::set<Value> e;
  while (e.size() < p) e.insert(draw(rng, lo, hi));
  return regreg::GridE(std::move(e), k);
}

/// A function on E^k that is regressively regular by construction: each
/// order-type class is either sent to one value in [0, e0) or kept >= min(x).
inline regreg::FiniteFn random_regular_fn(Rng& rng, const regreg::GridE& grid) {
  std::map<regreg::OrderTypeSig, std::pair<bool, Value>> plan;
  std::map<KTuple, Value> values;
  for (const auto& x : grid.tuples()) {
    auto sig = regreg::signature(x);
    auto it = plan.find(sig);
    if (it == plan.end()) {
      const bool below = grid.e0() > 0 && rng() % 2 == 0;
      it = plan.emplace(sig, std::make_pair(below, below ? draw(rng, 0, grid.e0() - 1) : 0)).first;
    }
    values.emplace(x, it->second.first ? it->second.second : x.min() + draw(rng, 0, 2));
  }
  return regreg::FiniteFn(std::move(values));
}

struct Built {
  regreg::GridE grid;
  regreg::FiniteFn fn;
  regreg::StructuredInstance instance;
};

/// A structured instance from a random regular f over a random E whose e0
/// leaves room for the small offsets.
inline Built random_structured(Rng& rng, int k, std::size_t p, int t) {
  const auto tuples = [&] {
    std::size_t n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    return n;
  }();
  const auto m = std::min(regreg::small_offset_cap(p, k, t), tuples);
  const auto kk = static_cast<Value>(regreg::k_pow_k(k));
  const Value lo = std::max<Value>(1, (static_cast<Value>(m) + kk) / kk);
  auto grid = random_grid(rng, k, p, lo, lo + 3 * static_cast<Value>(p) + 6);
  auto fn = random_regular_fn(rng, grid);
  auto rho = regreg::gen_rho_tlog(grid, t, rng());
  auto inst = regreg::build_structured(fn, grid, rho, t);
  return {std::move(grid), std::move(fn), std::move(inst)};
}

}  // namespace fixtures
