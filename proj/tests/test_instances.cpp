#include <gtest/gtest.h>

#include "regreg/error.hpp"
#include "regreg/instances.hpp"
#include "regreg/regularity.hpp"
#include "regreg/serialize.hpp"
#include "regreg/solvers.hpp"
#include "support/fixtures.hpp"

namespace {

using regreg::Errc;
using regreg::FamilySpec;
using regreg::FiniteFn;
using regreg::GridE;
using regreg::KTuple;
using regreg::RhoFn;
using regreg::Value;

template <typename F>
Errc error_code(F&& fn) {
  try {
    fn();
  } catch (const regreg::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no regreg::Error thrown";
  return Errc::invalid_argument;
}

RhoFn rho_with_offsets(const GridE& grid, const std::vector<Value>& offsets) {
  std::map<KTuple, Value> v;
  const auto ts = grid.tuples();
  for (std::size_t i = 0; i < ts.size(); ++i) v.emplace(ts[i], ts[i].min() + offsets.at(i));
  return RhoFn(v);
}

FiniteFn constant_on(const GridE& grid, Value c) {
  std::map<KTuple, Value> v;
  for (const auto& x : grid.tuples()) v.emplace(x, c);
  return FiniteFn(v);
}

std::set<Value> small_offsets(const RhoFn& rho, const GridE& grid) {
  std::set<Value> s;
  const Value th = grid.e0() * static_cast<Value>(regreg::k_pow_k(grid.k()));
  for (const auto& x : grid.tuples()) {
    const Value off = rho.at(x) - x.min();
    if (off > 0 && off < th) s.insert(off);
  }
  return s;
}

TEST(SmallOffsetCap, FloorOfTLog2) {
  EXPECT_EQ(regreg::small_offset_cap(2, 2, 1), 2u);   // log2 4
  EXPECT_EQ(regreg::small_offset_cap(3, 2, 1), 3u);   // log2 9 = 3.17
  EXPECT_EQ(regreg::small_offset_cap(6, 2, 2), 10u);  // 2 log2 36 = 10.34
  EXPECT_EQ(regreg::small_offset_cap(32, 2, 1), 10u);
  EXPECT_EQ(regreg::small_offset_cap(5, 3, 3), 20u);  // 9 log2 5 = 20.9
}

TEST(Bounds, ComparisonAndEnumeration) {
  EXPECT_EQ(regreg::comparison_bound(2, 2, 1), 64u);
  EXPECT_EQ(regreg::comparison_bound(2, 32, 1), 16u * 1024u);
  EXPECT_EQ(regreg::comparison_bound(3, 2, 1), (std::uint64_t{1} << 27) * 8u);
  EXPECT_EQ(regreg::enumeration_bound(2, 3, 2), 16u + 81u);
}

TEST(GenRho, SmallWindowExample) {
  const GridE grid({4, 9}, 2);
  const RhoFn rho = regreg::gen_rho_tlog(grid, 1, 42);
  EXPECT_EQ(small_offsets(rho, grid).size(), 2u);
  for (const auto& x : grid.tuples()) EXPECT_GE(rho.at(x), x.min());
  for (Value off : small_offsets(rho, grid)) {
    EXPECT_GT(off, 0);
    EXPECT_LT(off, 16);
  }
  EXPECT_TRUE(regreg::check_tlog_bounded(rho, grid, 1));
}

TEST(GenRho, HugeTMakesEveryOffsetSmall) {
  const GridE grid({4, 9}, 2);
  const RhoFn rho = regreg::gen_rho_tlog(grid, 100, 1);
  EXPECT_EQ(small_offsets(rho, grid).size(), 4u);
  EXPECT_TRUE(regreg::check_tlog_bounded(rho, grid, 100));
}

TEST(GenRho, Feasibility) {
  // e0 k^k = 4 leaves {1,2,3}.
  EXPECT_NO_THROW(regreg::gen_rho_tlog(GridE({1, 2}, 2), 1, 0));
  EXPECT_NO_THROW(regreg::gen_rho_tlog(GridE({1, 2, 3}, 2), 1, 0));
  EXPECT_EQ(error_code([] { regreg::gen_rho_tlog(GridE({1, 2, 3, 4}, 2), 1, 0); }),
            Errc::infeasible_small_range);
  EXPECT_EQ(error_code([] { regreg::gen_rho_tlog(GridE({0, 1}, 2), 1, 0); }),
            Errc::infeasible_small_range);
  EXPECT_EQ(error_code([] { regreg::gen_rho_tlog(GridE({4, 9}, 2), 0, 0); }),
            Errc::invalid_argument);
}

TEST(GenRho, PropertiesOverSeeds) {
  fixtures::Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const int k = 2 + i % 2;
    const std::size_t p = 2 + rng() % 4;
    const int t = 1 + static_cast<int>(rng() % 3);
    const GridE grid = fixtures::random_grid(rng, k, p, 6, 40);
    const auto seed = rng();
    const RhoFn rho = regreg::gen_rho_tlog(grid, t, seed);
    for (const auto& x : grid.tuples()) EXPECT_GE(rho.at(x), x.min());
    const std::size_t m = std::min(regreg::small_offset_cap(p, k, t), grid.size());
    EXPECT_EQ(small_offsets(rho, grid).size(), m);
    EXPECT_TRUE(regreg::check_tlog_bounded(rho, grid, t));
    EXPECT_EQ(rho, regreg::gen_rho_tlog(grid, t, seed));
  }
}

TEST(RhoFn, RejectsValuesBelowMin) {
  EXPECT_THROW(RhoFn({{KTuple{3, 4}, 2}}), regreg::Error);
}

TEST(GenGamma, RangeAndDeterminism) {
  const GridE grid({1, 2, 3}, 2);
  EXPECT_THROW(regreg::gen_gamma(grid, 1, 0), regreg::Error);
  const auto g = regreg::gen_gamma(grid, 5, 1);
  for (const auto& [x, v] : g.entries()) {
    EXPECT_GE(v, -1);
    EXPECT_LE(v, 1);
  }
  EXPECT_EQ(g.entries().size(), 9u);
  EXPECT_EQ(g, regreg::gen_gamma(grid, 5, 1));
}

TEST(GenGamma, SeedsDiffer) {
  const GridE grid({1, 2, 3}, 2);
  std::set<std::map<KTuple, Value>> seen;
  for (std::uint64_t s = 0; s < 100; ++s) seen.insert(regreg::gen_gamma(grid, s, 1).entries());
  // 3^9 possible maps; 100 draws collide with probability well under 1%.
  EXPECT_GE(seen.size(), 98u);
}

TEST(CheckTlog, Examples) {
  const GridE grid({4, 9}, 2);
  EXPECT_TRUE(regreg::check_tlog_bounded(rho_with_offsets(grid, {0, 0, 0, 0}), grid, 1));
  EXPECT_FALSE(regreg::check_tlog_bounded(rho_with_offsets(grid, {1, 2, 3, 40}), grid, 1));
  // Repeated small offsets count once.
  EXPECT_TRUE(regreg::check_tlog_bounded(rho_with_offsets(grid, {1, 2, 2, 1}), grid, 1));
}

TEST(BuildDeltas, Examples) {
  const GridE g25({2, 5}, 2);
  const auto min25 = regreg::make_fn(FamilySpec::min(), g25.domain());
  const auto rho25 = rho_with_offsets(g25, {1, 5, 9, 100});
  const auto gamma25 = regreg::gen_gamma(g25, 3, 10);
  auto d = regreg::build_deltas(min25, g25, rho25, gamma25);
  EXPECT_TRUE(d.below.empty());
  EXPECT_TRUE(d.between.empty());
  EXPECT_EQ(d.at_or_above, (std::set<Value>{1, 5, 9, 100}));

  const GridE g35({3, 5}, 2);
  const auto rho35 = rho_with_offsets(g35, {2, 4, 6, 8});
  const auto gamma35 = regreg::gen_gamma(g35, 3, 10);
  d = regreg::build_deltas(constant_on(g35, 1), g35, rho35, gamma35);
  EXPECT_EQ(d.below, (std::set<Value>{-2}));
  EXPECT_TRUE(d.between.empty());
  EXPECT_TRUE(d.at_or_above.empty());

  // Constant 3: E1 = {(5,5)}, E2 = the other three tuples.
  d = regreg::build_deltas(constant_on(g35, 3), g35, rho35, gamma35);
  EXPECT_TRUE(d.below.empty());
  EXPECT_EQ(d.between, (std::set<Value>{gamma35.at(KTuple{5, 5})}));
  EXPECT_EQ(d.at_or_above, (std::set<Value>{2, 4, 6}));
}

TEST(BuildDeltas, MissingDomain) {
  const GridE grid({3, 5}, 2);
  const auto gamma = regreg::gen_gamma(grid, 3, 10);
  const RhoFn partial({{KTuple{3, 3}, 3}});
  EXPECT_EQ(error_code([&] {
              regreg::build_deltas(constant_on(grid, 3), grid, partial, gamma);
            }),
            Errc::missing_domain);
}

TEST(BuildStructured, MinSplitsAtThreshold) {
  const GridE grid({4, 9}, 2);
  const auto f = regreg::make_fn(FamilySpec::min(), grid.domain());
  const auto inst = regreg::build_structured(f, grid, rho_with_offsets(grid, {3, 7, 64, 80}), 1);
  EXPECT_EQ(inst.threshold(), 16);
  EXPECT_TRUE(inst.negatives.empty());
  EXPECT_EQ(inst.small_positives, (std::vector<Value>{3, 7}));
  EXPECT_EQ(inst.large_positives, (std::vector<Value>{64, 80}));
  EXPECT_EQ(inst.dropped_zeros, 0u);
}

TEST(BuildStructured, ConstantBelowGivesOneNegative) {
  const GridE grid({3, 5}, 2);
  const auto inst =
      regreg::build_structured(constant_on(grid, 1), grid, rho_with_offsets(grid, {0, 0, 0, 0}), 1);
  EXPECT_EQ(inst.negatives, (std::vector<Value>{-2}));
  EXPECT_TRUE(inst.small_positives.empty());
  EXPECT_TRUE(inst.large_positives.empty());
}

TEST(BuildStructured, ZeroValuedFunctionReachesMinusE0) {
  const GridE grid({3, 5}, 2);
  const auto inst =
      regreg::build_structured(constant_on(grid, 0), grid, rho_with_offsets(grid, {0, 0, 0, 0}), 1);
  EXPECT_EQ(inst.negatives, (std::vector<Value>{-3}));
}

TEST(BuildStructured, ZerosDroppedOrKept) {
  const GridE grid({4, 9}, 2);
  const auto f = regreg::make_fn(FamilySpec::min(), grid.domain());
  const auto rho = rho_with_offsets(grid, {0, 7, 0, 80});
  const auto dropped = regreg::build_structured(f, grid, rho, 1);
  EXPECT_EQ(dropped.dropped_zeros, 2u);
  EXPECT_FALSE(dropped.zero_kept);
  const auto values = dropped.values();
  EXPECT_EQ(std::count(values.begin(), values.end(), 0), 0);

  const auto kept = regreg::build_structured(f, grid, rho, 1, /*keep_zeros=*/true);
  EXPECT_TRUE(kept.zero_kept);
  EXPECT_EQ(kept.dropped_zeros, 0u);
  const auto r = regreg::solve_structured(kept);
  EXPECT_EQ(r.status, regreg::SolveStatus::trivial_zero);
  EXPECT_EQ(r.witness, (std::vector<Value>{0}));
  EXPECT_THROW(regreg::serialize_instance(kept), regreg::Error);
}

TEST(BuildStructured, Errors) {
  const GridE grid({2, 5}, 2);
  const auto mf = regreg::make_fn(FamilySpec::min_field(), grid.domain());
  EXPECT_EQ(error_code([&] {
              regreg::build_structured(mf, grid, rho_with_offsets(grid, {0, 0, 0, 0}), 1);
            }),
            Errc::not_regular);

  const GridE g49({4, 9}, 2);
  const auto min49 = regreg::make_fn(FamilySpec::min(), g49.domain());
  EXPECT_EQ(error_code([&] {
              regreg::build_structured(min49, g49, rho_with_offsets(g49, {1, 2, 3, 40}), 1);
            }),
            Errc::not_tlog_bounded);

  const GridE g35({3, 5}, 2);
  EXPECT_EQ(error_code([&] {
              regreg::build_structured(constant_on(g35, -1), g35,
                                       rho_with_offsets(g35, {0, 0, 0, 0}), 1);
            }),
            Errc::negative_out_of_range);
}

TEST(BuildStructured, InvariantsOverSeededBuilds) {
  fixtures::Rng rng(1000);
  int with_negatives = 0;
  for (int i = 0; i < 1000; ++i) {
    const int k = 2 + i % 2;
    const std::size_t p = 2 + (i / 2) % 4;
    const int t = 1 + (i / 8) % 3;
    const auto built = fixtures::random_structured(rng, k, p, t);
    const auto& inst = built.instance;
    EXPECT_NO_THROW(inst.validate());
    EXPECT_LE(inst.negatives.size(), regreg::enumerate_classes(k).size());
    EXPECT_LT(inst.negatives.size(), regreg::k_pow_k(k));
    EXPECT_LE(inst.small_positives.size(), regreg::small_offset_cap(p, k, t));
    for (Value v : inst.negatives) {
      EXPECT_GE(v, -inst.e0);
      EXPECT_LT(v, 0);
    }
    for (Value v : inst.small_positives) {
      EXPECT_GT(v, 0);
      EXPECT_LT(v, inst.threshold());
    }
    for (Value v : inst.large_positives) EXPECT_GE(v, inst.threshold());
    if (!inst.negatives.empty()) ++with_negatives;
  }
  EXPECT_GT(with_negatives, 500);
}

TEST(BuildStructured, Deterministic) {
  const GridE grid({3, 7, 8}, 2);
  const auto f = regreg::make_fn(FamilySpec::min(), grid.domain());
  const auto a = regreg::build_structured(f, grid, regreg::gen_rho_tlog(grid, 2, 77), 2);
  const auto b = regreg::build_structured(f, grid, regreg::gen_rho_tlog(grid, 2, 77), 2);
  EXPECT_EQ(regreg::serialize_instance(a), regreg::serialize_instance(b));
}

TEST(StructuredInstance, ValidateCatchesBadRanges) {
  regreg::StructuredInstance inst;
  inst.k = 2;
  inst.p = 2;
  inst.t = 1;
  inst.e0 = 6;
  inst.negatives = {-5, -3};
  inst.small_positives = {8};
  inst.large_positives = {100};
  EXPECT_NO_THROW(inst.validate());

  auto bad = inst;
  bad.negatives = {-7};
  EXPECT_EQ(error_code([&] { bad.validate(); }), Errc::invariant_violation);
  bad = inst;
  bad.small_positives = {24};
  EXPECT_EQ(error_code([&] { bad.validate(); }), Errc::invariant_violation);
  bad = inst;
  bad.small_positives = {1, 2, 3};  // cap is 2 for p=2, k=2, t=1
  EXPECT_EQ(error_code([&] { bad.validate(); }), Errc::invariant_violation);
  bad = inst;
  bad.negatives = {-3, -5};
  EXPECT_EQ(error_code([&] { bad.validate(); }), Errc::invariant_violation);
  bad = inst;
  bad.large_positives = {100, 101, 102};  // 6 values > p^k = 4
  EXPECT_EQ(error_code([&] { bad.validate(); }), Errc::invariant_violation);
}

}  // namespace
