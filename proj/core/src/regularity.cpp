#include "regreg/regularity.hpp"

#include <algorithm>

#include "regreg/error.hpp"

namespace regreg {

BlockPartition partition_blocks(const FiniteFn& f, const GridE& grid) {
  const Value e0 = grid.e0();
  BlockPartition blocks;
  for (const auto& x : grid.tuples()) {
    const Value v = f.at(x);
    if (v < e0) {
      blocks.below.insert(blocks.below.end(), x);
    } else if (v < x.min()) {
      blocks.between.insert(blocks.between.end(), x);
    } else {
      blocks.at_or_above.insert(blocks.at_or_above.end(), x);
    }
  }
  return blocks;
}

namespace {

ClassVerdict classify(const FiniteFn& f, const std::vector<KTuple>& members, Value e0) {
  const Value first = f.at(members.front());
  const bool constant_below =
      first < e0 && std::all_of(members.begin(), members.end(),
                                [&](const KTuple& x) { return f.at(x) == first; });
  if (constant_below) return {VerdictKind::constant_below_min, first, {}};

  auto regressive = std::find_if(members.begin(), members.end(),
                                 [&](const KTuple& x) { return f.at(x) < x.min(); });
  if (regressive == members.end()) return {VerdictKind::geq_min, std::nullopt, {}};

  const Value v = f.at(*regressive);
  if (v >= e0) return {VerdictKind::fail, std::nullopt, {*regressive}};
  // Below min(E) yet not constant: some member carries another value.
  auto other = std::find_if(members.begin(), members.end(),
                            [&](const KTuple& y) { return f.at(y) != v; });
  return {VerdictKind::fail, std::nullopt, {*regressive, *other}};
}

}  // namespace

RegRegReport check_regressively_regular(const FiniteFn& f, const GridE& grid) {
  std::map<OrderTypeSig, std::vector<KTuple>> by_class;
  const auto tuples = grid.tuples();
  for (const auto& x : tuples) by_class[signature(x)].push_back(x);

  RegRegReport report;
  report.is_regular = true;
  for (const auto& [sig, members] : by_class) {
    ClassVerdict verdict = classify(f, members, grid.e0());
    if (verdict.kind == VerdictKind::fail) report.is_regular = false;
    report.classes.emplace(sig, std::move(verdict));
  }
  report.regressive_value_count = regressive_values(f, tuples).size();
  return report;
}

std::set<Value> regressive_values(const FiniteFn& f, const std::vector<KTuple>& xs) {
  std::set<Value> out;
  for (const auto& x : xs) {
    const Value v = f.at(x);
    if (v < x.min()) out.insert(v);
  }
  return out;
}

std::set<Value> regressive_values(const FiniteFn& f, const Domain& xs) {
  return regressive_values(f, std::vector<KTuple>(xs.begin(), xs.end()));
}

std::optional<RegularFind> find_regressively_regular(const FamilySpec& spec, int k,
                                                     std::size_t p,
                                                     const std::set<Value>& ground,
                                                     std::size_t budget) {
  if (p < 2) throw Error(Errc::invalid_argument, "search needs p >= 2");
  if (ground.size() < p) throw Error(Errc::invalid_argument, "ground set smaller than p");
  if (budget == 0) throw Error(Errc::invalid_argument, "search budget must be >= 1");

  const std::vector<Value> g(ground.begin(), ground.end());
  const std::size_t n = g.size();
  std::vector<std::size_t> pick(p);
  for (std::size_t i = 0; i < p; ++i) pick[i] = i;

  for (std::size_t tried = 1; tried <= budget; ++tried) {
    std::set<Value> e;
    for (auto i : pick) e.insert(g[i]);
    GridE grid(std::move(e), k);
    FiniteFn f = make_fn(spec, grid.domain());
    RegRegReport report = check_regressively_regular(f, grid);
    if (report.is_regular) {
      return RegularFind{std::move(f), std::move(grid), std::move(report), tried};
    }

    // Next p-combination in lexicographic order.
    std::size_t i = p;
    while (i > 0 && pick[i - 1] == n - p + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace regreg
