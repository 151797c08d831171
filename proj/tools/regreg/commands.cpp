#include "regreg/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "regreg/error.hpp"
#include "regreg/ordertype.hpp"
#include "regreg/regularity.hpp"

namespace regreg::cli {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void usage(const std::string& what) { throw CommandError(kUsage, what); }

void check_run_params(int k, int t) {
  if (k < 2) usage("k must be >= 2");
  if (t < 1) usage("t must be >= 1");
}

void write_atomic(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << contents;
    out.flush();
    if (!out) throw CommandError(kFailure, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t per_p_seed(std::uint64_t seed, std::size_t p) { return seed ^ p; }

}  // namespace

Json cmd_classes(const ClassesConfig& cfg) {
  if (cfg.k < 2 || cfg.k > 6) usage("classes needs 2 <= k <= 6");
  const auto classes = enumerate_classes(cfg.k);
  const std::uint64_t formula = class_count_formula(cfg.k);
  if (classes.size() != formula) {
    throw CommandError(kFailure, "enumerated " + std::to_string(classes.size()) +
                                     " classes but the surjection sum is " +
                                     std::to_string(formula));
  }
  Json j;
  j["k"] = cfg.k;
  j["classes"] = classes.size();
  j["formula"] = formula;
  j["k_pow_k"] = k_pow_k(cfg.k);
  if (cfg.list) {
    Json sigs = Json::array();
    for (const auto& s : classes) sigs.push_back(s.to_string());
    j["signatures"] = std::move(sigs);
  }
  return j;
}

Value min_feasible_e0(int k, std::size_t p, int t) {
  const std::uint64_t tuples = [&] {
    std::uint64_t n = 1;
    for (int i = 0; i < k && n <= (std::uint64_t{1} << 40); ++i) n *= p;
    return n;
  }();
  const auto m = std::min<std::uint64_t>(small_offset_cap(p, k, t), tuples);
  const std::uint64_t kk = k_pow_k(k);
  // Need e0 * k^k - 1 >= m.
  return std::max<Value>(1, static_cast<Value>((m + 1 + kk - 1) / kk));
}

std::set<Value> default_ground(int k, std::size_t p, int t) {
  const Value lo = min_feasible_e0(k, p, t);
  std::set<Value> g;
  for (Value v = lo; v < lo + static_cast<Value>(4 * p); ++v) g.insert(v);
  return g;
}

std::vector<SequenceItem> cmd_sequence(const SequenceConfig& cfg) {
  check_run_params(cfg.k, cfg.t);
  if (cfg.p_max < 2) usage("pmax must be >= 2");
  if (cfg.budget < 1) usage("budget must be >= 1");
  if (cfg.family == FamilyId::custom) usage("CUSTOM families are library-only");

  fs::create_directories(cfg.out_dir);
  const FamilySpec spec{cfg.family, {}};
  std::vector<SequenceItem> items;
  try {
    for (std::size_t p = 2; p <= cfg.p_max; ++p) {
      const std::set<Value> ground = cfg.ground ? *cfg.ground : default_ground(cfg.k, p, cfg.t);
      if (ground.size() < p) usage("ground set has fewer than p elements");
      auto hit = find_regressively_regular(spec, cfg.k, p, ground, cfg.budget);
      if (!hit) {
        throw CommandError(kExhausted, "NotFound: no regressively regular (f, E) for p=" +
                                           std::to_string(p) + " within budget " +
                                           std::to_string(cfg.budget));
      }
      const RhoFn rho = gen_rho_tlog(hit->grid, cfg.t, per_p_seed(cfg.seed, p));
      StructuredInstance inst;
      try {
        inst = build_structured(hit->fn, hit->grid, rho, cfg.t);
      } catch (const Error& e) {
        throw CommandError(e.code() == Errc::not_regular ? kExhausted : kFailure,
                           "p=" + std::to_string(p) + ": " + e.what());
      }
      SequenceItem item{p, hit->grid.elements(), cfg.out_dir / ("H_" + std::to_string(p) + ".json"),
                        std::move(inst)};
      write_atomic(item.file, serialize_instance(item.instance));
      items.push_back(std::move(item));
    }
  } catch (...) {
    for (const auto& item : items) {
      std::error_code ec;
      fs::remove(item.file, ec);
    }
    throw;
  }
  return items;
}

Json sequence_summary(const SequenceConfig& cfg, const std::vector<SequenceItem>& items) {
  Json list = Json::array();
  for (const auto& item : items) {
    Json e;
    e["p"] = item.p;
    e["E"] = item.e;
    e["file"] = item.file.filename().string();
    std::uint64_t size = 1;
    for (int i = 0; i < cfg.k; ++i) size *= item.p;
    e["size"] = size;
    e["negatives"] = item.instance.negatives.size();
    e["small_positives"] = item.instance.small_positives.size();
    e["large_positives"] = item.instance.large_positives.size();
    e["dropped_zeros"] = item.instance.dropped_zeros;
    list.push_back(std::move(e));
  }
  Json j;
  j["k"] = cfg.k;
  j["t"] = cfg.t;
  j["family"] = std::string(to_string(cfg.family));
  j["seed"] = cfg.seed;
  j["instances"] = std::move(list);
  return j;
}

std::optional<Engine> parse_engine(const std::string& name) {
  if (name == "structured") return Engine::structured;
  if (name == "mitm") return Engine::mitm;
  if (name == "dp") return Engine::dp;
  return std::nullopt;
}

SolveResult solve_with(const StructuredInstance& inst, Engine engine) {
  switch (engine) {
    case Engine::structured:
      return solve_structured(inst);
    case Engine::mitm:
      return solve_mitm(inst.values());
    case Engine::dp:
      return solve_dp(inst.values());
  }
  throw CommandError(kUsage, "unknown engine");
}

SolveResult cmd_solve(const fs::path& instance_path, Engine engine) {
  try {
    return solve_with(parse_instance(read_file(instance_path)), engine);
  } catch (const Error& e) {
    usage(instance_path.string() + ": " + e.what());
  }
}

std::vector<BenchRow> cmd_bench(const BenchConfig& cfg, std::ostream& log) {
  check_run_params(cfg.k, cfg.t);
  if (cfg.k > 3 || (cfg.k == 3 && !cfg.allow_k3)) {
    usage("bench runs k=2 (k=3 needs --allow-k3)");
  }
  if (cfg.p_min < 2 || cfg.p_min > cfg.p_max) usage("empty or invalid p range");
  if (cfg.k == 3) {
    log << "warning: k=3 puts 2^27 in front of the comparison bound\n";
  }

  using Clock = std::chrono::steady_clock;
  auto time_best = [&](auto&& fn) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int r = 0; r < std::max(1, cfg.repeats); ++r) {
      const auto start = Clock::now();
      fn();
      const auto ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
      best = std::min<std::int64_t>(best, ns);
    }
    return best;
  };

  std::vector<BenchRow> rows;
  for (std::size_t p = cfg.p_min; p <= cfg.p_max; ++p) {
    try {
      auto hit = find_regressively_regular(FamilySpec::min(), cfg.k, p,
                                           default_ground(cfg.k, p, cfg.t), 1);
      if (!hit) throw Error(Errc::not_regular, "MIN not regular on first E");
      const RhoFn rho = gen_rho_tlog(hit->grid, cfg.t, per_p_seed(cfg.seed, p));
      const StructuredInstance inst = build_structured(hit->fn, hit->grid, rho, cfg.t);

      BenchRow row;
      row.p = p;
      row.size = hit->grid.size();
      row.bound = comparison_bound(cfg.k, p, cfg.t);
      SolveResult res;
      row.time_struct_ns = time_best([&] { res = solve_structured(inst); });
      row.comparisons = res.stats.comparisons;

      const auto values = inst.values();
      if (values.size() <= kMitmMaxValues) {
        row.time_mitm_ns = time_best([&] { solve_mitm(values, {.prune = false}); });
      } else {
        log << "p=" << p << ": mitm guard (" << values.size() << " values > "
            << kMitmMaxValues << "), time_mitm_ns left empty\n";
      }
      rows.push_back(row);
    } catch (const Error& e) {
      log << "p=" << p << ": row skipped: " << e.what() << "\n";
    }
  }
  if (!cfg.out_csv.empty()) write_atomic(cfg.out_csv, bench_csv(rows));
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "p,size,comparisons,bound,time_struct_ns,time_mitm_ns\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.size << ',' << r.comparisons << ',' << r.bound << ','
       << r.time_struct_ns << ',';
    if (r.time_mitm_ns) os << *r.time_mitm_ns;
    os << '\n';
  }
  return os.str();
}

double loglog_slope(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) return std::nan("");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double x = std::log(static_cast<double>(r.size));
    const double y = std::log(static_cast<double>(std::max<std::uint64_t>(r.comparisons, 1)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(rows.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("REGREG_SEED");
  if (!env || !*env) return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    usage(std::string("REGREG_SEED is not an unsigned integer: ") + env);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structured subset-sum instances from regressively regular functions"};
  app.name("regreg");
  app.require_subcommand(1);

  ClassesConfig classes_cfg;
  auto* classes = app.add_subcommand("classes", "Count order-type classes of k-tuples");
  classes->add_option("-k", classes_cfg.k, "Tuple arity (2..6)")->required();
  classes->add_flag("--list", classes_cfg.list, "Print every signature");

  SequenceConfig seq_cfg;
  std::string family_name = "MIN";
  std::optional<Value> ground_min, ground_max;
  auto* sequence = app.add_subcommand("sequence", "Write instance files H_2..H_pmax");
  sequence->add_option("-k", seq_cfg.k, "Tuple arity")->required();
  sequence->add_option("-t", seq_cfg.t, "Log-bound multiplier")->required();
  sequence->add_option("--pmax", seq_cfg.p_max, "Largest p")->required();
  sequence->add_option("--family", family_name, "MIN | MIN_FIELD | MAX_MIN");
  sequence->add_option("--seed", seq_cfg.seed, "Base seed (REGREG_SEED overrides)");
  sequence->add_option("--budget", seq_cfg.budget, "Candidate E-sets tried per p");
  sequence->add_option("--ground-min", ground_min, "Smallest ground-set element");
  sequence->add_option("--ground-max", ground_max, "Largest ground-set element");
  sequence->add_option("-o,--out", seq_cfg.out_dir, "Output directory")->required();

  std::string solve_path;
  std::string engine_name = "structured";
  auto* solve = app.add_subcommand("solve", "Solve an instance file (target 0)");
  solve->add_option("file", solve_path, "Instance JSON")->required();
  solve->add_option("--engine", engine_name, "structured | mitm | dp");

  BenchConfig bench_cfg;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Scaling benchmark, CSV output");
  bench->add_option("-k", bench_cfg.k, "Tuple arity (2; 3 with --allow-k3)")->required();
  bench->add_option("-t", bench_cfg.t, "Log-bound multiplier")->required();
  bench->add_option("--pmin", bench_cfg.p_min, "Smallest p")->required();
  bench->add_option("--pmax", bench_cfg.p_max, "Largest p")->required();
  bench->add_option("--seed", bench_cfg.seed, "Base seed (REGREG_SEED overrides)");
  bench->add_option("--repeats", bench_cfg.repeats, "Timing repetitions per row");
  bench->add_flag("--allow-k3", bench_cfg.allow_k3, "Permit k=3");
  bench->add_option("-o,--out", bench_out, "CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classes) {
      out << cmd_classes(classes_cfg).dump() << '\n';
    } else if (*sequence) {
      auto family = parse_family(family_name);
      if (!family) usage("unknown family '" + family_name + "'");
      seq_cfg.family = *family;
      seq_cfg.seed = seed_from_env(seq_cfg.seed);
      if (ground_min || ground_max) {
        if (!ground_min || !ground_max || *ground_min < 0 || *ground_min > *ground_max) {
          usage("--ground-min and --ground-max must be given together, 0 <= min <= max");
        }
        std::set<Value> g;
        for (Value v = *ground_min; v <= *ground_max; ++v) g.insert(v);
        seq_cfg.ground = std::move(g);
      }
      const auto items = cmd_sequence(seq_cfg);
      out << sequence_summary(seq_cfg, items).dump() << '\n';
    } else if (*solve) {
      auto engine = parse_engine(engine_name);
      if (!engine) usage("unknown engine '" + engine_name + "'");
      out << to_json(cmd_solve(solve_path, *engine)).dump() << '\n';
    } else if (*bench) {
      bench_cfg.seed = seed_from_env(bench_cfg.seed);
      bench_cfg.out_csv = bench_out;
      const auto rows = cmd_bench(bench_cfg, err);
      if (bench_out.empty()) out << bench_csv(rows);
    }
    return kOk;
  } catch (const CommandError& e) {
    err << "regreg: " << e.what() << '\n';
    return e.exit_code();
  } catch (const Error& e) {
    const bool input = e.code() == Errc::invalid_argument || e.code() == Errc::parse_error ||
                       e.code() == Errc::too_large ||
                       e.code() == Errc::infeasible_small_range;
    err << "regreg: " << e.what() << '\n';
    return input ? kUsage : kFailure;
  } catch (const std::exception& e) {
    err << "regreg: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace regreg::cli
