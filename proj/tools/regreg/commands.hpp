#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "regreg/families.hpp"
#include "regreg/serialize.hpp"
#include "regreg/solvers.hpp"

namespace regreg::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kExhausted = 3 };

/// Carries the process exit status a failure should map to.
class CommandError : public std::runtime_error {
 public:
  CommandError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

struct ClassesConfig {
  int k = 2;
  bool list = false;
};

/// {"k":K,"classes":N,"formula":N,"k_pow_k":K^K[,"signatures":[...]]}
Json cmd_classes(const ClassesConfig& cfg);

struct SequenceConfig {
  int k = 2;
  int t = 1;
  std::size_t p_max = 2;
  FamilyId family = FamilyId::min;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = ".";
  std::size_t budget = 10000;
  /// Overrides the default ground set for every p.
  std::optional<std::set<Value>> ground;
};

/// Smallest e0 >= 1 whose window (0, e0 k^k) fits min(floor(t log2 p^k), p^k)
/// distinct small offsets.
Value min_feasible_e0(int k, std::size_t p, int t);

/// {lo, ..., lo + 4p - 1} with lo = min_feasible_e0(k, p, t); this is
/// {1..4p} whenever e0 = 1 already leaves room for the small offsets.
std::set<Value> default_ground(int k, std::size_t p, int t);

struct SequenceItem {
  std::size_t p = 0;
  std::vector<Value> e;
  std::filesystem::path file;
  StructuredInstance instance;
};

/// Writes H_2.json .. H_pmax.json into out_dir (each via rename of a temp
/// file). On any failure the files written by this call are removed.
/// Throws CommandError(kExhausted) when the search budget runs out.
std::vector<SequenceItem> cmd_sequence(const SequenceConfig& cfg);
Json sequence_summary(const SequenceConfig& cfg, const std::vector<SequenceItem>& items);

enum class Engine { structured, mitm, dp };
std::optional<Engine> parse_engine(const std::string& name);

/// Throws CommandError(kUsage) for unreadable, malformed or invalid files.
SolveResult cmd_solve(const std::filesystem::path& instance_path, Engine engine);
SolveResult solve_with(const StructuredInstance& inst, Engine engine);

struct BenchConfig {
  int k = 2;
  int t = 1;
  std::size_t p_min = 2;
  std::size_t p_max = 2;
  std::uint64_t seed = 0;
  std::filesystem::path out_csv;
  bool allow_k3 = false;
  int repeats = 5;
};

struct BenchRow {
  std::size_t p = 0;
  std::uint64_t size = 0;  // p^k
  std::uint64_t comparisons = 0;
  std::uint64_t bound = 0;
  std::int64_t time_struct_ns = 0;
  std::optional<std::int64_t> time_mitm_ns;  // empty past the mitm size guard
};

/// One row per p (rows whose structured solve fails are skipped and reported
/// on `log`). Writes the CSV when out_csv is set.
std::vector<BenchRow> cmd_bench(const BenchConfig& cfg, std::ostream& log);
std::string bench_csv(const std::vector<BenchRow>& rows);

/// Least-squares slope of log(comparisons) against log(size).
double loglog_slope(const std::vector<BenchRow>& rows);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace regreg::cli
