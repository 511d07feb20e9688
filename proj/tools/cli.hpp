#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mpcstats/cost.hpp"
#include "mpcstats/engine.hpp"
#include "mpcstats/stats.hpp"

namespace mpcstats::cli {

enum class Program { StdDev, StdDevUnoptimized, ChiSq, ChiSqUnoptimized };
enum class OutputFormat { Human, KeyValue, Json };

std::string_view program_name(Program p);
std::optional<Program> parse_program(std::string_view name);
std::optional<OutputFormat> parse_format(std::string_view name);
bool is_chisq(Program p);

struct RunConfig {
  Program program = Program::StdDev;
  int parties = 3;
  int threshold = 1;
  std::string prime;  // empty: 2^255 - 19
  std::uint64_t seed = 1;
  int frac_bits = 20;
  int max_bits = 100;
  int prec = 1;
  std::optional<int> iterations;
  CostProfile profile = CostProfile::Default;
  std::vector<std::filesystem::path> inputs;
  std::optional<int> input_parties;
  OutputFormat format = OutputFormat::Human;

  EngineConfig engine() const;
  // Party constraints, input count, program parameters.
  void validate() const;
};

// ---- input files --------------------------------------------------------

// `# seed=<u64> party=<id>` header followed by data lines. Lines starting
// with '#' are comments; blank lines are skipped.
struct InputFile {
  std::optional<std::uint64_t> seed;
  std::optional<int> party;
  std::vector<std::vector<std::int64_t>> rows;
};

// Throws ParseError naming file and line.
InputFile read_input_file(const std::filesystem::path& path);
void write_input_file(const std::filesystem::path& path, std::uint64_t seed, int party,
                      const std::vector<std::vector<std::int64_t>>& rows);

StdDevInput load_stddev_input(const std::vector<std::filesystem::path>& paths);
ChiSqInput load_chisq_input(const std::vector<std::filesystem::path>& paths);

// Throws DomainError naming the first row or column whose sum is zero.
void check_marginals(const ChiSqInput& input);

// ---- reports ------------------------------------------------------------

struct Report {
  std::string program;
  std::map<std::string, std::string> settings;
  FixedValue result;
  std::optional<std::int64_t> degrees_of_freedom;
  CostSummary ledger;
  std::vector<PhaseCost> phases;
  double wall_seconds = 0.0;  // human format only
};

Report run_program(const RunConfig& config);

// key=value lines in a fixed order; no timing so reruns are byte-identical.
std::string format_kv(const Report& report);
std::string format_json(const Report& report);
std::string format_human(const Report& report);
// Recovers program, result, df, ledger and phases from format_kv output.
Report parse_kv(const std::string& text);

// ---- commands -----------------------------------------------------------

// Return the process exit status; diagnostics go to `err`.
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct BenchRow {
  std::string size;
  std::size_t cells = 0;  // chi-squared cells or data points
  double opt_seconds = 0, unopt_seconds = 0;
  CostSummary opt, unopt;
  // rounds of the squared-difference phase (stddev) or division count (chisq)
  std::uint64_t opt_metric = 0, unopt_metric = 0;
};

// Default sweeps: 2^4..2^12 data points, or the 4x4..8x64 table shapes.
std::vector<std::string> default_sweep(Program program);
// Throws OverflowError if a size cannot be represented with the configured
// bitlength; raised for the whole sweep before anything runs.
void check_capacity(const RunConfig& config, const std::vector<std::string>& sweep);
std::vector<BenchRow> run_bench(const RunConfig& config, const std::vector<std::string>& sweep);
std::string format_bench(const RunConfig& config, const std::vector<BenchRow>& rows);
int cmd_bench(const RunConfig& config, const std::vector<std::string>& sweep, std::ostream& out,
              std::ostream& err);

struct GenSpec {
  Program program = Program::StdDev;
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes;  // stddev: values per party
  std::size_t rows = 4, cols = 4;  // chisq
  std::int64_t min_value = 0, max_value = 1000;
  std::filesystem::path out_dir = ".";
};

// Writes party<i>.txt files and returns their paths.
std::vector<std::filesystem::path> gen_inputs(const GenSpec& spec);
int cmd_gen_inputs(const GenSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace mpcstats::cli
