#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

using mpcstats::CostProfile;
using mpcstats::cli::OutputFormat;
using mpcstats::cli::Program;

const std::map<std::string, Program> kPrograms{{"stddev", Program::StdDev},
                                               {"stddev-unopt", Program::StdDevUnoptimized},
                                               {"chisq", Program::ChiSq},
                                               {"chisq-unopt", Program::ChiSqUnoptimized}};
const std::map<std::string, OutputFormat> kFormats{{"human", OutputFormat::Human},
                                                   {"kv", OutputFormat::KeyValue},
                                                   {"machine", OutputFormat::KeyValue},
                                                   {"json", OutputFormat::Json}};
const std::map<std::string, CostProfile> kProfiles{{"default", CostProfile::Default},
                                                   {"picco-emulation", CostProfile::PiccoEmulation},
                                                   {"picco", CostProfile::PiccoEmulation}};

void add_engine_options(CLI::App& cmd, mpcstats::cli::RunConfig& cfg) {
  cmd.add_option("--program", cfg.program, "stddev | stddev-unopt | chisq | chisq-unopt")
      ->transform(CLI::CheckedTransformer(kPrograms, CLI::ignore_case));
  cmd.add_option("--parties", cfg.parties, "computational parties n")->capture_default_str();
  cmd.add_option("--threshold", cfg.threshold, "threshold t, with n >= 2t+1")->capture_default_str();
  cmd.add_option("--prime", cfg.prime, "field modulus, decimal or 0x hex (default 2^255-19)");
  cmd.add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
  cmd.add_option("--frac-bits", cfg.frac_bits, "fixed-point fractional bits f")->capture_default_str();
  cmd.add_option("--max-bits", cfg.max_bits, "maximum value bitlength")->capture_default_str();
  cmd.add_option("--prec", cfg.prec, "decimal digits of sqrt precision")->capture_default_str();
  cmd.add_option("--iterations", cfg.iterations, "Newton iterations (default prec+10)");
  cmd.add_option("--cost-profile", cfg.profile, "default | picco-emulation")
      ->transform(CLI::CheckedTransformer(kProfiles, CLI::ignore_case));
  cmd.add_option("--format", cfg.format, "human | kv | json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secure multi-party statistics over Shamir secret sharing"};
  app.set_config("--config", "", "read options from a TOML/INI file");
  app.require_subcommand(1);

  mpcstats::cli::RunConfig run_cfg;
  auto* run = app.add_subcommand("run", "run one program on per-party input files");
  add_engine_options(*run, run_cfg);
  run->add_option("--input", run_cfg.inputs, "input file, one per input party (repeatable)")
      ->required()
      ->take_all();
  run->add_option("--input-parties", run_cfg.input_parties, "declared number of input parties");

  mpcstats::cli::RunConfig bench_cfg;
  std::vector<std::string> sweep;
  auto* bench = app.add_subcommand("bench", "compare optimized and unoptimized variants over sizes");
  add_engine_options(*bench, bench_cfg);
  bench->add_option("--sweep", sweep, "sizes: N for stddev, RxC for chisq (default sweep otherwise)")
      ->delimiter(',');

  mpcstats::cli::GenSpec gen;
  auto* gen_cmd = app.add_subcommand("gen-inputs", "write seeded random per-party input files");
  gen_cmd->add_option("--program", gen.program, "stddev | chisq")
      ->transform(CLI::CheckedTransformer(kPrograms, CLI::ignore_case));
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
  gen_cmd->add_option("--sizes", gen.sizes, "stddev values per party, e.g. 8,8,16")->delimiter(',');
  gen_cmd->add_option("--rows", gen.rows, "chisq input parties (rows)")->capture_default_str();
  gen_cmd->add_option("--cols", gen.cols, "chisq categories (columns)")->capture_default_str();
  auto* min_opt = gen_cmd->add_option("--min", gen.min_value, "smallest value");
  auto* max_opt = gen_cmd->add_option("--max", gen.max_value, "largest value");
  gen_cmd->add_option("--out-dir", gen.out_dir, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (*run) return mpcstats::cli::cmd_run(run_cfg, std::cout, std::cerr);
  if (*bench) return mpcstats::cli::cmd_bench(bench_cfg, sweep, std::cout, std::cerr);
  if (mpcstats::cli::is_chisq(gen.program)) {
    if (min_opt->count() == 0) gen.min_value = 1;
    if (max_opt->count() == 0) gen.max_value = 100;
  }
  return mpcstats::cli::cmd_gen_inputs(gen, std::cout, std::cerr);
}
