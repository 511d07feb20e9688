#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "mpcstats/errors.hpp"

namespace mpcstats::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mpcstats_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& body) {
    const auto path = dir_ / name;
    std::ofstream(path) << body;
    return path;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(CliTest, ChiSquaredTwoByTwo) {
  RunConfig cfg;
  cfg.program = Program::ChiSq;
  cfg.inputs = {write("a.txt", "# seed=0 party=0\n10 20\n"), write("b.txt", "# seed=0 party=1\n20 10\n")};
  const auto report = run_program(cfg);
  EXPECT_NEAR(report.result.to_double(), 20.0 / 3.0, 1e-4);
  ASSERT_TRUE(report.degrees_of_freedom);
  EXPECT_EQ(*report.degrees_of_freedom, 1);
  EXPECT_EQ(report.ledger.instances(GateKind::FixedDivision), 4u);
}

TEST_F(CliTest, StdDevExample) {
  RunConfig cfg;
  cfg.inputs = {write("a.txt", "# seed=0 party=0\n2\n4\n4\n4\n"), write("b.txt", "5\n5\n7\n9\n")};
  std::ostringstream out, err;
  ASSERT_EQ(cmd_run(cfg, out, err), 0) << err.str();
  EXPECT_EQ(run_program(cfg).result.to_string(1), "2.0");
}

TEST_F(CliTest, MissingInputFileFails) {
  RunConfig cfg;
  cfg.inputs = {dir_ / "absent.txt"};
  std::ostringstream out, err;
  EXPECT_NE(cmd_run(cfg, out, err), 0);
  EXPECT_NE(err.str().find("absent.txt"), std::string::npos);
}

TEST_F(CliTest, MalformedLineNamesFileAndLine) {
  const auto path = write("bad.txt", "# seed=1 party=0\n4\nfour\n");
  try {
    read_input_file(path);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.txt:3"), std::string::npos) << e.what();
  }
}

TEST_F(CliTest, HeaderIsParsed) {
  const auto file = read_input_file(write("h.txt", "# seed=42 party=3\n1 2 3\n"));
  EXPECT_EQ(file.seed, 42u);
  EXPECT_EQ(file.party, 3);
  ASSERT_EQ(file.rows.size(), 1u);
  EXPECT_EQ(file.rows[0].size(), 3u);
}

TEST_F(CliTest, ChiSquaredRejectsMultipleRowsPerParty) {
  EXPECT_THROW(load_chisq_input({write("a.txt", "1 2\n3 4\n")}), ParseError);
}

TEST_F(CliTest, ZeroMarginalIsNamed) {
  RunConfig cfg;
  cfg.program = Program::ChiSq;
  cfg.inputs = {write("a.txt", "0 5\n"), write("b.txt", "0 7\n")};
  std::ostringstream out, err;
  EXPECT_NE(cmd_run(cfg, out, err), 0);
  EXPECT_NE(err.str().find("column 0"), std::string::npos) << err.str();
}

TEST_F(CliTest, InvalidPartyConfigFails) {
  RunConfig cfg;
  cfg.parties = 4;
  cfg.threshold = 2;
  cfg.inputs = {write("a.txt", "1\n2\n")};
  std::ostringstream out, err;
  EXPECT_NE(cmd_run(cfg, out, err), 0);
}

TEST_F(CliTest, DeclaredInputPartyCountMustMatch) {
  RunConfig cfg;
  cfg.inputs = {write("a.txt", "1\n2\n")};
  cfg.input_parties = 2;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST_F(CliTest, KeyValueReportRoundTrips) {
  RunConfig cfg;
  cfg.program = Program::ChiSqUnoptimized;
  cfg.inputs = {write("a.txt", "3 9 4\n"), write("b.txt", "8 2 6\n")};
  const auto report = run_program(cfg);
  const auto parsed = parse_kv(format_kv(report));
  EXPECT_EQ(parsed.program, report.program);
  EXPECT_EQ(parsed.settings, report.settings);
  EXPECT_EQ(parsed.result, report.result);
  EXPECT_EQ(parsed.degrees_of_freedom, report.degrees_of_freedom);
  EXPECT_EQ(parsed.ledger, report.ledger);
  ASSERT_EQ(parsed.phases.size(), report.phases.size());
  for (std::size_t i = 0; i < parsed.phases.size(); ++i) {
    EXPECT_EQ(parsed.phases[i].name, report.phases[i].name);
    EXPECT_EQ(parsed.phases[i].cost.interactive_ops, report.phases[i].cost.interactive_ops);
    EXPECT_EQ(parsed.phases[i].cost.rounds, report.phases[i].cost.rounds);
    EXPECT_EQ(parsed.phases[i].cost.bytes_sent, report.phases[i].cost.bytes_sent);
  }
}

TEST_F(CliTest, JsonReportIsProduced) {
  RunConfig cfg;
  cfg.format = OutputFormat::Json;
  cfg.inputs = {write("a.txt", "2\n4\n4\n4\n5\n5\n7\n9\n")};
  std::ostringstream out, err;
  ASSERT_EQ(cmd_run(cfg, out, err), 0) << err.str();
  EXPECT_NE(out.str().find("\"interactive_ops\""), std::string::npos);
}

TEST_F(CliTest, GeneratorIsDeterministic) {
  GenSpec spec;
  spec.program = Program::ChiSq;
  spec.rows = 4;
  spec.cols = 16;
  spec.min_value = 1;
  spec.max_value = 100;
  spec.seed = 77;
  spec.out_dir = dir_ / "one";
  const auto first = gen_inputs(spec);
  spec.out_dir = dir_ / "two";
  const auto second = gen_inputs(spec);
  ASSERT_EQ(first.size(), 4u);
  for (std::size_t i = 0; i < first.size(); ++i) EXPECT_EQ(slurp(first[i]), slurp(second[i]));
  EXPECT_EQ(read_input_file(first[2]).seed, 77u);
  EXPECT_EQ(read_input_file(first[2]).party, 2);
}

TEST_F(CliTest, ChiSquaredGeneratorHonorsRange) {
  GenSpec spec;
  spec.program = Program::ChiSq;
  spec.rows = 8;
  spec.cols = 64;
  spec.min_value = 1;
  spec.max_value = 100;
  spec.out_dir = dir_;
  const auto input = load_chisq_input(gen_inputs(spec));
  ASSERT_EQ(input.rows(), 8u);
  ASSERT_EQ(input.cols(), 64u);
  for (const auto& row : input.counts) {
    for (auto c : row) {
      EXPECT_GE(c, 1);
      EXPECT_LE(c, 100);
    }
  }
}

TEST_F(CliTest, StdDevGeneratorMatchesSizeSplit) {
  GenSpec spec;
  spec.sizes = {5, 17, 42};
  spec.out_dir = dir_;
  const auto input = load_stddev_input(gen_inputs(spec));
  EXPECT_EQ(input.sizes(), (std::vector<std::size_t>{5, 17, 42}));
  EXPECT_EQ(input.total(), 64u);
}

TEST_F(CliTest, ChiSquaredSweepHalvesDivisions) {
  RunConfig cfg;
  cfg.program = Program::ChiSq;
  const auto sweep = default_sweep(cfg.program);
  EXPECT_EQ(sweep.front(), "4x4");
  EXPECT_EQ(sweep.back(), "8x64");
  const auto rows = run_bench(cfg, {"4x4", "4x8", "8x8"});
  for (const auto& row : rows) {
    EXPECT_EQ(row.opt_metric, row.cells);
    EXPECT_EQ(row.unopt_metric, 2 * row.cells);
  }
}

TEST_F(CliTest, StdDevSweepSquaredDifferenceRounds) {
  RunConfig cfg;
  const auto rows = run_bench(cfg, {"16", "64"});
  for (const auto& row : rows) {
    EXPECT_EQ(row.opt_metric, 1u);
    EXPECT_EQ(row.unopt_metric, row.cells);
  }
}

TEST_F(CliTest, OversizedSweepFailsBeforeRunning) {
  RunConfig cfg;
  cfg.program = Program::ChiSq;
  cfg.max_bits = 40;
  EXPECT_THROW(check_capacity(cfg, {"4x4", "8x64"}), OverflowError);
  std::ostringstream out, err;
  EXPECT_NE(cmd_bench(cfg, {"4x4", "8x64"}, out, err), 0);
  EXPECT_TRUE(out.str().empty());
}

TEST_F(CliTest, ParsesNames) {
  EXPECT_EQ(parse_program("chisq-unopt"), Program::ChiSqUnoptimized);
  EXPECT_FALSE(parse_program("median"));
  EXPECT_EQ(parse_format("json"), OutputFormat::Json);
  EXPECT_EQ(program_name(Program::StdDevUnoptimized), "stddev-unopt");
}

}  // namespace
}  // namespace mpcstats::cli
