#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "mpcstats/errors.hpp"

namespace mpcstats::cli {

namespace {

constexpr std::uint64_t kGenStream = 0x30000;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
std::optional<T> to_number(std::string_view s) {
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string field_label(const EngineConfig& cfg) {
  return "0x" + cfg.field->modulus().get_str(16);
}

}  // namespace

std::string_view program_name(Program p) {
  switch (p) {
    case Program::StdDev: return "stddev";
    case Program::StdDevUnoptimized: return "stddev-unopt";
    case Program::ChiSq: return "chisq";
    case Program::ChiSqUnoptimized: return "chisq-unopt";
  }
  return "unknown";
}

std::optional<Program> parse_program(std::string_view name) {
  for (auto p : {Program::StdDev, Program::StdDevUnoptimized, Program::ChiSq,
                 Program::ChiSqUnoptimized}) {
    if (program_name(p) == name) return p;
  }
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "human") return OutputFormat::Human;
  if (name == "kv" || name == "machine") return OutputFormat::KeyValue;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

bool is_chisq(Program p) { return p == Program::ChiSq || p == Program::ChiSqUnoptimized; }

EngineConfig RunConfig::engine() const {
  EngineConfig cfg;
  cfg.parties = parties;
  cfg.threshold = threshold;
  cfg.field = prime.empty() ? PrimeField::default_field() : PrimeField::parse(prime);
  cfg.seed = seed;
  cfg.profile = profile;
  cfg.frac_bits = frac_bits;
  cfg.max_bitlength = max_bits;
  return cfg;
}

void RunConfig::validate() const {
  engine().validate();
  if (prec < 0) throw ConfigError("--prec must be non-negative");
  if (iterations && *iterations < 0) throw ConfigError("--iterations must be non-negative");
  if (input_parties && static_cast<std::size_t>(*input_parties) != inputs.size()) {
    throw ConfigError(std::to_string(*input_parties) + " input parties declared but " +
                      std::to_string(inputs.size()) + " input files given");
  }
}

// ---- input files --------------------------------------------------------

InputFile read_input_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open input file");
  InputFile file;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line);
    if (body.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(lineno) + ": ";
    if (body.front() == '#') {
      std::istringstream fields(body.substr(1));
      std::string token;
      while (fields >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const auto key = token.substr(0, eq);
        const auto value = std::string_view(token).substr(eq + 1);
        if (key == "seed") {
          file.seed = to_number<std::uint64_t>(value);
          if (!file.seed) throw ParseError(where + "bad seed '" + std::string(value) + "'");
        } else if (key == "party") {
          file.party = to_number<int>(value);
          if (!file.party) throw ParseError(where + "bad party id '" + std::string(value) + "'");
        }
      }
      continue;
    }
    std::vector<std::int64_t> row;
    std::istringstream fields(body);
    std::string token;
    while (fields >> token) {
      const auto v = to_number<std::int64_t>(token);
      if (!v) throw ParseError(where + "expected an integer, got '" + token + "'");
      row.push_back(*v);
    }
    file.rows.push_back(std::move(row));
  }
  return file;
}

void write_input_file(const std::filesystem::path& path, std::uint64_t seed, int party,
                      const std::vector<std::vector<std::int64_t>>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError(path.string() + ": cannot write input file");
  out << "# seed=" << seed << " party=" << party << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
}

StdDevInput load_stddev_input(const std::vector<std::filesystem::path>& paths) {
  if (paths.empty()) throw ConfigError("no input files given");
  StdDevInput input;
  for (const auto& path : paths) {
    const auto file = read_input_file(path);
    std::vector<Integer> values;
    for (const auto& row : file.rows) {
      if (row.size() != 1) {
        throw ParseError(path.string() + ": standard deviation inputs take one value per line");
      }
      values.emplace_back(static_cast<long>(row.front()));
    }
    input.parties.push_back(std::move(values));
  }
  return input;
}

ChiSqInput load_chisq_input(const std::vector<std::filesystem::path>& paths) {
  if (paths.empty()) throw ConfigError("no input files given");
  ChiSqInput input;
  for (const auto& path : paths) {
    const auto file = read_input_file(path);
    if (file.rows.size() != 1) {
      throw ParseError(path.string() + ": chi-squared inputs hold exactly one row of counts, found " +
                       std::to_string(file.rows.size()));
    }
    input.counts.push_back(file.rows.front());
  }
  return input;
}

void check_marginals(const ChiSqInput& input) {
  input.validate();
  for (std::size_t i = 0; i < input.rows(); ++i) {
    std::int64_t sum = 0;
    for (auto c : input.counts[i]) sum += c;
    if (sum == 0) throw DomainError("row " + std::to_string(i) + " sums to zero");
  }
  for (std::size_t j = 0; j < input.cols(); ++j) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < input.rows(); ++i) sum += input.counts[i][j];
    if (sum == 0) throw DomainError("column " + std::to_string(j) + " sums to zero");
  }
}

// ---- reports ------------------------------------------------------------

Report run_program(const RunConfig& config) {
  config.validate();
  const auto engine = config.engine();
  Report report;
  report.program = std::string(program_name(config.program));
  report.settings = {
      {"parties", std::to_string(engine.parties)},
      {"threshold", std::to_string(engine.threshold)},
      {"prime", field_label(engine)},
      {"seed", std::to_string(engine.seed)},
      {"cost_profile", std::string(profile_name(engine.profile))},
      {"frac_bits", std::to_string(engine.frac_bits)},
      {"max_bits", std::to_string(engine.max_bitlength)},
      {"input_parties", std::to_string(config.inputs.size())},
  };

  if (is_chisq(config.program)) {
    const auto input = load_chisq_input(config.inputs);
    check_marginals(input);
    PartyNetwork net(engine);
    const auto start = Clock::now();
    const auto result = config.program == Program::ChiSq ? chisq_optimized(net, input)
                                                          : chisq_unoptimized(net, input);
    report.wall_seconds = seconds_since(start);
    report.result = result.statistic;
    report.degrees_of_freedom = result.degrees_of_freedom;
    report.ledger = result.ledger;
    report.phases = result.phases;
  } else {
    const auto input = load_stddev_input(config.inputs);
    report.settings["prec"] = std::to_string(config.prec);
    report.settings["iterations"] = std::to_string(config.iterations.value_or(config.prec + 10));
    PartyNetwork net(engine);
    const auto start = Clock::now();
    const auto result = config.program == Program::StdDev
                            ? stddev(net, input, config.prec, config.iterations)
                            : stddev_unoptimized(net, input, config.prec, config.iterations);
    report.wall_seconds = seconds_since(start);
    report.result = result.value;
    report.ledger = result.ledger;
    report.phases = result.phases;
  }
  return report;
}

namespace {

void emit_cost(std::ostream& out, const std::string& prefix, const CostSummary& c) {
  out << prefix << "interactive_ops=" << c.interactive_ops << '\n';
  out << prefix << "rounds=" << c.rounds << '\n';
  out << prefix << "batches=" << c.batches << '\n';
  out << prefix << "bytes_sent=" << c.bytes_sent << '\n';
}

nlohmann::json cost_json(const CostSummary& c) {
  nlohmann::json j;
  j["interactive_ops"] = c.interactive_ops;
  j["rounds"] = c.rounds;
  j["batches"] = c.batches;
  j["bytes_sent"] = c.bytes_sent;
  auto& gates = j["per_gate"] = nlohmann::json::object();
  for (const auto& [kind, t] : c.per_gate) {
    gates[std::string(gate_name(kind))] = {
        {"instances", t.instances}, {"ops", t.ops}, {"rounds", t.rounds}};
  }
  auto& dealer = j["dealer_reveals"] = nlohmann::json::object();
  for (const auto& [kind, n] : c.dealer_reveals) dealer[std::string(gate_name(kind))] = n;
  return j;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  const auto v = to_number<std::uint64_t>(value);
  if (!v) throw ParseError("report: bad value for " + key + ": '" + value + "'");
  return *v;
}

}  // namespace

std::string format_kv(const Report& r) {
  std::ostringstream out;
  out << "program=" << r.program << '\n';
  for (const auto& [k, v] : r.settings) out << "config." << k << '=' << v << '\n';
  out << "result=" << r.result.to_string(6) << '\n';
  out << "result.raw=" << r.result.raw.get_str() << '\n';
  out << "result.frac_bits=" << r.result.frac_bits << '\n';
  if (r.degrees_of_freedom) out << "df=" << *r.degrees_of_freedom << '\n';
  emit_cost(out, "ledger.", r.ledger);
  for (const auto& [kind, t] : r.ledger.per_gate) {
    const std::string p = "gate." + std::string(gate_name(kind)) + ".";
    out << p << "instances=" << t.instances << '\n';
    out << p << "ops=" << t.ops << '\n';
    out << p << "rounds=" << t.rounds << '\n';
  }
  for (const auto& [kind, n] : r.ledger.dealer_reveals) {
    out << "dealer." << gate_name(kind) << '=' << n << '\n';
  }
  for (const auto& phase : r.phases) emit_cost(out, "phase." + phase.name + ".", phase.cost);
  return out.str();
}

std::string format_json(const Report& r) {
  nlohmann::json j;
  j["program"] = r.program;
  j["config"] = r.settings;
  j["result"] = {{"value", r.result.to_double()},
                 {"raw", r.result.raw.get_str()},
                 {"frac_bits", r.result.frac_bits}};
  if (r.degrees_of_freedom) j["df"] = *r.degrees_of_freedom;
  j["ledger"] = cost_json(r.ledger);
  auto& phases = j["phases"] = nlohmann::json::array();
  for (const auto& p : r.phases) {
    auto pj = cost_json(p.cost);
    pj["name"] = p.name;
    phases.push_back(std::move(pj));
  }
  return j.dump(2) + "\n";
}

std::string format_human(const Report& r) {
  std::ostringstream out;
  out << "program:        " << r.program << '\n';
  out << "parties:        " << r.settings.at("parties") << " (threshold "
      << r.settings.at("threshold") << ")\n";
  out << "result:         " << r.result.to_string(6) << '\n';
  if (r.degrees_of_freedom) out << "df:             " << *r.degrees_of_freedom << '\n';
  out << "interactive ops " << r.ledger.interactive_ops << '\n';
  out << "rounds          " << r.ledger.rounds << '\n';
  out << "bytes sent      " << r.ledger.bytes_sent << '\n';
  out << "wall clock      " << std::fixed << std::setprecision(3) << r.wall_seconds << " s\n";
  out << "\nper gate:\n";
  for (const auto& [kind, t] : r.ledger.per_gate) {
    out << "  " << std::left << std::setw(14) << gate_name(kind) << std::right
        << " instances " << std::setw(8) << t.instances << "  ops " << std::setw(8) << t.ops
        << "  rounds " << std::setw(6) << t.rounds << '\n';
  }
  out << "\nphases:\n";
  for (const auto& p : r.phases) {
    out << "  " << std::left << std::setw(20) << p.name << std::right << " ops " << std::setw(8)
        << p.cost.interactive_ops << "  rounds " << std::setw(6) << p.cost.rounds << '\n';
  }
  return out.str();
}

Report parse_kv(const std::string& text) {
  Report r;
  std::istringstream in(text);
  std::string line;
  std::map<std::string, std::size_t> phase_index;
  auto phase = [&](const std::string& name) -> CostSummary& {
    auto [it, inserted] = phase_index.try_emplace(name, r.phases.size());
    if (inserted) r.phases.push_back(PhaseCost{name, {}});
    return r.phases[it->second].cost;
  };
  auto set_cost = [&](CostSummary& c, const std::string& field, const std::string& key,
                      const std::string& value) {
    const auto v = parse_u64(key, value);
    if (field == "interactive_ops") c.interactive_ops = v;
    else if (field == "rounds") c.rounds = v;
    else if (field == "batches") c.batches = v;
    else if (field == "bytes_sent") c.bytes_sent = v;
    else throw ParseError("report: unknown counter '" + key + "'");
  };

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("report: line without '=': " + line);
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    const auto last_dot = key.rfind('.');
    if (key == "program") {
      r.program = value;
    } else if (key.starts_with("config.")) {
      r.settings[key.substr(7)] = value;
    } else if (key == "result") {
      // derived from result.raw
    } else if (key == "result.raw") {
      if (r.result.raw.set_str(value, 10) != 0) throw ParseError("report: bad result.raw");
    } else if (key == "result.frac_bits") {
      r.result.frac_bits = static_cast<int>(parse_u64(key, value));
    } else if (key == "df") {
      const auto df = to_number<std::int64_t>(value);
      if (!df) throw ParseError("report: bad df");
      r.degrees_of_freedom = *df;
    } else if (key.starts_with("ledger.")) {
      set_cost(r.ledger, key.substr(7), key, value);
    } else if (key.starts_with("gate.") && last_dot > 5) {
      const auto kind = parse_gate_name(key.substr(5, last_dot - 5));
      if (!kind) throw ParseError("report: unknown gate in '" + key + "'");
      auto& t = r.ledger.per_gate[*kind];
      const auto field = key.substr(last_dot + 1);
      const auto v = parse_u64(key, value);
      if (field == "instances") t.instances = v;
      else if (field == "ops") t.ops = v;
      else if (field == "rounds") t.rounds = v;
      else throw ParseError("report: unknown gate counter '" + key + "'");
    } else if (key.starts_with("dealer.")) {
      const auto kind = parse_gate_name(key.substr(7));
      if (!kind) throw ParseError("report: unknown gate in '" + key + "'");
      r.ledger.dealer_reveals[*kind] = parse_u64(key, value);
    } else if (key.starts_with("phase.") && last_dot > 6) {
      set_cost(phase(key.substr(6, last_dot - 6)), key.substr(last_dot + 1), key, value);
    } else {
      throw ParseError("report: unknown key '" + key + "'");
    }
  }
  return r;
}

// ---- commands -----------------------------------------------------------

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto report = run_program(config);
    switch (config.format) {
      case OutputFormat::Human: out << format_human(report); break;
      case OutputFormat::KeyValue: out << format_kv(report); break;
      case OutputFormat::Json: out << format_json(report); break;
    }
    return 0;
  } catch (const Error& e) {
    err << "mpcstats run: " << e.what() << '\n';
    return 1;
  }
}

std::vector<std::string> default_sweep(Program program) {
  if (is_chisq(program)) {
    return {"4x4", "4x8", "4x16", "4x32", "4x64", "4x128", "8x8", "8x16", "8x32", "8x64"};
  }
  return {"16", "32", "64", "128", "256", "512", "1024", "2048", "4096"};
}

namespace {

struct Shape {
  std::size_t rows = 0;
  std::size_t cols = 0;
};

Shape parse_shape(const std::string& size, bool chisq) {
  if (chisq) {
    const auto x = size.find('x');
    if (x != std::string::npos) {
      const auto r = to_number<std::size_t>(std::string_view(size).substr(0, x));
      const auto c = to_number<std::size_t>(std::string_view(size).substr(x + 1));
      if (r && c && *r >= 2 && *c >= 2) return {*r, *c};
    }
    throw ConfigError("chi-squared sizes look like RxC with R, C >= 2, got '" + size + "'");
  }
  const auto n = to_number<std::size_t>(size);
  if (!n || *n == 0) throw ConfigError("standard deviation sizes are positive counts, got '" + size + "'");
  return {*n, 1};
}

constexpr std::int64_t kBenchMaxCount = 100;
constexpr std::int64_t kBenchMaxValue = 1000;
constexpr std::size_t kBenchStdDevParties = 3;

}  // namespace

void check_capacity(const RunConfig& config, const std::vector<std::string>& sweep) {
  const int usable = config.max_bits - config.frac_bits;
  for (const auto& size : sweep) {
    const auto shape = parse_shape(size, is_chisq(config.program));
    Integer worst;
    int limit = usable;
    if (is_chisq(config.program)) {
      // |x*s_o - s_c*s_r| <= max_count^2 * cells; its square is converted.
      const Integer cells = static_cast<unsigned long>(shape.rows * shape.cols);
      const Integer diff = kBenchMaxCount * kBenchMaxCount * cells;
      worst = diff * diff;
    } else {
      // First Newton step squares (num + 1) / 2 with num = variance * 100^prec.
      Integer scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 100, static_cast<unsigned long>(config.prec));
      const Integer num = kBenchMaxValue * kBenchMaxValue * scale;
      const Integer half = (num + 1) / 2;
      worst = half * half + num;
      const Integer sum = kBenchMaxValue * kBenchMaxValue * Integer(static_cast<unsigned long>(shape.rows));
      if (sum > worst) worst = sum;
      limit = config.max_bits;
    }
    if (magnitude_bits(worst) > limit) {
      throw OverflowError("size " + size + " needs " + std::to_string(magnitude_bits(worst)) +
                          " bits but only " + std::to_string(limit) + " are available");
    }
  }
}

std::vector<BenchRow> run_bench(const RunConfig& config, const std::vector<std::string>& sweep) {
  config.engine().validate();
  check_capacity(config, sweep);
  const bool chisq = is_chisq(config.program);
  std::vector<BenchRow> rows;
  for (const auto& size : sweep) {
    const auto shape = parse_shape(size, chisq);
    Prng rng = make_prng(config.seed, kGenStream + rows.size());
    BenchRow row;
    row.size = size;
    auto timed = [&](auto&& fn, double& seconds) {
      PartyNetwork net(config.engine());
      const auto start = Clock::now();
      auto result = fn(net);
      seconds = seconds_since(start);
      return result;
    };
    if (chisq) {
      std::uniform_int_distribution<std::int64_t> count(1, kBenchMaxCount);
      ChiSqInput input;
      input.counts.assign(shape.rows, std::vector<std::int64_t>(shape.cols));
      for (auto& r : input.counts) {
        for (auto& c : r) c = count(rng);
      }
      row.cells = shape.rows * shape.cols;
      const auto opt = timed([&](PartyNetwork& n) { return chisq_optimized(n, input); }, row.opt_seconds);
      const auto unopt =
          timed([&](PartyNetwork& n) { return chisq_unoptimized(n, input); }, row.unopt_seconds);
      row.opt = opt.ledger;
      row.unopt = unopt.ledger;
      row.opt_metric = opt.ledger.instances(GateKind::FixedDivision);
      row.unopt_metric = unopt.ledger.instances(GateKind::FixedDivision);
    } else {
      std::uniform_int_distribution<long> value(0, kBenchMaxValue);
      StdDevInput input;
      input.parties.resize(kBenchStdDevParties);
      for (std::size_t i = 0; i < shape.rows; ++i) {
        input.parties[i % kBenchStdDevParties].emplace_back(value(rng));
      }
      row.cells = shape.rows;
      const auto opt = timed(
          [&](PartyNetwork& n) { return stddev(n, input, config.prec, config.iterations); },
          row.opt_seconds);
      const auto unopt = timed(
          [&](PartyNetwork& n) {
            return stddev_unoptimized(n, input, config.prec, config.iterations);
          },
          row.unopt_seconds);
      row.opt = opt.ledger;
      row.unopt = unopt.ledger;
      row.opt_metric = opt.phase("squared-differences").rounds;
      row.unopt_metric = unopt.phase("squared-differences").rounds;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

double reduction(std::uint64_t opt, std::uint64_t unopt) {
  if (unopt == 0) return 0.0;
  return 100.0 * (1.0 - static_cast<double>(opt) / static_cast<double>(unopt));
}

}  // namespace

std::string format_bench(const RunConfig& config, const std::vector<BenchRow>& rows) {
  const bool chisq = is_chisq(config.program);
  const std::string metric = chisq ? "fixed_div" : "sqdiff_rounds";
  std::ostringstream out;
  if (config.format == OutputFormat::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      j.push_back({{"size", r.size},
                   {"opt", {{"seconds", r.opt_seconds}, {"ops", r.opt.interactive_ops},
                            {"rounds", r.opt.rounds}, {metric, r.opt_metric}}},
                   {"unopt", {{"seconds", r.unopt_seconds}, {"ops", r.unopt.interactive_ops},
                              {"rounds", r.unopt.rounds}, {metric, r.unopt_metric}}},
                   {"ops_reduction_pct", reduction(r.opt.interactive_ops, r.unopt.interactive_ops)},
                   {"rounds_reduction_pct", reduction(r.opt.rounds, r.unopt.rounds)},
                   {metric + "_reduction_pct", reduction(r.opt_metric, r.unopt_metric)}});
    }
    out << j.dump(2) << '\n';
    return out.str();
  }
  if (config.format == OutputFormat::KeyValue) {
    out << std::fixed << std::setprecision(2);
    for (const auto& r : rows) {
      out << "size=" << r.size << " opt_seconds=" << r.opt_seconds
          << " opt_ops=" << r.opt.interactive_ops << " opt_rounds=" << r.opt.rounds << " opt_"
          << metric << '=' << r.opt_metric << " unopt_seconds=" << r.unopt_seconds
          << " unopt_ops=" << r.unopt.interactive_ops << " unopt_rounds=" << r.unopt.rounds
          << " unopt_" << metric << '=' << r.unopt_metric
          << " ops_reduction_pct=" << reduction(r.opt.interactive_ops, r.unopt.interactive_ops)
          << " rounds_reduction_pct=" << reduction(r.opt.rounds, r.unopt.rounds) << ' '
          << metric << "_reduction_pct=" << reduction(r.opt_metric, r.unopt_metric) << '\n';
    }
    return out.str();
  }
  out << program_name(config.program) << " sweep (" << profile_name(config.profile)
      << " cost profile, metric = " << metric << ")\n";
  out << std::left << std::setw(8) << "size" << std::right << std::setw(10) << "opt s"
      << std::setw(10) << "ops" << std::setw(8) << "rounds" << std::setw(15) << metric
      << std::setw(10) << "unopt s" << std::setw(10) << "ops" << std::setw(8) << "rounds"
      << std::setw(15) << metric << std::setw(9) << "ops -%" << std::setw(10) << "rounds -%" << std::setw(10)
      << "metric -%" << '\n';
  out << std::fixed;
  for (const auto& r : rows) {
    out << std::left << std::setw(8) << r.size << std::right << std::setprecision(3)
        << std::setw(10) << r.opt_seconds << std::setw(10) << r.opt.interactive_ops
        << std::setw(8) << r.opt.rounds << std::setw(15) << r.opt_metric << std::setw(10)
        << r.unopt_seconds << std::setw(10) << r.unopt.interactive_ops << std::setw(8)
        << r.unopt.rounds << std::setw(15) << r.unopt_metric << std::setprecision(1)
        << std::setw(9) << reduction(r.opt.interactive_ops, r.unopt.interactive_ops)
        << std::setw(10) << reduction(r.opt.rounds, r.unopt.rounds) << std::setw(10)
        << reduction(r.opt_metric, r.unopt_metric) << '\n';
  }
  return out.str();
}

int cmd_bench(const RunConfig& config, const std::vector<std::string>& sweep, std::ostream& out,
              std::ostream& err) {
  try {
    RunConfig normalized = config;
    if (normalized.program == Program::StdDevUnoptimized) normalized.program = Program::StdDev;
    if (normalized.program == Program::ChiSqUnoptimized) normalized.program = Program::ChiSq;
    const auto sizes = sweep.empty() ? default_sweep(normalized.program) : sweep;
    out << format_bench(normalized, run_bench(normalized, sizes));
    return 0;
  } catch (const Error& e) {
    err << "mpcstats bench: " << e.what() << '\n';
    return 1;
  }
}

std::vector<std::filesystem::path> gen_inputs(const GenSpec& spec) {
  if (spec.min_value > spec.max_value) throw ConfigError("--min exceeds --max");
  std::filesystem::create_directories(spec.out_dir);
  std::vector<std::filesystem::path> paths;
  const bool chisq = is_chisq(spec.program);
  const std::size_t files = chisq ? spec.rows : spec.sizes.size();
  if (files == 0) throw ConfigError("nothing to generate: give --sizes or --rows");
  if (chisq && spec.cols == 0) throw ConfigError("--cols must be positive");
  for (std::size_t party = 0; party < files; ++party) {
    Prng rng = make_prng(spec.seed, kGenStream + party);
    std::uniform_int_distribution<std::int64_t> dist(spec.min_value, spec.max_value);
    std::vector<std::vector<std::int64_t>> rows;
    if (chisq) {
      std::vector<std::int64_t> row(spec.cols);
      for (auto& c : row) c = dist(rng);
      rows.push_back(std::move(row));
    } else {
      for (std::size_t i = 0; i < spec.sizes[party]; ++i) rows.push_back({dist(rng)});
    }
    auto path = spec.out_dir / ("party" + std::to_string(party) + ".txt");
    write_input_file(path, spec.seed, static_cast<int>(party), rows);
    paths.push_back(std::move(path));
  }
  return paths;
}

int cmd_gen_inputs(const GenSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    for (const auto& p : gen_inputs(spec)) out << p.string() << '\n';
    return 0;
  } catch (const Error& e) {
    err << "mpcstats gen-inputs: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "mpcstats gen-inputs: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace mpcstats::cli
