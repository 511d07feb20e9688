#include "mpcstats/stats.hpp"

#include <string>

#include "mpcstats/errors.hpp"
#include "mpcstats/protocols.hpp"

namespace mpcstats {

namespace {

// Records ledger deltas between consecutive marks.
class PhaseRecorder {
 public:
  explicit PhaseRecorder(PartyNetwork& net) : net_(net), start_(net.ledger_report()), last_(start_) {}

  void mark(std::string name) {
    auto now = net_.ledger_report();
    phases_.push_back(PhaseCost{std::move(name), now - last_});
    last_ = std::move(now);
  }

  CostSummary total() const { return net_.ledger_report() - start_; }
  std::vector<PhaseCost> take() { return std::move(phases_); }

 private:
  PartyNetwork& net_;
  CostSummary start_;
  CostSummary last_;
  std::vector<PhaseCost> phases_;
};

const CostSummary& find_phase(const std::vector<PhaseCost>& phases, const std::string& name) {
  for (const auto& p : phases) {
    if (p.name == name) return p.cost;
  }
  throw ConfigError("no program phase named '" + name + "'");
}

Integer power(unsigned long base, int exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, static_cast<unsigned long>(exp));
  return out;
}

SecretInt sum_all(std::span<const SecretInt> xs) {
  SecretInt acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = add(acc, xs[i]);
  return acc;
}

enum class Schedule { Batched, Sequential };

StdDevResult run_stddev(PartyNetwork& net, const StdDevInput& input, int prec,
                        std::optional<int> iterations, Schedule schedule) {
  input.validate();
  PhaseRecorder rec(net);

  std::vector<SecretInt> all;
  all.reserve(input.total());
  for (std::size_t p = 0; p < input.parties.size(); ++p) {
    auto shared = net.distribute_input(static_cast<int>(p), input.parties[p]);
    all.insert(all.end(), shared.begin(), shared.end());
  }
  rec.mark("input");

  // The total is public; dividing by a private copy of it mirrors the
  // reference program.
  const auto total = net.constant(static_cast<long>(all.size()));
  const auto mean = div_secret_int(net, sum_all(all), total);
  rec.mark("mean");

  std::vector<SecretInt> diffs;
  diffs.reserve(all.size());
  for (const auto& x : all) diffs.push_back(sub(x, mean));
  std::vector<SecretInt> squares;
  if (schedule == Schedule::Batched) {
    squares = mul_secret_batch(net, diffs, diffs);
  } else {
    squares.reserve(diffs.size());
    for (const auto& d : diffs) squares.push_back(mul_secret(net, d, d));
  }
  rec.mark("squared-differences");

  const auto variance = div_secret_int(net, sum_all(squares), total);
  rec.mark("variance");

  const auto root = sqrt_newton(net, variance, prec, iterations);
  rec.mark("sqrt");

  StdDevResult result;
  result.value = net.open(root);
  rec.mark("output");
  result.ledger = rec.total();
  result.phases = rec.take();
  return result;
}

struct Marginals {
  std::vector<SecretInt> cells;  // row-major
  std::vector<SecretInt> row_sums;
  std::vector<SecretInt> col_sums;
  std::optional<SecretInt> total;
};

Marginals share_and_sum(PartyNetwork& net, const ChiSqInput& input, PhaseRecorder& rec) {
  input.validate();
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  Marginals m;
  m.cells.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Integer> row;
    row.reserve(cols);
    for (auto c : input.counts[i]) row.emplace_back(static_cast<long>(c));
    auto shared = net.distribute_input(static_cast<int>(i), row);
    m.cells.insert(m.cells.end(), shared.begin(), shared.end());
  }
  rec.mark("input");

  for (std::size_t i = 0; i < rows; ++i) {
    m.row_sums.push_back(
        sum_all(std::span(m.cells).subspan(i * cols, cols)));
  }
  for (std::size_t j = 0; j < cols; ++j) {
    SecretInt acc = m.cells[j];
    for (std::size_t i = 1; i < rows; ++i) acc = add(acc, m.cells[i * cols + j]);
    m.col_sums.push_back(std::move(acc));
  }
  m.total = sum_all(m.row_sums);
  rec.mark("marginals");
  return m;
}

ChiSqResult finish_chisq(PartyNetwork& net, const ChiSqInput& input,
                         const std::vector<SecretFixed>& cells, PhaseRecorder& rec) {
  const auto statistic = tree_sum_fixed(net, cells);
  rec.mark("summation");
  ChiSqResult result;
  result.statistic = net.open(statistic);
  rec.mark("output");
  result.degrees_of_freedom = static_cast<std::int64_t>(input.rows() - 1) *
                              static_cast<std::int64_t>(input.cols() - 1);
  result.ledger = rec.total();
  result.phases = rec.take();
  return result;
}

}  // namespace

std::vector<std::size_t> StdDevInput::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(parties.size());
  for (const auto& p : parties) out.push_back(p.size());
  return out;
}

std::size_t StdDevInput::total() const {
  std::size_t n = 0;
  for (const auto& p : parties) n += p.size();
  return n;
}

void StdDevInput::validate() const {
  if (total() == 0) throw ConfigError("standard deviation needs at least one value");
}

void ChiSqInput::validate() const {
  if (rows() < 2 || cols() < 2) {
    throw ConfigError("chi-squared needs at least 2 rows and 2 columns");
  }
  for (std::size_t i = 0; i < rows(); ++i) {
    if (counts[i].size() != cols()) {
      throw ConfigError("row " + std::to_string(i) + " has " + std::to_string(counts[i].size()) +
                        " counts, expected " + std::to_string(cols()));
    }
    for (auto c : counts[i]) {
      if (c < 0) throw DomainError("negative count in row " + std::to_string(i));
    }
  }
}

const CostSummary& StdDevResult::phase(const std::string& name) const {
  return find_phase(phases, name);
}

const CostSummary& ChiSqResult::phase(const std::string& name) const {
  return find_phase(phases, name);
}

SecretFixed sqrt_newton(PartyNetwork& net, const SecretInt& a, int prec,
                        std::optional<int> iterations) {
  if (prec < 0) throw ConfigError("precision must be non-negative");
  const int steps = iterations.value_or(prec + 10);
  if (steps < 0) throw ConfigError("iteration count must be non-negative");
  const Integer scale = power(100, prec);
  // 100^prec and 10^prec become field values; reject before any gate runs.
  if (magnitude_bits(scale) >= net.config().max_bitlength) {
    throw OverflowError("100^" + std::to_string(prec) + " exceeds the configured bitlength");
  }

  const auto num = mul_public(a, scale);
  auto k = net.constant(1);
  for (int i = 0; i < steps; ++i) {
    const auto numerator = add(mul_secret(net, k, k), num);
    k = div_secret_int(net, numerator, mul_public(k, 2));
  }

  const std::vector<SecretInt> to_convert{k, net.constant(power(10, prec))};
  const auto converted = int_to_fixed_batch(net, to_convert);
  return div_fixed(net, converted[0], converted[1]);
}

StdDevResult stddev(PartyNetwork& net, const StdDevInput& input, int prec,
                    std::optional<int> iterations) {
  return run_stddev(net, input, prec, iterations, Schedule::Batched);
}

StdDevResult stddev_unoptimized(PartyNetwork& net, const StdDevInput& input, int prec,
                                std::optional<int> iterations) {
  return run_stddev(net, input, prec, iterations, Schedule::Sequential);
}

ChiSqResult chisq_optimized(PartyNetwork& net, const ChiSqInput& input) {
  PhaseRecorder rec(net);
  const auto m = share_and_sum(net, input, rec);
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  const std::size_t cells = rows * cols;

  // Stage 1: expected-count numerators s_c * s_r and scaled observations x * s_o.
  std::vector<SecretInt> lhs, rhs;
  lhs.reserve(2 * cells);
  rhs.reserve(2 * cells);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      lhs.push_back(m.col_sums[j]);
      rhs.push_back(m.row_sums[i]);
    }
  }
  for (std::size_t c = 0; c < cells; ++c) {
    lhs.push_back(m.cells[c]);
    rhs.push_back(*m.total);
  }
  const auto stage1 = mul_secret_batch(net, lhs, rhs);

  // Stage 2: squared differences and denominators s_c * s_r * s_o.
  lhs.clear();
  rhs.clear();
  for (std::size_t c = 0; c < cells; ++c) {
    const auto diff = sub(stage1[cells + c], stage1[c]);
    lhs.push_back(diff);
    rhs.push_back(diff);
  }
  for (std::size_t c = 0; c < cells; ++c) {
    lhs.push_back(stage1[c]);
    rhs.push_back(*m.total);
  }
  const auto stage2 = mul_secret_batch(net, lhs, rhs);

  const auto as_fixed = int_to_fixed_batch(net, stage2);
  const std::span<const SecretFixed> fixed(as_fixed);
  const auto contributions = div_fixed_batch(net, fixed.first(cells), fixed.subspan(cells));
  rec.mark("cells");

  return finish_chisq(net, input, contributions, rec);
}

ChiSqResult chisq_unoptimized(PartyNetwork& net, const ChiSqInput& input) {
  PhaseRecorder rec(net);
  const auto m = share_and_sum(net, input, rec);
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  const std::size_t cells = rows * cols;

  std::vector<SecretInt> lhs, rhs;
  lhs.reserve(cells);
  rhs.reserve(cells);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      lhs.push_back(m.col_sums[j]);
      rhs.push_back(m.row_sums[i]);
    }
  }
  const auto products = mul_secret_batch(net, lhs, rhs);

  // Conversions: products, observations, then the overall total.
  std::vector<SecretInt> to_convert = products;
  to_convert.insert(to_convert.end(), m.cells.begin(), m.cells.end());
  to_convert.push_back(*m.total);
  const auto converted = int_to_fixed_batch(net, to_convert);
  const std::span<const SecretFixed> conv(converted);
  const auto products_f = conv.first(cells);
  const auto observed_f = conv.subspan(cells, cells);
  const std::vector<SecretFixed> total_f(cells, conv.back());

  const auto expected = div_fixed_batch(net, products_f, total_f);
  const auto deviation = sub_fixed_batch(net, observed_f, expected);
  const auto squared = mul_fixed_batch(net, deviation, deviation);
  const auto contributions = div_fixed_batch(net, squared, expected);
  rec.mark("cells");

  return finish_chisq(net, input, contributions, rec);
}

}  // namespace mpcstats
