#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpcstats/cost.hpp"
#include "mpcstats/engine.hpp"
#include "mpcstats/secret.hpp"

namespace mpcstats {

// Data of each input party; the per-party sizes are public.
struct StdDevInput {
  std::vector<std::vector<Integer>> parties;

  std::vector<std::size_t> sizes() const;
  std::size_t total() const;
  // At least one value overall.
  void validate() const;
};

// One row of counts per input party.
struct ChiSqInput {
  std::vector<std::vector<std::int64_t>> counts;

  std::size_t rows() const { return counts.size(); }
  std::size_t cols() const { return counts.empty() ? 0 : counts.front().size(); }
  // Shape >= 2x2, rectangular, non-negative. Zero marginals are not checked
  // here: they surface as a division by zero inside the secure program.
  void validate() const;
};

// Ledger delta of one named program phase.
struct PhaseCost {
  std::string name;
  CostSummary cost;
};

struct StdDevResult {
  FixedValue value;
  CostSummary ledger;
  std::vector<PhaseCost> phases;

  const CostSummary& phase(const std::string& name) const;
};

struct ChiSqResult {
  FixedValue statistic;
  std::int64_t degrees_of_freedom = 0;
  CostSummary ledger;
  std::vector<PhaseCost> phases;

  const CostSummary& phase(const std::string& name) const;
};

// Integer Newton-Raphson square root with a data-independent schedule.
// Scales `a` by 100^prec, runs `iterations` (default prec + 10) steps of
// k <- (k*k + num) / (2k) from k = 1, and returns k / 10^prec in fixed point.
// Every step is one multiplication and one integer division whatever the
// input. A zero divisor (a = 0 drives k to 0) raises DivisionByZeroError.
SecretFixed sqrt_newton(PartyNetwork& net, const SecretInt& a, int prec,
                        std::optional<int> iterations = std::nullopt);

// Population standard deviation with integer mean and variance, squared
// differences in a single multiplication batch.
StdDevResult stddev(PartyNetwork& net, const StdDevInput& input, int prec = 1,
                    std::optional<int> iterations = std::nullopt);
// Same arithmetic; squared differences one multiplication round at a time.
StdDevResult stddev_unoptimized(PartyNetwork& net, const StdDevInput& input, int prec = 1,
                                std::optional<int> iterations = std::nullopt);

// (x*s_o - s_c*s_r)^2 / (s_c*s_r*s_o) per cell: four multiplications in two
// batches, two conversions and a single fixed-point division per cell, then
// a tree sum.
ChiSqResult chisq_optimized(PartyNetwork& net, const ChiSqInput& input);
// Textbook form: E = s_c*s_r / s_o, (O - E)^2 / E. Two fixed-point divisions,
// one fixed-point multiplication and one subtraction per cell.
ChiSqResult chisq_unoptimized(PartyNetwork& net, const ChiSqInput& input);

}  // namespace mpcstats
