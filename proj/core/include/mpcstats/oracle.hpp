#pragma once

// Plaintext reference implementations. Nothing in the secure path links
// against this library; it exists for tests, benchmarks and the CLI's
// self-check.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpcstats/field.hpp"
#include "mpcstats/secret.hpp"

namespace mpcstats::oracle {

using CountMatrix = std::vector<std::vector<std::int64_t>>;

// Integer Newton iterates k_0 = 1, k_i = (k_{i-1}^2 + num) / (2 k_{i-1}) with
// num = a * 100^prec and C truncating division. Stops early if a divisor
// reaches zero and records the (1-based) iteration where that happened.
struct NewtonTrace {
  std::vector<Integer> iterates;
  std::optional<int> zero_divisor_step;
};

NewtonTrace newton_trace(const Integer& a, int prec, int iterations);

// The secure square root's opened result: trunc(k * 2^f / 10^prec) after
// `iterations` (default prec + 10) steps. Throws DivisionByZeroError where
// the secure program would.
FixedValue sqrt_exact(const Integer& a, int prec, int frac_bits,
                      std::optional<int> iterations = std::nullopt);

// Replays the standard deviation program with its integer truncations.
FixedValue stddev_exact(std::span<const Integer> values, int prec, int frac_bits,
                        std::optional<int> iterations = std::nullopt);

// Real-valued population standard deviation.
double stddev_real(std::span<const Integer> values);

struct ChiSqReference {
  double statistic = 0.0;
  std::int64_t degrees_of_freedom = 0;
};

// sum (O - E)^2 / E with E = row * column / total, in long double.
ChiSqReference chisq(const CountMatrix& counts);
// sum (x * s_o - s_c * s_r)^2 / (s_c * s_r * s_o), evaluated exactly and
// rounded once at the end.
double chisq_restructured(const CountMatrix& counts);

// Bit-exact replay of the optimized secure program: per-cell
// trunc(num * 2^f / den) summed in fixed point.
FixedValue chisq_fixed_exact(const CountMatrix& counts, int frac_bits);

}  // namespace mpcstats::oracle
