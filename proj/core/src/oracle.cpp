#include "mpcstats/oracle.hpp"

#include <cmath>

#include "mpcstats/errors.hpp"

namespace mpcstats::oracle {

namespace {

Integer pow_int(long base, int exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void check_shape(const CountMatrix& counts) {
  if (counts.size() < 2 || counts.front().size() < 2) {
    throw ConfigError("contingency table needs at least 2 rows and 2 columns");
  }
  for (const auto& row : counts) {
    if (row.size() != counts.front().size()) throw ConfigError("ragged contingency table");
  }
}

}  // namespace

NewtonTrace newton_trace(const Integer& a, int prec, int iterations) {
  if (prec < 0 || iterations < 0) throw ConfigError("negative precision or iteration count");
  const Integer num = a * pow_int(100, prec);
  NewtonTrace trace;
  Integer k = 1;
  trace.iterates.push_back(k);
  for (int i = 1; i <= iterations; ++i) {
    const Integer den = 2 * k;
    if (den == 0) {
      trace.zero_divisor_step = i;
      break;
    }
    k = tdiv(k * k + num, den);
    trace.iterates.push_back(k);
  }
  return trace;
}

FixedValue sqrt_exact(const Integer& a, int prec, int frac_bits, std::optional<int> iterations) {
  const auto trace = newton_trace(a, prec, iterations.value_or(prec + 10));
  if (trace.zero_divisor_step) {
    throw DivisionByZeroError("square root iteration reached a zero divisor");
  }
  Integer scaled = trace.iterates.back();
  scaled <<= static_cast<mp_bitcnt_t>(frac_bits);
  return FixedValue{tdiv(scaled, pow_int(10, prec)), frac_bits};
}

FixedValue stddev_exact(std::span<const Integer> values, int prec, int frac_bits,
                        std::optional<int> iterations) {
  if (values.empty()) throw ConfigError("standard deviation of an empty data set");
  const Integer n = static_cast<long>(values.size());
  Integer sum = 0;
  for (const auto& v : values) sum += v;
  const Integer mean = tdiv(sum, n);
  Integer squares = 0;
  for (const auto& v : values) squares += (v - mean) * (v - mean);
  return sqrt_exact(tdiv(squares, n), prec, frac_bits, iterations);
}

double stddev_real(std::span<const Integer> values) {
  if (values.empty()) throw ConfigError("standard deviation of an empty data set");
  mpq_class mean = 0;
  for (const auto& v : values) mean += v;
  mean /= static_cast<long>(values.size());
  mpq_class var = 0;
  for (const auto& v : values) {
    const mpq_class d = mpq_class(v) - mean;
    var += d * d;
  }
  var /= static_cast<long>(values.size());
  return std::sqrt(var.get_d());
}

ChiSqReference chisq(const CountMatrix& counts) {
  check_shape(counts);
  const std::size_t rows = counts.size();
  const std::size_t cols = counts.front().size();
  std::vector<long double> row_sum(rows, 0), col_sum(cols, 0);
  long double total = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto x = static_cast<long double>(counts[i][j]);
      row_sum[i] += x;
      col_sum[j] += x;
      total += x;
    }
  }
  long double stat = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const long double expected = row_sum[i] * col_sum[j] / total;
      if (expected == 0) throw DomainError("zero expected count in contingency table");
      const long double d = static_cast<long double>(counts[i][j]) - expected;
      stat += d * d / expected;
    }
  }
  return {static_cast<double>(stat),
          static_cast<std::int64_t>(rows - 1) * static_cast<std::int64_t>(cols - 1)};
}

double chisq_restructured(const CountMatrix& counts) {
  check_shape(counts);
  const std::size_t rows = counts.size();
  const std::size_t cols = counts.front().size();
  std::vector<Integer> row_sum(rows, 0), col_sum(cols, 0);
  Integer total = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Integer x = static_cast<long>(counts[i][j]);
      row_sum[i] += x;
      col_sum[j] += x;
      total += x;
    }
  }
  mpq_class stat = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Integer expected_num = col_sum[j] * row_sum[i];
      const Integer den = expected_num * total;
      if (den == 0) throw DomainError("zero expected count in contingency table");
      const Integer diff = Integer(static_cast<long>(counts[i][j])) * total - expected_num;
      mpq_class cell(diff * diff, den);
      cell.canonicalize();
      stat += cell;
    }
  }
  return stat.get_d();
}

FixedValue chisq_fixed_exact(const CountMatrix& counts, int frac_bits) {
  check_shape(counts);
  const std::size_t rows = counts.size();
  const std::size_t cols = counts.front().size();
  std::vector<Integer> row_sum(rows, 0), col_sum(cols, 0);
  Integer total = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Integer x = static_cast<long>(counts[i][j]);
      row_sum[i] += x;
      col_sum[j] += x;
      total += x;
    }
  }
  Integer raw = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Integer expected_num = col_sum[j] * row_sum[i];
      const Integer den = expected_num * total;
      if (den == 0) throw DivisionByZeroError("zero denominator in chi-squared cell");
      const Integer diff = Integer(static_cast<long>(counts[i][j])) * total - expected_num;
      Integer num = diff * diff;
      num <<= static_cast<mp_bitcnt_t>(frac_bits);
      raw += tdiv(num, den);
    }
  }
  return FixedValue{raw, frac_bits};
}

}  // namespace mpcstats::oracle
