#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>

namespace mpcstats {

// Plaintext integers are arbitrary precision throughout: chi-squared
// numerators and fixed-point raw values routinely exceed 64 bits.
using Integer = mpz_class;

// Deterministic generator used for every random choice in a run.
using Prng = std::mt19937_64;

Prng make_prng(std::uint64_t seed, std::uint64_t stream);

// Prime modulus shared by all elements of one run.
class PrimeField {
 public:
  // Throws ConfigError unless `modulus` is (probably) prime.
  explicit PrimeField(Integer modulus);

  static std::shared_ptr<const PrimeField> make(Integer modulus);
  // Accepts decimal or 0x-prefixed hexadecimal.
  static std::shared_ptr<const PrimeField> parse(std::string_view text);
  // 2^255 - 19.
  static std::shared_ptr<const PrimeField> default_field();

  const Integer& modulus() const { return modulus_; }
  // Largest magnitude representable by the centered lift: (p - 1) / 2.
  const Integer& half() const { return half_; }
  std::size_t bit_length() const { return bits_; }
  // Wire size of one element, ceil(log2 p / 8).
  std::size_t element_bytes() const { return (bits_ + 7) / 8; }

  // True when products of two values below 2^bitlength cannot wrap,
  // i.e. p > 2^(2 * bitlength + 8).
  bool supports_bitlength(int bitlength) const;

  bool operator==(const PrimeField& other) const { return modulus_ == other.modulus_; }

 private:
  Integer modulus_;
  Integer half_;
  std::size_t bits_;
};

using FieldPtr = std::shared_ptr<const PrimeField>;

class FieldElement {
 public:
  // Reduces `value` into [0, p).
  FieldElement(FieldPtr field, const Integer& value);
  FieldElement(FieldPtr field, long value);

  static FieldElement zero(FieldPtr field) { return FieldElement(std::move(field), 0L); }
  static FieldElement one(FieldPtr field) { return FieldElement(std::move(field), 1L); }
  static FieldElement random(FieldPtr field, Prng& rng);

  const Integer& value() const { return value_; }
  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  // Throws DivisionByZeroError for zero.
  FieldElement inv() const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  std::string to_string() const { return value_.get_str(); }

 private:
  const PrimeField& checked(const FieldElement& rhs) const;

  FieldPtr field_;
  Integer value_;
};

// Centered lift: x >= 0 maps to x, x < 0 maps to p - |x|.
// Throws OverflowError when |x| > (p - 1) / 2.
FieldElement encode_signed(const FieldPtr& field, const Integer& x);
Integer decode_signed(const FieldElement& e);

// Number of bits needed for |x| (0 for x == 0).
int magnitude_bits(const Integer& x);

}  // namespace mpcstats
