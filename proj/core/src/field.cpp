#include "mpcstats/field.hpp"

#include <string>

#include "mpcstats/errors.hpp"

namespace mpcstats {

Prng make_prng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x6d706373u};
  return Prng(seq);
}

PrimeField::PrimeField(Integer modulus) : modulus_(std::move(modulus)) {
  if (modulus_ < 3) {
    throw ConfigError("field modulus must be an odd prime >= 3, got " + modulus_.get_str());
  }
  if (mpz_probab_prime_p(modulus_.get_mpz_t(), 40) == 0) {
    throw ConfigError("field modulus is not prime: " + modulus_.get_str());
  }
  half_ = (modulus_ - 1) / 2;
  bits_ = mpz_sizeinbase(modulus_.get_mpz_t(), 2);
}

std::shared_ptr<const PrimeField> PrimeField::make(Integer modulus) {
  return std::make_shared<const PrimeField>(std::move(modulus));
}

std::shared_ptr<const PrimeField> PrimeField::parse(std::string_view text) {
  std::string s(text);
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s = s.substr(2);
    base = 16;
  }
  Integer value;
  if (s.empty() || value.set_str(s, base) != 0) {
    throw ConfigError("cannot parse field modulus '" + std::string(text) + "'");
  }
  return make(std::move(value));
}

std::shared_ptr<const PrimeField> PrimeField::default_field() {
  static const auto field = [] {
    Integer p = 1;
    p <<= 255;
    p -= 19;
    return make(p);
  }();
  return field;
}

bool PrimeField::supports_bitlength(int bitlength) const {
  Integer bound = 1;
  bound <<= static_cast<mp_bitcnt_t>(2 * bitlength + 8);
  return modulus_ > bound;
}

FieldElement::FieldElement(FieldPtr field, const Integer& value) : field_(std::move(field)) {
  mpz_mod(value_.get_mpz_t(), value.get_mpz_t(), field_->modulus().get_mpz_t());
}

FieldElement::FieldElement(FieldPtr field, long value)
    : FieldElement(std::move(field), Integer(value)) {}

FieldElement FieldElement::random(FieldPtr field, Prng& rng) {
  // Rejection sampling over the bit length of p keeps the draw uniform.
  const std::size_t bits = field->bit_length();
  const std::size_t words = (bits + 63) / 64;
  const std::size_t excess = words * 64 - bits;
  Integer candidate;
  for (;;) {
    candidate = 0;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t w = rng();
      if (i == 0 && excess != 0) w >>= excess;
      mpz_mul_2exp(candidate.get_mpz_t(), candidate.get_mpz_t(), 64);
      mpz_add_ui(candidate.get_mpz_t(), candidate.get_mpz_t(), static_cast<unsigned long>(w));
    }
    if (candidate < field->modulus()) break;
  }
  return FieldElement(std::move(field), candidate);
}

const PrimeField& FieldElement::checked(const FieldElement& rhs) const {
  if (field_ != rhs.field_ && !(*field_ == *rhs.field_)) {
    throw ConfigError("field elements from different moduli");
  }
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  FieldElement out(*this);
  out += rhs;
  return out;
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  FieldElement out(*this);
  out -= rhs;
  return out;
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  FieldElement out(*this);
  out *= rhs;
  return out;
}

FieldElement FieldElement::operator-() const {
  FieldElement out(*this);
  if (out.value_ != 0) out.value_ = field_->modulus() - out.value_;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  const auto& f = checked(rhs);
  value_ += rhs.value_;
  if (value_ >= f.modulus()) value_ -= f.modulus();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  const auto& f = checked(rhs);
  value_ -= rhs.value_;
  if (value_ < 0) value_ += f.modulus();
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  const auto& f = checked(rhs);
  value_ *= rhs.value_;
  mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), f.modulus().get_mpz_t());
  return *this;
}

FieldElement FieldElement::inv() const {
  if (value_ == 0) throw DivisionByZeroError("inverse of zero field element");
  Integer out;
  mpz_invert(out.get_mpz_t(), value_.get_mpz_t(), field_->modulus().get_mpz_t());
  return FieldElement(field_, out);
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  checked(rhs);
  return value_ == rhs.value_;
}

FieldElement encode_signed(const FieldPtr& field, const Integer& x) {
  if (abs(x) > field->half()) {
    throw OverflowError("value " + x.get_str() + " does not fit the field's signed range");
  }
  return FieldElement(field, x);
}

Integer decode_signed(const FieldElement& e) {
  const auto& f = *e.field();
  if (e.value() > f.half()) return e.value() - f.modulus();
  return e.value();
}

int magnitude_bits(const Integer& x) {
  if (x == 0) return 0;
  return static_cast<int>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

}  // namespace mpcstats
