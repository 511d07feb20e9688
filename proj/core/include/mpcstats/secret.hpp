#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "mpcstats/field.hpp"
#include "mpcstats/shamir.hpp"

namespace mpcstats {

// Handle to one secret-shared signed integer: one share per computational
// party plus the declared magnitude bound |value| < 2^bitlength.
// Immutable; copies share the underlying share vector.
class SecretInt {
 public:
  SecretInt(std::vector<Share> shares, int bitlength);

  const std::vector<Share>& shares() const { return *shares_; }
  const Share& share_of(int party) const { return (*shares_)[static_cast<std::size_t>(party)]; }
  int parties() const { return static_cast<int>(shares_->size()); }
  int degree() const { return shares_->front().degree; }
  int bitlength() const { return bitlength_; }
  const FieldPtr& field() const { return shares_->front().value.field(); }

  // Same party count, degree and modulus.
  bool compatible_with(const SecretInt& other) const;

 private:
  std::shared_ptr<const std::vector<Share>> shares_;
  int bitlength_;
};

// Fixed-point value: raw integer interpreted as value * 2^frac_bits.
class SecretFixed {
 public:
  SecretFixed(SecretInt raw, int frac_bits) : raw_(std::move(raw)), frac_bits_(frac_bits) {}

  const SecretInt& raw() const { return raw_; }
  int frac_bits() const { return frac_bits_; }

 private:
  SecretInt raw_;
  int frac_bits_;
};

// Opened fixed-point value, kept exact.
struct FixedValue {
  Integer raw;
  int frac_bits = 0;

  mpq_class exact() const;
  double to_double() const;
  // Shortest decimal rendering that still identifies the raw value.
  std::string to_string(int digits = 6) const;

  bool operator==(const FixedValue& other) const {
    return raw == other.raw && frac_bits == other.frac_bits;
  }
};

}  // namespace mpcstats
