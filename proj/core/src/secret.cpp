#include "mpcstats/secret.hpp"

#include <cstdio>

#include "mpcstats/errors.hpp"

namespace mpcstats {

SecretInt::SecretInt(std::vector<Share> shares, int bitlength)
    : shares_(std::make_shared<const std::vector<Share>>(std::move(shares))),
      bitlength_(bitlength) {
  if (shares_->empty()) throw ConfigError("secret value without shares");
  const int degree = shares_->front().degree;
  for (std::size_t i = 0; i < shares_->size(); ++i) {
    const auto& s = (*shares_)[i];
    if (s.point != static_cast<int>(i) + 1 || s.degree != degree) {
      throw IntegrityError("share vector is not held at points 1..n with a common degree");
    }
  }
}

bool SecretInt::compatible_with(const SecretInt& other) const {
  return parties() == other.parties() && degree() == other.degree() &&
         (field() == other.field() || *field() == *other.field());
}

mpq_class FixedValue::exact() const {
  Integer den = 1;
  den <<= static_cast<mp_bitcnt_t>(frac_bits);
  mpq_class q(raw, den);
  q.canonicalize();
  return q;
}

double FixedValue::to_double() const { return exact().get_d(); }

std::string FixedValue::to_string(int digits) const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, to_double());
  return buf;
}

}  // namespace mpcstats
