#include "mpcstats/shamir.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mpcstats/errors.hpp"

namespace mpcstats {

void SharingConfig::validate() const {
  if (!field) throw ConfigError("sharing config has no field");
  if (parties < 3) {
    throw ConfigError("at least 3 computational parties are required, got " +
                      std::to_string(parties));
  }
  if (threshold < 1) throw ConfigError("threshold must be >= 1");
  if (parties < 2 * threshold + 1) {
    throw ConfigError("honest majority needs parties >= 2 * threshold + 1 (parties=" +
                      std::to_string(parties) + ", threshold=" + std::to_string(threshold) + ")");
  }
  if (field->modulus() <= parties) throw ConfigError("field too small for the party count");
}

std::vector<Share> share_polynomial(const FieldElement& secret, int parties, int degree,
                                    Prng& rng) {
  if (degree < 0 || parties < 1) throw ConfigError("invalid sharing parameters");
  const auto& field = secret.field();
  std::vector<FieldElement> coeffs;
  coeffs.reserve(static_cast<std::size_t>(degree) + 1);
  coeffs.push_back(secret);
  for (int i = 0; i < degree; ++i) coeffs.push_back(FieldElement::random(field, rng));

  std::vector<Share> shares;
  shares.reserve(static_cast<std::size_t>(parties));
  for (int point = 1; point <= parties; ++point) {
    // Horner
    FieldElement acc = coeffs.back();
    const FieldElement x(field, static_cast<long>(point));
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    shares.push_back(Share{point, std::move(acc), degree});
  }
  return shares;
}

std::vector<Share> share(const FieldElement& secret, const SharingConfig& cfg, Prng& rng) {
  cfg.validate();
  return share_polynomial(secret, cfg.parties, cfg.threshold, rng);
}

std::vector<FieldElement> lagrange_coefficients(const FieldPtr& field, std::span<const int> points,
                                                int target) {
  if (points.empty()) throw ConfigError("lagrange interpolation needs at least one point");
  std::set<long> seen;
  for (int p : points) {
    const Integer reduced = Integer(p) % field->modulus();
    if (!seen.insert(reduced.get_si()).second) {
      throw ConfigError("duplicate evaluation point " + std::to_string(p));
    }
  }
  const FieldElement x(field, static_cast<long>(target));
  std::vector<FieldElement> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const FieldElement xi(field, static_cast<long>(points[i]));
    FieldElement num = FieldElement::one(field);
    FieldElement den = FieldElement::one(field);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const FieldElement xj(field, static_cast<long>(points[j]));
      num *= x - xj;
      den *= xi - xj;
    }
    out.push_back(num * den.inv());
  }
  return out;
}

namespace {

FieldElement interpolate(std::span<const Share> shares, int target) {
  std::vector<int> points;
  points.reserve(shares.size());
  for (const auto& s : shares) points.push_back(s.point);
  const auto& field = shares.front().value.field();
  const auto lambda = lagrange_coefficients(field, points, target);
  FieldElement acc = FieldElement::zero(field);
  for (std::size_t i = 0; i < shares.size(); ++i) acc += lambda[i] * shares[i].value;
  return acc;
}

void require_enough(std::span<const Share> shares) {
  if (shares.empty()) throw InsufficientSharesError("no shares to reconstruct from");
  const int degree = shares.front().degree;
  for (const auto& s : shares) {
    if (s.degree != degree) throw IntegrityError("shares carry different degrees");
  }
  if (static_cast<int>(shares.size()) < degree + 1) {
    throw InsufficientSharesError("degree-" + std::to_string(degree) + " sharing needs " +
                                  std::to_string(degree + 1) + " shares, got " +
                                  std::to_string(shares.size()));
  }
}

}  // namespace

FieldElement reconstruct(std::span<const Share> shares, int target) {
  require_enough(shares);
  const auto k = static_cast<std::size_t>(shares.front().degree) + 1;
  return interpolate(shares.first(k), target);
}

FieldElement reconstruct_checked(std::span<const Share> shares, int target) {
  require_enough(shares);
  const auto k = static_cast<std::size_t>(shares.front().degree) + 1;
  const auto basis = shares.first(k);
  for (std::size_t i = k; i < shares.size(); ++i) {
    if (interpolate(basis, shares[i].point) != shares[i].value) {
      throw IntegrityError("share of party " + std::to_string(shares[i].point) +
                           " is inconsistent with the sharing polynomial");
    }
  }
  return interpolate(basis, target);
}

}  // namespace mpcstats
