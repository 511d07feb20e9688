#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mpcstats/field.hpp"

namespace mpcstats {

// One party's point on a sharing polynomial.
struct Share {
  int point = 0;
  FieldElement value;
  int degree = 0;
};

struct SharingConfig {
  int parties = 3;
  int threshold = 1;
  FieldPtr field = PrimeField::default_field();
  std::uint64_t seed = 0;

  // n >= 3, t >= 1, n >= 2t + 1.
  void validate() const;
};

// Evaluations at points 1..parties of a random degree-`degree` polynomial
// whose constant term is `secret`. Degree 0 is accepted here (it yields
// identical shares) so tests can exercise the degenerate case.
std::vector<Share> share_polynomial(const FieldElement& secret, int parties, int degree,
                                    Prng& rng);

// Validated (t, n) sharing.
std::vector<Share> share(const FieldElement& secret, const SharingConfig& cfg, Prng& rng);

// lambda_i such that sum lambda_i * f(points[i]) = f(target) for every
// polynomial of degree < points.size().
std::vector<FieldElement> lagrange_coefficients(const FieldPtr& field, std::span<const int> points,
                                                int target = 0);

// Interpolates at `target` from the first degree + 1 shares.
FieldElement reconstruct(std::span<const Share> shares, int target = 0);

// Like reconstruct, but also requires every share to lie on the same
// degree-t polynomial. Throws IntegrityError otherwise.
FieldElement reconstruct_checked(std::span<const Share> shares, int target = 0);

}  // namespace mpcstats
