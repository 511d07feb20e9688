#pragma once

#include <span>
#include <vector>

#include "mpcstats/engine.hpp"
#include "mpcstats/secret.hpp"

namespace mpcstats {

// Local (free) operations on shares. Operands must come from the same
// network configuration; ConfigError otherwise.
SecretInt add(const SecretInt& a, const SecretInt& b);
SecretInt sub(const SecretInt& a, const SecretInt& b);
SecretInt negate(const SecretInt& a);
SecretInt mul_public(const SecretInt& a, const Integer& c);

SecretFixed negate(const SecretFixed& a);

// Fixed-point addition is local arithmetic on shares but is charged as a
// fixed_add gate, which only costs anything under the picco-emulation
// profile.
SecretFixed add_fixed(PartyNetwork& net, const SecretFixed& a, const SecretFixed& b);
SecretFixed sub_fixed(PartyNetwork& net, const SecretFixed& a, const SecretFixed& b);
std::vector<SecretFixed> add_fixed_batch(PartyNetwork& net, std::span<const SecretFixed> a,
                                         std::span<const SecretFixed> b);
std::vector<SecretFixed> sub_fixed_batch(PartyNetwork& net, std::span<const SecretFixed> a,
                                         std::span<const SecretFixed> b);

// Degree-reduction multiplication: every party multiplies its two shares,
// reshares the degree-2t product at degree t, and recombines the received
// sub-shares with the Lagrange weights for target 0. One round per batch.
SecretInt mul_secret(PartyNetwork& net, const SecretInt& a, const SecretInt& b);
std::vector<SecretInt> mul_secret_batch(PartyNetwork& net, std::span<const SecretInt> a,
                                        std::span<const SecretInt> b);

// Ideal gates, evaluated by the dealer.
// Integer division truncates toward zero, as in C.
SecretInt div_secret_int(PartyNetwork& net, const SecretInt& a, const SecretInt& b);
std::vector<SecretInt> div_secret_int_batch(PartyNetwork& net, std::span<const SecretInt> a,
                                            std::span<const SecretInt> b);
// raw = trunc(a_raw * 2^f / b_raw)
SecretFixed div_fixed(PartyNetwork& net, const SecretFixed& a, const SecretFixed& b);
std::vector<SecretFixed> div_fixed_batch(PartyNetwork& net, std::span<const SecretFixed> a,
                                         std::span<const SecretFixed> b);
// raw = trunc(a_raw * b_raw / 2^f)
SecretFixed mul_fixed(PartyNetwork& net, const SecretFixed& a, const SecretFixed& b);
std::vector<SecretFixed> mul_fixed_batch(PartyNetwork& net, std::span<const SecretFixed> a,
                                         std::span<const SecretFixed> b);
// raw = a * 2^f with f = the network's frac_bits; |a| must be below
// 2^(max_bitlength - f).
SecretFixed int_to_fixed(PartyNetwork& net, const SecretInt& a);
std::vector<SecretFixed> int_to_fixed_batch(PartyNetwork& net, std::span<const SecretInt> a);

// Pairwise tree reduction in ceil(log2 k) sequential batches. At every level
// element j is added to element (live - j - 1); inputs are zero-padded to a
// power of two first.
SecretFixed tree_sum_fixed(PartyNetwork& net, std::span<const SecretFixed> xs);

}  // namespace mpcstats
