#include "mpcstats/protocols.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gate_kernels.hpp"
#include "mpcstats/errors.hpp"

namespace mpcstats {

namespace {

void require_compatible(const SecretInt& a, const SecretInt& b) {
  if (!a.compatible_with(b)) {
    throw ConfigError("secret operands come from different sharing configurations");
  }
}

template <typename Op>
SecretInt sharewise(const SecretInt& a, const SecretInt& b, int bitlength, Op op) {
  require_compatible(a, b);
  std::vector<Share> out;
  out.reserve(a.shares().size());
  for (std::size_t i = 0; i < a.shares().size(); ++i) {
    const auto& sa = a.shares()[i];
    out.push_back(Share{sa.point, op(sa.value, b.shares()[i].value), sa.degree});
  }
  return SecretInt(std::move(out), bitlength);
}

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) throw ConfigError("batched operands have different lengths");
}

template <typename Result, typename T>
std::vector<Result> run_binary(PartyNetwork& net, GateKind kind, std::span<const T> a,
                               std::span<const T> b) {
  require_same_length(a.size(), b.size());
  std::vector<GateInstance> gates;
  gates.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) gates.push_back(GateInstance{kind, {a[i], b[i]}});
  auto results = net.run_batch(gates);
  std::vector<Result> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(std::get<Result>(r)));
  return out;
}

}  // namespace

SecretInt add(const SecretInt& a, const SecretInt& b) {
  return sharewise(a, b, std::max(a.bitlength(), b.bitlength()) + 1,
                   [](const FieldElement& x, const FieldElement& y) { return x + y; });
}

SecretInt sub(const SecretInt& a, const SecretInt& b) {
  return sharewise(a, b, std::max(a.bitlength(), b.bitlength()) + 1,
                   [](const FieldElement& x, const FieldElement& y) { return x - y; });
}

SecretInt negate(const SecretInt& a) {
  std::vector<Share> out;
  out.reserve(a.shares().size());
  for (const auto& s : a.shares()) out.push_back(Share{s.point, -s.value, s.degree});
  return SecretInt(std::move(out), a.bitlength());
}

SecretInt mul_public(const SecretInt& a, const Integer& c) {
  const auto k = encode_signed(a.field(), c);
  std::vector<Share> out;
  out.reserve(a.shares().size());
  for (const auto& s : a.shares()) out.push_back(Share{s.point, s.value * k, s.degree});
  return SecretInt(std::move(out), c == 0 ? 1 : a.bitlength() + magnitude_bits(c));
}

SecretFixed negate(const SecretFixed& a) { return SecretFixed(negate(a.raw()), a.frac_bits()); }

SecretFixed add_fixed(PartyNetwork& net, const SecretFixed& a, const SecretFixed& b) {
  return add_fixed_batch(net, std::span(&a, 1), std::span(&b, 1)).front();
}

SecretFixed sub_fixed(PartyNetwork& net, const SecretFixed& a, const SecretFixed& b) {
  return sub_fixed_batch(net, std::span(&a, 1), std::span(&b, 1)).front();
}

std::vector<SecretFixed> add_fixed_batch(PartyNetwork& net, std::span<const SecretFixed> a,
                                         std::span<const SecretFixed> b) {
  return run_binary<SecretFixed>(net, GateKind::FixedAddition, a, b);
}

std::vector<SecretFixed> sub_fixed_batch(PartyNetwork& net, std::span<const SecretFixed> a,
                                         std::span<const SecretFixed> b) {
  std::vector<SecretFixed> negated;
  negated.reserve(b.size());
  for (const auto& x : b) negated.push_back(negate(x));
  return add_fixed_batch(net, a, negated);
}

SecretInt mul_secret(PartyNetwork& net, const SecretInt& a, const SecretInt& b) {
  return mul_secret_batch(net, std::span(&a, 1), std::span(&b, 1)).front();
}

std::vector<SecretInt> mul_secret_batch(PartyNetwork& net, std::span<const SecretInt> a,
                                        std::span<const SecretInt> b) {
  return run_binary<SecretInt>(net, GateKind::Multiplication, a, b);
}

SecretInt div_secret_int(PartyNetwork& net, const SecretInt& a, const SecretInt& b) {
  return div_secret_int_batch(net, std::span(&a, 1), std::span(&b, 1)).front();
}

std::vector<SecretInt> div_secret_int_batch(PartyNetwork& net, std::span<const SecretInt> a,
                                            std::span<const SecretInt> b) {
  return run_binary<SecretInt>(net, GateKind::IntDivision, a, b);
}

SecretFixed div_fixed(PartyNetwork& net, const SecretFixed& a, const SecretFixed& b) {
  return div_fixed_batch(net, std::span(&a, 1), std::span(&b, 1)).front();
}

std::vector<SecretFixed> div_fixed_batch(PartyNetwork& net, std::span<const SecretFixed> a,
                                         std::span<const SecretFixed> b) {
  return run_binary<SecretFixed>(net, GateKind::FixedDivision, a, b);
}

SecretFixed mul_fixed(PartyNetwork& net, const SecretFixed& a, const SecretFixed& b) {
  return mul_fixed_batch(net, std::span(&a, 1), std::span(&b, 1)).front();
}

std::vector<SecretFixed> mul_fixed_batch(PartyNetwork& net, std::span<const SecretFixed> a,
                                         std::span<const SecretFixed> b) {
  return run_binary<SecretFixed>(net, GateKind::FixedMultiplication, a, b);
}

SecretFixed int_to_fixed(PartyNetwork& net, const SecretInt& a) {
  return int_to_fixed_batch(net, std::span(&a, 1)).front();
}

std::vector<SecretFixed> int_to_fixed_batch(PartyNetwork& net, std::span<const SecretInt> a) {
  std::vector<GateInstance> gates;
  gates.reserve(a.size());
  for (const auto& x : a) gates.push_back(GateInstance{GateKind::IntToFixed, {x}});
  auto results = net.run_batch(gates);
  std::vector<SecretFixed> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(std::get<SecretFixed>(r)));
  return out;
}

SecretFixed tree_sum_fixed(PartyNetwork& net, std::span<const SecretFixed> xs) {
  if (xs.empty()) throw ConfigError("tree sum of an empty list");
  const int f = xs.front().frac_bits();
  for (const auto& x : xs) {
    if (x.frac_bits() != f) throw ConfigError("tree sum over mixed fractional bits");
  }
  std::size_t live = std::bit_ceil(xs.size());
  std::vector<SecretFixed> level(xs.begin(), xs.end());
  if (live != xs.size()) {
    const auto zero = SecretFixed(net.constant(0), f);
    level.resize(live, zero);
  }
  while (live > 1) {
    const std::size_t half = live / 2;
    std::vector<SecretFixed> lhs(level.begin(), level.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<SecretFixed> rhs;
    rhs.reserve(half);
    for (std::size_t j = 0; j < half; ++j) rhs.push_back(level[live - j - 1]);
    level = add_fixed_batch(net, lhs, rhs);
    live = half;
  }
  return level.front();
}

namespace detail {

std::vector<SecretInt> multiply(PartyNetwork& net, const std::vector<IntPair>& pairs) {
  const auto& cfg = net.config();
  const int n = cfg.parties;
  const int t = cfg.threshold;
  if (n < 2 * t + 1) throw ConfigError("multiplication needs parties >= 2 * threshold + 1");

  // Sub-shares of the local degree-2t products, one message per recipient.
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<FieldElement>> outbox(static_cast<std::size_t>(n));
    for (auto& box : outbox) box.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      const auto product = a->share_of(i).value * b->share_of(i).value;
      auto subs = share_polynomial(product, n, t, net.party_rng(i));
      for (int j = 0; j < n; ++j) {
        outbox[static_cast<std::size_t>(j)].push_back(std::move(subs[static_cast<std::size_t>(j)].value));
      }
    }
    for (int j = 0; j < n; ++j) net.send(i, j, std::move(outbox[static_cast<std::size_t>(j)]));
  }
  net.advance_round();

  std::vector<int> points(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) points[static_cast<std::size_t>(i)] = i + 1;
  const auto lambda = lagrange_coefficients(cfg.field, points, 0);

  std::vector<std::vector<Share>> shares(pairs.size());
  for (int j = 0; j < n; ++j) {
    std::vector<FieldElement> acc(pairs.size(), FieldElement::zero(cfg.field));
    for (int i = 0; i < n; ++i) {
      const auto msg = net.receive(j, i);
      if (msg.size() != pairs.size()) throw IntegrityError("multiplication message has wrong size");
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        acc[k] += lambda[static_cast<std::size_t>(i)] * msg[k];
      }
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      shares[k].push_back(Share{j + 1, std::move(acc[k]), t});
    }
  }

  std::vector<SecretInt> out;
  out.reserve(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const int bits = pairs[k].first->bitlength() + pairs[k].second->bitlength();
    out.emplace_back(std::move(shares[k]), net.clamp_bitlength(bits));
  }
  return out;
}

namespace {

// Dealer-evaluated gate: reveal operands, compute in the clear, reshare.
template <typename Input, typename Fn>
auto ideal_gate(PartyNetwork& net, const std::vector<Input>& inputs, Fn fn) {
  using Result = decltype(fn(net.dealer(), inputs.front()));
  std::vector<Result> out;
  out.reserve(inputs.size());
  for (const auto& in : inputs) out.push_back(fn(net.dealer(), in));
  if (!inputs.empty()) net.advance_round();
  return out;
}

Integer checked_result(PartyNetwork& net, Integer value, GateKind kind) {
  net.check_range(value, (std::string(gate_name(kind)) + " result").c_str());
  return value;
}

}  // namespace

std::vector<SecretInt> divide_int(PartyNetwork& net, const std::vector<IntPair>& pairs) {
  return ideal_gate(net, pairs, [&](Dealer& d, const IntPair& p) {
    const Integer a = d.reveal(*p.first, GateKind::IntDivision);
    const Integer b = d.reveal(*p.second, GateKind::IntDivision);
    if (b == 0) throw DivisionByZeroError("secret integer division by zero");
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return d.reshare(checked_result(net, q, GateKind::IntDivision), p.first->bitlength());
  });
}

std::vector<SecretFixed> divide_fixed(PartyNetwork& net, const std::vector<FixedPair>& pairs) {
  return ideal_gate(net, pairs, [&](Dealer& d, const FixedPair& p) {
    const int f = p.first->frac_bits();
    const Integer a = d.reveal(p.first->raw(), GateKind::FixedDivision);
    const Integer b = d.reveal(p.second->raw(), GateKind::FixedDivision);
    if (b == 0) throw DivisionByZeroError("fixed-point division by zero");
    Integer scaled = a;
    scaled <<= static_cast<mp_bitcnt_t>(f);
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), b.get_mpz_t());
    return SecretFixed(d.reshare(checked_result(net, q, GateKind::FixedDivision),
                                 p.first->raw().bitlength() + f),
                       f);
  });
}

std::vector<SecretFixed> multiply_fixed(PartyNetwork& net, const std::vector<FixedPair>& pairs) {
  return ideal_gate(net, pairs, [&](Dealer& d, const FixedPair& p) {
    const int f = p.first->frac_bits();
    const Integer a = d.reveal(p.first->raw(), GateKind::FixedMultiplication);
    const Integer b = d.reveal(p.second->raw(), GateKind::FixedMultiplication);
    Integer product = a * b;
    Integer q;
    mpz_tdiv_q_2exp(q.get_mpz_t(), product.get_mpz_t(), static_cast<mp_bitcnt_t>(f));
    return SecretFixed(d.reshare(checked_result(net, q, GateKind::FixedMultiplication),
                                 p.first->raw().bitlength() + p.second->raw().bitlength() - f),
                       f);
  });
}

std::vector<SecretFixed> add_fixed(PartyNetwork& net, const std::vector<FixedPair>& pairs) {
  std::vector<SecretFixed> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto sum = add(a->raw(), b->raw());
    out.emplace_back(SecretInt(sum.shares(), net.clamp_bitlength(sum.bitlength())), a->frac_bits());
  }
  return out;
}

std::vector<SecretFixed> convert_to_fixed(PartyNetwork& net,
                                          const std::vector<const SecretInt*>& inputs) {
  const int f = net.config().frac_bits;
  const int limit = net.config().max_bitlength - f;
  return ideal_gate(net, inputs, [&](Dealer& d, const SecretInt* x) {
    Integer v = d.reveal(*x, GateKind::IntToFixed);
    if (magnitude_bits(v) > limit) {
      throw OverflowError("value " + v.get_str() + " too large for fixed point with " +
                          std::to_string(f) + " fractional bits");
    }
    v <<= static_cast<mp_bitcnt_t>(f);
    return SecretFixed(d.reshare(v, x->bitlength() + f), f);
  });
}

std::vector<Integer> open_values(PartyNetwork& net, const std::vector<const SecretInt*>& inputs) {
  const int n = net.parties();
  // Every party broadcasts its shares.
  for (int i = 0; i < n; ++i) {
    std::vector<FieldElement> mine;
    mine.reserve(inputs.size());
    for (const auto* x : inputs) mine.push_back(x->share_of(i).value);
    for (int j = 0; j < n; ++j) net.send(i, j, mine);
  }
  net.advance_round();

  std::vector<Integer> out;
  std::vector<std::vector<Share>> received(inputs.size());
  for (int j = 0; j < n; ++j) {
    for (auto& r : received) r.clear();
    for (int i = 0; i < n; ++i) {
      const auto msg = net.receive(j, i);
      if (msg.size() != inputs.size()) throw IntegrityError("open message has wrong size");
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        received[k].push_back(Share{i + 1, msg[k], inputs[k]->degree()});
      }
    }
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      Integer v = decode_signed(reconstruct_checked(received[k]));
      if (j == 0) {
        out.push_back(std::move(v));
      } else if (v != out[k]) {
        throw IntegrityError("parties reconstructed different values");
      }
    }
  }
  for (const auto& v : out) net.check_range(v, "opened value");
  return out;
}

}  // namespace detail

}  // namespace mpcstats
