#include "mpcstats/engine.hpp"

#include <algorithm>
#include <string>

#include "gate_kernels.hpp"
#include "mpcstats/errors.hpp"

namespace mpcstats {

namespace {

constexpr std::uint64_t kDealerStream = 0x10000;
constexpr std::uint64_t kInputStreamBase = 0x20000;

}  // namespace

void EngineConfig::validate() const {
  sharing().validate();
  if (max_bitlength < 1) throw ConfigError("max bitlength must be positive");
  if (!field->supports_bitlength(max_bitlength)) {
    throw ConfigError("field modulus too small for max bitlength " +
                      std::to_string(max_bitlength) + " (need p > 2^" +
                      std::to_string(2 * max_bitlength + 8) + ")");
  }
  if (frac_bits < 0 || frac_bits >= max_bitlength) {
    throw ConfigError("fractional bits must lie in [0, max bitlength)");
  }
}

Dealer::Dealer(PartyNetwork& net)
    : net_(net), rng_(make_prng(net.config().seed, kDealerStream)) {}

Integer Dealer::reveal(const SecretInt& x, GateKind reason) {
  net_.ledger().add_bytes(static_cast<std::uint64_t>(x.parties()) *
                          net_.field()->element_bytes());
  net_.ledger().tag_dealer_reveal(reason);
  return decode_signed(reconstruct_checked(x.shares()));
}

SecretInt Dealer::reshare(const Integer& value, int bitlength) {
  const auto& cfg = net_.config();
  auto shares = share_polynomial(encode_signed(cfg.field, value), cfg.parties, cfg.threshold, rng_);
  net_.ledger().add_bytes(static_cast<std::uint64_t>(cfg.parties) * cfg.field->element_bytes());
  return SecretInt(std::move(shares), net_.clamp_bitlength(bitlength));
}

PartyNetwork::PartyNetwork(EngineConfig config)
    : config_((config.validate(), std::move(config))),
      costs_(GateCostTable::for_profile(config_.profile)),
      queues_(static_cast<std::size_t>(config_.parties),
              std::vector<std::deque<Message>>(static_cast<std::size_t>(config_.parties))),
      dealer_(*this) {
  party_rngs_.reserve(static_cast<std::size_t>(config_.parties));
  for (int i = 0; i < config_.parties; ++i) {
    party_rngs_.push_back(make_prng(config_.seed, static_cast<std::uint64_t>(i) + 1));
  }
}

void PartyNetwork::send(int from, int to, std::vector<FieldElement> payload) {
  if (from < 0 || from >= parties() || to < 0 || to >= parties()) {
    throw ConfigError("party index out of range");
  }
  if (from != to) ledger_.add_bytes(payload.size() * config_.field->element_bytes());
  queues_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)].push_back(
      Message{clock_, std::move(payload)});
}

std::vector<FieldElement> PartyNetwork::receive(int to, int from) {
  auto& queue = queues_.at(static_cast<std::size_t>(from)).at(static_cast<std::size_t>(to));
  if (queue.empty()) {
    throw IntegrityError("party " + std::to_string(to) + " expected a message from party " +
                         std::to_string(from));
  }
  if (queue.front().sent_round >= clock_) {
    throw IntegrityError("message from party " + std::to_string(from) +
                         " read in the round it was sent");
  }
  auto payload = std::move(queue.front().payload);
  queue.pop_front();
  return payload;
}

std::size_t PartyNetwork::pending_messages() const {
  std::size_t total = 0;
  for (const auto& row : queues_) {
    for (const auto& q : row) total += q.size();
  }
  return total;
}

Prng& PartyNetwork::party_rng(int party) { return party_rngs_.at(static_cast<std::size_t>(party)); }

void PartyNetwork::check_range(const Integer& value, const char* what) const {
  if (magnitude_bits(value) > config_.max_bitlength) {
    throw OverflowError(std::string(what) + " " + value.get_str() + " exceeds 2^" +
                        std::to_string(config_.max_bitlength));
  }
}

int PartyNetwork::clamp_bitlength(int bitlength) const {
  return std::clamp(bitlength, 1, config_.max_bitlength);
}

std::vector<SecretInt> PartyNetwork::distribute_input(int input_party,
                                                      std::span<const Integer> values,
                                                      std::optional<int> bitlength) {
  const int bits = bitlength.value_or(config_.max_bitlength);
  if (bits < 1 || bits > config_.max_bitlength) {
    throw ConfigError("input bitlength must lie in [1, " + std::to_string(config_.max_bitlength) +
                      "]");
  }
  for (const auto& v : values) {
    if (magnitude_bits(v) > bits) {
      throw OverflowError("input " + v.get_str() + " of party " + std::to_string(input_party) +
                          " does not fit in " + std::to_string(bits) + " bits");
    }
  }
  auto [it, inserted] = input_rngs_.try_emplace(
      input_party, make_prng(config_.seed, kInputStreamBase + static_cast<std::uint64_t>(input_party)));
  Prng& rng = it->second;
  std::vector<SecretInt> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    out.emplace_back(
        share_polynomial(encode_signed(config_.field, v), config_.parties, config_.threshold, rng),
        bits);
  }
  return out;
}

SecretInt PartyNetwork::constant(const Integer& value) {
  check_range(value, "constant");
  const auto e = encode_signed(config_.field, value);
  std::vector<Share> shares;
  shares.reserve(static_cast<std::size_t>(config_.parties));
  for (int i = 0; i < config_.parties; ++i) shares.push_back(Share{i + 1, e, config_.threshold});
  return SecretInt(std::move(shares), std::max(1, magnitude_bits(value)));
}

SecretFixed PartyNetwork::constant_fixed(const Integer& raw) {
  return SecretFixed(constant(raw), config_.frac_bits);
}

Integer PartyNetwork::open(const SecretInt& x) {
  const GateInstance gate{GateKind::Open, {x}};
  return std::get<Integer>(run_batch(std::span(&gate, 1)).front());
}

FixedValue PartyNetwork::open(const SecretFixed& x) {
  const GateInstance gate{GateKind::Open, {x}};
  return std::get<FixedValue>(run_batch(std::span(&gate, 1)).front());
}

namespace {

std::size_t arity(GateKind kind) {
  return kind == GateKind::IntToFixed || kind == GateKind::Open ? 1 : 2;
}

bool takes_fixed(GateKind kind) {
  return kind == GateKind::FixedDivision || kind == GateKind::FixedMultiplication ||
         kind == GateKind::FixedAddition;
}

const SecretInt& int_part(const Operand& op) {
  if (const auto* f = std::get_if<SecretFixed>(&op)) return f->raw();
  return std::get<SecretInt>(op);
}

}  // namespace

std::vector<GateResult> PartyNetwork::run_batch(std::span<const GateInstance> gates) {
  // Validate the whole batch before any gate runs.
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    const std::string where = "gate " + std::to_string(i) + " (" + std::string(gate_name(g.kind)) + ")";
    if (g.inputs.size() != arity(g.kind)) throw ConfigError(where + ": wrong operand count");
    for (const auto& op : g.inputs) {
      if (const auto* ref = std::get_if<BatchRef>(&op)) {
        throw SchedulingError(where + " depends on gate " + std::to_string(ref->index) +
                              " of the same batch");
      }
      const bool is_fixed = std::holds_alternative<SecretFixed>(op);
      if (g.kind != GateKind::Open && takes_fixed(g.kind) != is_fixed) {
        throw ConfigError(where + ": operand has the wrong numeric type");
      }
      const auto& s = int_part(op);
      if (s.parties() != config_.parties || s.degree() != config_.threshold ||
          !(*s.field() == *config_.field)) {
        throw ConfigError(where + ": operand belongs to a different network configuration");
      }
    }
    if (takes_fixed(g.kind)) {
      const auto& a = std::get<SecretFixed>(g.inputs[0]);
      const auto& b = std::get<SecretFixed>(g.inputs[1]);
      if (a.frac_bits() != b.frac_bits()) {
        throw ConfigError(where + ": fixed-point operands with different fractional bits");
      }
    }
  }

  std::map<GateKind, std::vector<std::size_t>> by_kind;
  for (std::size_t i = 0; i < gates.size(); ++i) by_kind[gates[i].kind].push_back(i);

  std::vector<std::optional<GateResult>> results(gates.size());
  for (const auto& [kind, indices] : by_kind) {
    auto int_pairs = [&] {
      std::vector<detail::IntPair> pairs;
      for (auto i : indices) {
        pairs.emplace_back(&std::get<SecretInt>(gates[i].inputs[0]),
                           &std::get<SecretInt>(gates[i].inputs[1]));
      }
      return pairs;
    };
    auto fixed_pairs = [&] {
      std::vector<detail::FixedPair> pairs;
      for (auto i : indices) {
        pairs.emplace_back(&std::get<SecretFixed>(gates[i].inputs[0]),
                           &std::get<SecretFixed>(gates[i].inputs[1]));
      }
      return pairs;
    };
    auto scatter = [&](auto&& outputs) {
      for (std::size_t k = 0; k < indices.size(); ++k) results[indices[k]] = std::move(outputs[k]);
    };

    switch (kind) {
      case GateKind::Multiplication: scatter(detail::multiply(*this, int_pairs())); break;
      case GateKind::IntDivision: scatter(detail::divide_int(*this, int_pairs())); break;
      case GateKind::FixedDivision: scatter(detail::divide_fixed(*this, fixed_pairs())); break;
      case GateKind::FixedMultiplication:
        scatter(detail::multiply_fixed(*this, fixed_pairs()));
        break;
      case GateKind::FixedAddition: scatter(detail::add_fixed(*this, fixed_pairs())); break;
      case GateKind::IntToFixed: {
        std::vector<const SecretInt*> inputs;
        for (auto i : indices) inputs.push_back(&std::get<SecretInt>(gates[i].inputs[0]));
        scatter(detail::convert_to_fixed(*this, inputs));
        break;
      }
      case GateKind::Open: {
        std::vector<const SecretInt*> inputs;
        for (auto i : indices) inputs.push_back(&int_part(gates[i].inputs[0]));
        auto values = detail::open_values(*this, inputs);
        for (std::size_t k = 0; k < indices.size(); ++k) {
          const auto& op = gates[indices[k]].inputs[0];
          if (const auto* f = std::get_if<SecretFixed>(&op)) {
            results[indices[k]] = FixedValue{std::move(values[k]), f->frac_bits()};
          } else {
            results[indices[k]] = std::move(values[k]);
          }
        }
        break;
      }
    }
  }

  std::map<GateKind, std::uint64_t> counts;
  for (const auto& [kind, indices] : by_kind) counts[kind] = indices.size();
  ledger_.charge_batch(costs_, counts);

  std::vector<GateResult> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

}  // namespace mpcstats
