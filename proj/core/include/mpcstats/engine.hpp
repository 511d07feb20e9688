#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mpcstats/cost.hpp"
#include "mpcstats/field.hpp"
#include "mpcstats/secret.hpp"
#include "mpcstats/shamir.hpp"

namespace mpcstats {

struct EngineConfig {
  int parties = 3;
  int threshold = 1;
  FieldPtr field = PrimeField::default_field();
  std::uint64_t seed = 1;
  CostProfile profile = CostProfile::Default;
  int frac_bits = 20;
  // Upper bound on the magnitude (in bits) of any value in the computation.
  int max_bitlength = 100;

  SharingConfig sharing() const { return {parties, threshold, field, seed}; }
  // Sharing constraints, p > 2^(2 * max_bitlength + 8), 0 <= frac_bits < max_bitlength.
  void validate() const;
};

// Refers to the output of another gate of the same batch. Batches must be
// dependency-free, so run_batch rejects any gate carrying one.
struct BatchRef {
  std::size_t index = 0;
};

using Operand = std::variant<SecretInt, SecretFixed, BatchRef>;

struct GateInstance {
  GateKind kind;
  std::vector<Operand> inputs;
};

// Secret gates yield SecretInt / SecretFixed; open yields Integer / FixedValue.
using GateResult = std::variant<SecretInt, SecretFixed, Integer, FixedValue>;

class PartyNetwork;

// Trusted simulation role: hands out inputs, evaluates ideal gates, and
// checks opened values. Insecure by construction, simulation only. Every
// reconstruction is tagged in the ledger with the gate that asked for it.
class Dealer {
 public:
  explicit Dealer(PartyNetwork& net);

  // Collects all shares (counted as traffic) and reconstructs with a
  // consistency check. Throws IntegrityError on inconsistent shares.
  Integer reveal(const SecretInt& x, GateKind reason);
  // Fresh degree-t sharing of `value` sent to the parties.
  SecretInt reshare(const Integer& value, int bitlength);

 private:
  PartyNetwork& net_;
  Prng rng_;
};

// n computational parties running in synchronous lockstep inside one
// process. Messages sent in round r become readable in round r + 1.
class PartyNetwork {
 public:
  explicit PartyNetwork(EngineConfig config);
  PartyNetwork(const PartyNetwork&) = delete;
  PartyNetwork& operator=(const PartyNetwork&) = delete;

  const EngineConfig& config() const { return config_; }
  const GateCostTable& cost_table() const { return costs_; }
  // Replaces the cost table, e.g. to model a different framework.
  void set_cost_table(const GateCostTable& table) { costs_ = table; }
  int parties() const { return config_.parties; }
  const FieldPtr& field() const { return config_.field; }

  // Simulation clock, independent of the ledger's round counter.
  std::uint64_t clock() const { return clock_; }
  void advance_round() { ++clock_; }

  // Party indices are 0-based; party i holds evaluation point i + 1.
  void send(int from, int to, std::vector<FieldElement> payload);
  // Oldest pending message from `from`; throws IntegrityError if there is
  // none or it was sent in the current round.
  std::vector<FieldElement> receive(int to, int from);
  std::size_t pending_messages() const;
  Prng& party_rng(int party);

  Dealer& dealer() { return dealer_; }

  // Secret-shares the values of input party `input_party`. Each value must
  // satisfy |v| < 2^bitlength (bitlength defaults to max_bitlength). Not an
  // interactive computation step, so the ledger is untouched.
  std::vector<SecretInt> distribute_input(int input_party, std::span<const Integer> values,
                                          std::optional<int> bitlength = std::nullopt);
  // Degree-t sharing of a public value with no randomness and no cost
  // (a private variable initialised from a public one).
  SecretInt constant(const Integer& value);
  SecretFixed constant_fixed(const Integer& raw);

  Integer open(const SecretInt& x);
  FixedValue open(const SecretFixed& x);

  // Executes mutually independent gates together. Ops add up; rounds advance
  // by the largest per-batch round cost in the table. Throws SchedulingError
  // if a gate refers to another gate of the batch.
  std::vector<GateResult> run_batch(std::span<const GateInstance> gates);

  CostSummary ledger_report() const { return ledger_.summary(); }
  CostLedger& ledger() { return ledger_; }

  // Throws OverflowError unless |value| < 2^max_bitlength.
  void check_range(const Integer& value, const char* what) const;
  int clamp_bitlength(int bitlength) const;

 private:
  struct Message {
    std::uint64_t sent_round;
    std::vector<FieldElement> payload;
  };

  EngineConfig config_;
  GateCostTable costs_;
  CostLedger ledger_;
  std::uint64_t clock_ = 0;
  std::vector<Prng> party_rngs_;
  std::map<int, Prng> input_rngs_;
  // queues_[from][to]
  std::vector<std::vector<std::deque<Message>>> queues_;
  Dealer dealer_;
};

}  // namespace mpcstats
