#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace mpcstats {

enum class GateKind {
  Multiplication,
  IntDivision,
  FixedDivision,
  FixedMultiplication,
  IntToFixed,
  FixedAddition,
  Open,
};

inline constexpr std::array<GateKind, 7> kAllGateKinds = {
    GateKind::Multiplication, GateKind::IntDivision,   GateKind::FixedDivision,
    GateKind::FixedMultiplication, GateKind::IntToFixed, GateKind::FixedAddition,
    GateKind::Open,
};

// Short stable names used in reports: mul, int_div, fixed_div, fixed_mul,
// int_to_fixed, fixed_add, open.
std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_name(std::string_view name);

struct GateCost {
  std::uint64_t ops = 0;
  std::uint64_t rounds = 0;

  bool operator==(const GateCost&) const = default;
};

enum class CostProfile { Default, PiccoEmulation };

std::string_view profile_name(CostProfile profile);
std::optional<CostProfile> parse_profile_name(std::string_view name);

// Cost charged per gate instance (ops) and per batch (rounds).
class GateCostTable {
 public:
  // Every gate is (1 op, 1 round) except fixed addition, which is local.
  static GateCostTable default_profile();
  // As default, but fixed addition costs (1 op, 1 round) so that the depth
  // of a floating-point addition tree shows up in the round count.
  static GateCostTable picco_emulation();
  static GateCostTable for_profile(CostProfile profile);

  const GateCost& cost(GateKind kind) const { return costs_[static_cast<std::size_t>(kind)]; }
  void set(GateKind kind, GateCost cost) { costs_[static_cast<std::size_t>(kind)] = cost; }

 private:
  std::array<GateCost, kAllGateKinds.size()> costs_{};
};

struct GateTally {
  std::uint64_t instances = 0;
  std::uint64_t ops = 0;
  std::uint64_t rounds = 0;

  bool operator==(const GateTally&) const = default;
};

// Point-in-time copy of the ledger counters.
struct CostSummary {
  std::uint64_t interactive_ops = 0;
  std::uint64_t rounds = 0;
  std::uint64_t batches = 0;
  std::uint64_t bytes_sent = 0;
  // Only kinds that actually ran appear here.
  std::map<GateKind, GateTally> per_gate;
  // Number of dealer reconstructions, keyed by the gate that requested them.
  std::map<GateKind, std::uint64_t> dealer_reveals;

  std::uint64_t instances(GateKind kind) const;

  bool operator==(const CostSummary&) const = default;
};

// Counter-wise difference; `later` must have been taken after `earlier`.
CostSummary operator-(const CostSummary& later, const CostSummary& earlier);
CostSummary operator+(const CostSummary& a, const CostSummary& b);

class CostLedger {
 public:
  // Charges one batch: ops add up over instances, rounds advance by the
  // largest per-batch round cost among the kinds present.
  void charge_batch(const GateCostTable& table, const std::map<GateKind, std::uint64_t>& counts);
  void add_bytes(std::uint64_t bytes) { summary_.bytes_sent += bytes; }
  void tag_dealer_reveal(GateKind reason) { ++summary_.dealer_reveals[reason]; }

  const CostSummary& summary() const { return summary_; }

 private:
  CostSummary summary_;
};

}  // namespace mpcstats
