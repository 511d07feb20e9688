#include "mpcstats/cost.hpp"

#include <algorithm>

namespace mpcstats {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::Multiplication: return "mul";
    case GateKind::IntDivision: return "int_div";
    case GateKind::FixedDivision: return "fixed_div";
    case GateKind::FixedMultiplication: return "fixed_mul";
    case GateKind::IntToFixed: return "int_to_fixed";
    case GateKind::FixedAddition: return "fixed_add";
    case GateKind::Open: return "open";
  }
  return "unknown";
}

std::optional<GateKind> parse_gate_name(std::string_view name) {
  for (auto kind : kAllGateKinds) {
    if (gate_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view profile_name(CostProfile profile) {
  return profile == CostProfile::Default ? "default" : "picco-emulation";
}

std::optional<CostProfile> parse_profile_name(std::string_view name) {
  if (name == "default") return CostProfile::Default;
  if (name == "picco-emulation" || name == "picco") return CostProfile::PiccoEmulation;
  return std::nullopt;
}

GateCostTable GateCostTable::default_profile() {
  GateCostTable table;
  for (auto kind : kAllGateKinds) table.set(kind, {1, 1});
  table.set(GateKind::FixedAddition, {0, 0});
  return table;
}

GateCostTable GateCostTable::picco_emulation() {
  auto table = default_profile();
  table.set(GateKind::FixedAddition, {1, 1});
  return table;
}

GateCostTable GateCostTable::for_profile(CostProfile profile) {
  return profile == CostProfile::Default ? default_profile() : picco_emulation();
}

std::uint64_t CostSummary::instances(GateKind kind) const {
  auto it = per_gate.find(kind);
  return it == per_gate.end() ? 0 : it->second.instances;
}

CostSummary operator-(const CostSummary& later, const CostSummary& earlier) {
  CostSummary out;
  out.interactive_ops = later.interactive_ops - earlier.interactive_ops;
  out.rounds = later.rounds - earlier.rounds;
  out.batches = later.batches - earlier.batches;
  out.bytes_sent = later.bytes_sent - earlier.bytes_sent;
  for (const auto& [kind, tally] : later.per_gate) {
    GateTally d = tally;
    if (auto it = earlier.per_gate.find(kind); it != earlier.per_gate.end()) {
      d.instances -= it->second.instances;
      d.ops -= it->second.ops;
      d.rounds -= it->second.rounds;
    }
    if (d.instances != 0) out.per_gate[kind] = d;
  }
  for (const auto& [kind, count] : later.dealer_reveals) {
    std::uint64_t d = count;
    if (auto it = earlier.dealer_reveals.find(kind); it != earlier.dealer_reveals.end()) {
      d -= it->second;
    }
    if (d != 0) out.dealer_reveals[kind] = d;
  }
  return out;
}

CostSummary operator+(const CostSummary& a, const CostSummary& b) {
  CostSummary out = a;
  out.interactive_ops += b.interactive_ops;
  out.rounds += b.rounds;
  out.batches += b.batches;
  out.bytes_sent += b.bytes_sent;
  for (const auto& [kind, tally] : b.per_gate) {
    auto& t = out.per_gate[kind];
    t.instances += tally.instances;
    t.ops += tally.ops;
    t.rounds += tally.rounds;
  }
  for (const auto& [kind, count] : b.dealer_reveals) out.dealer_reveals[kind] += count;
  return out;
}

void CostLedger::charge_batch(const GateCostTable& table,
                              const std::map<GateKind, std::uint64_t>& counts) {
  std::uint64_t rounds = 0;
  bool any = false;
  for (const auto& [kind, count] : counts) {
    if (count == 0) continue;
    any = true;
    const auto& cost = table.cost(kind);
    auto& tally = summary_.per_gate[kind];
    tally.instances += count;
    tally.ops += cost.ops * count;
    tally.rounds += cost.rounds;
    summary_.interactive_ops += cost.ops * count;
    rounds = std::max(rounds, cost.rounds);
  }
  if (!any) return;
  summary_.rounds += rounds;
  ++summary_.batches;
}

}  // namespace mpcstats
