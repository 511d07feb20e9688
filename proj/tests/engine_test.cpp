#include "mpcstats/engine.hpp"

#include <gtest/gtest.h>

#include "mpcstats/errors.hpp"
#include "mpcstats/protocols.hpp"
#include "test_support.hpp"

namespace mpcstats {
namespace {

using testing::input;
using testing::small_config;

TEST(EngineTest, FreshLedgerIsZero) {
  PartyNetwork net(small_config());
  const auto report = net.ledger_report();
  EXPECT_EQ(report.interactive_ops, 0u);
  EXPECT_EQ(report.rounds, 0u);
  EXPECT_EQ(report.bytes_sent, 0u);
  EXPECT_TRUE(report.per_gate.empty());
}

TEST(EngineTest, ConfigValidation) {
  auto cfg = small_config();
  cfg.field = PrimeField::make(101);
  EXPECT_THROW(PartyNetwork{cfg}, ConfigError);
  cfg = small_config();
  cfg.parties = 4;
  cfg.threshold = 2;
  EXPECT_THROW(PartyNetwork{cfg}, ConfigError);
  cfg = small_config();
  cfg.frac_bits = 100;
  EXPECT_THROW(PartyNetwork{cfg}, ConfigError);
}

TEST(EngineTest, DistributeThenOpenRoundTrips) {
  PartyNetwork net(small_config(3));
  Prng rng = make_prng(3, 99);
  std::uniform_int_distribution<long> dist(-(1L << 40), 1L << 40);
  std::vector<Integer> values;
  for (int i = 0; i < 100; ++i) values.emplace_back(dist(rng));
  const auto shared = net.distribute_input(2, values);
  EXPECT_EQ(net.ledger_report().interactive_ops, 0u);
  EXPECT_EQ(net.ledger_report().bytes_sent, 0u);
  for (std::size_t i = 0; i < values.size(); ++i) EXPECT_EQ(net.open(shared[i]), values[i]);
  EXPECT_TRUE(net.distribute_input(0, std::vector<Integer>{}).empty());
}

TEST(EngineTest, DistributeRejectsOutOfRangeValues) {
  auto cfg = small_config();
  cfg.max_bitlength = 32;
  PartyNetwork net(cfg);
  Integer big = 1;
  big <<= 63;
  EXPECT_THROW(net.distribute_input(0, std::vector<Integer>{big}), OverflowError);
  EXPECT_THROW(net.distribute_input(0, std::vector<Integer>{Integer(1) << 32}), OverflowError);
  EXPECT_NO_THROW(net.distribute_input(0, std::vector<Integer>{(Integer(1) << 32) - 1}));
  EXPECT_THROW(net.distribute_input(0, std::vector<Integer>{8}, 3), OverflowError);
  EXPECT_THROW(net.distribute_input(0, std::vector<Integer>{8}, 40), ConfigError);
}

TEST(EngineTest, OpenDecodesSignedAndFixedValues) {
  PartyNetwork net(small_config());
  EXPECT_EQ(net.open(input(net, 7)), 7);
  EXPECT_EQ(net.open(input(net, -5)), -5);
  const int f = net.config().frac_bits;
  const SecretFixed three(input(net, 3L << f), f);
  const auto opened = net.open(three);
  EXPECT_EQ(opened.to_double(), 3.0);
  EXPECT_EQ(opened.exact(), 3);
  EXPECT_EQ(net.ledger_report().instances(GateKind::Open), 3u);
}

TEST(EngineTest, OpenDetectsInconsistentShares) {
  PartyNetwork net(small_config());
  auto shares = input(net, 11).shares();
  shares[2].value += FieldElement::one(net.field());
  EXPECT_THROW(net.open(SecretInt(shares, 32)), IntegrityError);
}

TEST(EngineTest, BatchOfMultiplicationsCostsOneRound) {
  PartyNetwork net(small_config());
  std::vector<GateInstance> gates;
  for (int i = 0; i < 64; ++i) {
    gates.push_back({GateKind::Multiplication, {input(net, i), input(net, 2)}});
  }
  const auto before = net.ledger_report();
  const auto results = net.run_batch(gates);
  const auto delta = net.ledger_report() - before;
  EXPECT_EQ(delta.interactive_ops, 64u);
  EXPECT_EQ(delta.rounds, 1u);
  EXPECT_EQ(delta.batches, 1u);
  ASSERT_EQ(results.size(), 64u);
  for (int i = 0; i < 64; ++i) EXPECT_EQ(net.open(std::get<SecretInt>(results[static_cast<std::size_t>(i)])), 2 * i);
}

TEST(EngineTest, EmptyBatchChangesNothing) {
  PartyNetwork net(small_config());
  const auto before = net.ledger_report();
  EXPECT_TRUE(net.run_batch({}).empty());
  EXPECT_EQ(net.ledger_report(), before);
}

TEST(EngineTest, SequentialBatchesAddRounds) {
  PartyNetwork net(small_config());
  const auto a = input(net, 3);
  const auto b = input(net, 4);
  mul_secret(net, a, b);
  auto report = net.ledger_report();
  EXPECT_EQ(report.interactive_ops, 1u);
  EXPECT_EQ(report.rounds, 1u);
  mul_secret(net, a, b);
  report = net.ledger_report();
  EXPECT_EQ(report.interactive_ops, 2u);
  EXPECT_EQ(report.rounds, 2u);
  EXPECT_EQ(report.per_gate.at(GateKind::Multiplication).instances, 2u);
}

TEST(EngineTest, MixedBatchAdvancesByLargestRoundCost) {
  PartyNetwork net(small_config());
  auto table = GateCostTable::default_profile();
  table.set(GateKind::IntDivision, {3, 5});
  net.set_cost_table(table);
  const auto a = input(net, 9);
  const auto b = input(net, 2);
  const std::vector<GateInstance> gates{
      {GateKind::Multiplication, {a, b}},
      {GateKind::IntDivision, {a, b}},
      {GateKind::IntDivision, {b, a}},
  };
  const auto results = net.run_batch(gates);
  const auto report = net.ledger_report();
  EXPECT_EQ(report.interactive_ops, 1u + 2u * 3u);
  EXPECT_EQ(report.rounds, 5u);
  EXPECT_EQ(net.open(std::get<SecretInt>(results[0])), 18);
  EXPECT_EQ(net.open(std::get<SecretInt>(results[1])), 4);
  EXPECT_EQ(net.open(std::get<SecretInt>(results[2])), 0);
}

TEST(EngineTest, DependentGatesInOneBatchAreRejected) {
  PartyNetwork net(small_config());
  const auto a = input(net, 2);
  const std::vector<GateInstance> gates{
      {GateKind::Multiplication, {a, a}},
      {GateKind::Multiplication, {BatchRef{0}, a}},
  };
  EXPECT_THROW(net.run_batch(gates), SchedulingError);
  EXPECT_EQ(net.ledger_report().interactive_ops, 0u);
  EXPECT_EQ(net.pending_messages(), 0u);
}

TEST(EngineTest, GateOperandTypesAreChecked) {
  PartyNetwork net(small_config());
  const auto a = input(net, 2);
  const SecretFixed fa(a, net.config().frac_bits);
  const std::vector<GateInstance> wrong_type{{GateKind::FixedDivision, {a, a}}};
  EXPECT_THROW(net.run_batch(wrong_type), ConfigError);
  const std::vector<GateInstance> wrong_arity{{GateKind::Multiplication, {a}}};
  EXPECT_THROW(net.run_batch(wrong_arity), ConfigError);
  const std::vector<GateInstance> mixed_frac{{GateKind::FixedAddition, {fa, SecretFixed(a, 3)}}};
  EXPECT_THROW(net.run_batch(mixed_frac), ConfigError);

  PartyNetwork other(EngineConfig{5, 2});
  const auto foreign = input(other, 2);
  const std::vector<GateInstance> foreign_gate{{GateKind::Multiplication, {a, foreign}}};
  EXPECT_THROW(net.run_batch(foreign_gate), ConfigError);
}

TEST(EngineTest, MessagesAreInvisibleInTheRoundTheyAreSent) {
  PartyNetwork net(small_config());
  net.send(0, 1, {FieldElement::one(net.field())});
  EXPECT_THROW(net.receive(1, 0), IntegrityError);
  net.advance_round();
  EXPECT_EQ(net.receive(1, 0).front(), FieldElement::one(net.field()));
  EXPECT_THROW(net.receive(1, 0), IntegrityError);
  EXPECT_EQ(net.ledger_report().bytes_sent, 32u);
}

TEST(EngineTest, MultiplicationTrafficIsCounted) {
  PartyNetwork net(small_config());
  mul_secret(net, input(net, 2), input(net, 3));
  // each of 3 parties sends one sub-share to each of the 2 others
  EXPECT_EQ(net.ledger_report().bytes_sent, 6u * 32u);
  EXPECT_EQ(net.pending_messages(), 0u);
}

TEST(EngineTest, IdealGatesAreTaggedInTheLedger) {
  PartyNetwork net(small_config());
  div_secret_int(net, input(net, 9), input(net, 2));
  const auto report = net.ledger_report();
  EXPECT_EQ(report.dealer_reveals.at(GateKind::IntDivision), 2u);
  EXPECT_EQ(report.dealer_reveals.count(GateKind::Multiplication), 0u);
}

CostSummary run_sample(std::uint64_t seed, std::vector<Share>* shares_out, Integer* value_out) {
  PartyNetwork net(small_config(seed));
  const auto a = input(net, 1234);
  const auto b = input(net, -77);
  const auto p = mul_secret(net, a, b);
  const auto q = div_secret_int(net, p, b);
  *shares_out = q.shares();
  *value_out = net.open(q);
  return net.ledger_report();
}

TEST(EngineTest, IdenticalSeedsGiveIdenticalRuns) {
  std::vector<Share> s1, s2, s3;
  Integer v1, v2, v3;
  const auto l1 = run_sample(42, &s1, &v1);
  const auto l2 = run_sample(42, &s2, &v2);
  const auto l3 = run_sample(43, &s3, &v3);
  EXPECT_EQ(l1, l2);
  EXPECT_EQ(v1, v2);
  ASSERT_EQ(s1.size(), s2.size());
  bool any_diff = false;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    EXPECT_EQ(s1[i].value, s2[i].value);
    any_diff = any_diff || s1[i].value != s3[i].value;
  }
  EXPECT_TRUE(any_diff);
  EXPECT_EQ(v1, v3);
}

TEST(EngineTest, LedgerEqualsSumOfBatches) {
  PartyNetwork net(small_config(5, CostProfile::PiccoEmulation));
  const auto a = input(net, 6);
  const auto b = input(net, 3);
  CostSummary sum;
  auto step = [&](auto&& fn) {
    const auto before = net.ledger_report();
    fn();
    sum = sum + (net.ledger_report() - before);
  };
  step([&] { mul_secret(net, a, b); });
  step([&] { div_secret_int(net, a, b); });
  step([&] { add_fixed(net, int_to_fixed(net, a), int_to_fixed(net, b)); });
  step([&] { net.open(a); });
  EXPECT_EQ(sum, net.ledger_report());
}

TEST(EngineTest, ProfilesDifferOnlyInFixedAddition) {
  const auto d = GateCostTable::default_profile();
  const auto p = GateCostTable::picco_emulation();
  for (auto kind : kAllGateKinds) {
    if (kind == GateKind::FixedAddition) {
      EXPECT_EQ(d.cost(kind), (GateCost{0, 0}));
      EXPECT_EQ(p.cost(kind), (GateCost{1, 1}));
    } else {
      EXPECT_EQ(d.cost(kind), (GateCost{1, 1}));
      EXPECT_EQ(p.cost(kind), d.cost(kind));
    }
  }
}

TEST(EngineTest, GateNamesRoundTrip) {
  for (auto kind : kAllGateKinds) EXPECT_EQ(parse_gate_name(gate_name(kind)), kind);
  EXPECT_FALSE(parse_gate_name("nope").has_value());
  EXPECT_EQ(parse_profile_name("picco-emulation"), CostProfile::PiccoEmulation);
  EXPECT_EQ(parse_profile_name("default"), CostProfile::Default);
}

}  // namespace
}  // namespace mpcstats
