#include "mpcstats/field.hpp"

#include <gtest/gtest.h>

#include "mpcstats/errors.hpp"

namespace mpcstats {
namespace {

FieldPtr small() { return PrimeField::make(101); }

TEST(FieldTest, AdditionWrapsAroundModulus) {
  auto f = small();
  EXPECT_EQ(FieldElement(f, 100L) + FieldElement::one(f), FieldElement::zero(f));
  EXPECT_EQ((FieldElement(f, 3L) + FieldElement(f, 4L)).value(), 7);

  auto big = PrimeField::default_field();
  const FieldElement top(big, big->modulus() - 1);
  EXPECT_TRUE((top + FieldElement::one(big)).is_zero());
}

TEST(FieldTest, MultiplicationSmallCases) {
  auto f = small();
  EXPECT_EQ((FieldElement(f, 50L) * FieldElement(f, 3L)).value(), 49);
  const FieldElement a(f, 77L);
  EXPECT_EQ(a * FieldElement::one(f), a);
  EXPECT_TRUE((a * FieldElement::zero(f)).is_zero());
  EXPECT_EQ(a + FieldElement::zero(f), a);
}

TEST(FieldTest, Inverse) {
  auto f = small();
  EXPECT_EQ(FieldElement::one(f).inv(), FieldElement::one(f));
  EXPECT_EQ(FieldElement(f, 2L).inv().value(), 51);
  EXPECT_THROW(FieldElement::zero(f).inv(), DivisionByZeroError);
}

TEST(FieldTest, SignedEncodingUsesCenteredLift) {
  auto f = small();
  EXPECT_EQ(encode_signed(f, -1).value(), 100);
  EXPECT_EQ(decode_signed(FieldElement(f, 100L)), -1);
  EXPECT_TRUE(encode_signed(f, 0).is_zero());
  EXPECT_EQ(decode_signed(encode_signed(f, 50)), 50);
  EXPECT_EQ(decode_signed(encode_signed(f, -50)), -50);
  EXPECT_THROW(encode_signed(f, 51), OverflowError);
  EXPECT_THROW(encode_signed(f, -51), OverflowError);
}

TEST(FieldTest, SignedRoundTripOnRandomValues) {
  auto f = PrimeField::default_field();
  Prng rng = make_prng(7, 0);
  for (int i = 0; i < 1000; ++i) {
    const Integer x = decode_signed(FieldElement::random(f, rng));
    EXPECT_LE(abs(x), f->half());
    EXPECT_EQ(decode_signed(encode_signed(f, x)), x);
  }
}

TEST(FieldTest, MismatchedModuliAreRejected) {
  const FieldElement a(small(), 3L);
  const FieldElement b(PrimeField::make(103), 3L);
  EXPECT_THROW(a + b, ConfigError);
  EXPECT_THROW(a * b, ConfigError);
}

TEST(FieldTest, ModulusMustBePrime) {
  EXPECT_THROW(PrimeField::make(100), ConfigError);
  EXPECT_THROW(PrimeField::make(1), ConfigError);
  EXPECT_NO_THROW(PrimeField::make(101));
}

TEST(FieldTest, ParsesDecimalAndHex) {
  EXPECT_EQ(PrimeField::parse("101")->modulus(), 101);
  EXPECT_EQ(PrimeField::parse("0x65")->modulus(), 101);
  const auto p = PrimeField::parse("0x7fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffed");
  EXPECT_EQ(*p, *PrimeField::default_field());
  EXPECT_THROW(PrimeField::parse("abc"), ConfigError);
  EXPECT_THROW(PrimeField::parse(""), ConfigError);
}

TEST(FieldTest, DefaultFieldCoversDefaultBitlength) {
  const auto f = PrimeField::default_field();
  EXPECT_EQ(f->bit_length(), 255u);
  EXPECT_EQ(f->element_bytes(), 32u);
  EXPECT_TRUE(f->supports_bitlength(100));
  EXPECT_FALSE(f->supports_bitlength(124));
}

class FieldAxioms : public ::testing::TestWithParam<FieldPtr> {};

TEST_P(FieldAxioms, HoldOnRandomTriples) {
  const auto f = GetParam();
  Prng rng = make_prng(11, 0);
  for (int i = 0; i < 500; ++i) {
    const auto a = FieldElement::random(f, rng);
    const auto b = FieldElement::random(f, rng);
    const auto c = FieldElement::random(f, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_TRUE((a + (-a)).is_zero());
    if (!a.is_zero()) EXPECT_EQ(a * a.inv(), FieldElement::one(f));
  }
}

INSTANTIATE_TEST_SUITE_P(Moduli, FieldAxioms,
                         ::testing::Values(PrimeField::make(101), PrimeField::default_field()));

TEST(FieldTest, ProductsOfInRangeValuesDecodeExactly) {
  const auto f = PrimeField::default_field();
  Prng rng = make_prng(3, 0);
  std::uniform_int_distribution<long> dist(-(1L << 40), 1L << 40);
  for (int i = 0; i < 1000; ++i) {
    const Integer a = dist(rng) * Integer(dist(rng));
    const Integer b = dist(rng);
    EXPECT_EQ(decode_signed(encode_signed(f, a) * encode_signed(f, b)), a * b);
  }
}

TEST(FieldTest, RandomElementsStayBelowModulus) {
  const auto f = small();
  Prng rng = make_prng(5, 0);
  std::vector<int> seen(101, 0);
  for (int i = 0; i < 10000; ++i) {
    const auto e = FieldElement::random(f, rng);
    ASSERT_LT(e.value(), 101);
    ++seen[e.value().get_ui()];
  }
  for (int count : seen) EXPECT_GT(count, 0);
}

}  // namespace
}  // namespace mpcstats
