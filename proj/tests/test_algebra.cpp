#include <gtest/gtest.h>

#include "support.hpp"

using namespace baric;
using namespace baric::testing;

TEST(Algebra, ProductIsSymmetricOnFixtures) {
  std::mt19937 rng(23);
  for (const auto &name : weighted_fixtures()) {
    auto f = fixture(name);
    for (int t = 0; t < 50; ++t) {
      Element x = random_element(rng, f.algebra.dim()), y = random_element(rng, f.algebra.dim());
      ASSERT_EQ(multiply(f.algebra, x, y), multiply(f.algebra, y, x)) << name;
    }
  }
}

TEST(Algebra, WeightIsMultiplicative) {
  std::mt19937 rng(29);
  for (const auto &name : weighted_fixtures()) {
    auto f = fixture(name);
    ASSERT_TRUE(f.weight.has_value()) << name;
    ASSERT_TRUE(verify_weight(f.algebra, *f.weight).ok) << name;
    const auto &w = *f.weight;
    for (int t = 0; t < 50; ++t) {
      Element x = random_element(rng, f.algebra.dim()), y = random_element(rng, f.algebra.dim());
      ASSERT_EQ(w(multiply(f.algebra, x, y)), w(x) * w(y)) << name;
    }
  }
}

TEST(Algebra, PrincipalAndPlenaryAgreeWhereTheyMust) {
  std::mt19937 rng(31);
  for (const auto &name : weighted_fixtures()) {
    auto f = fixture(name);
    for (int t = 0; t < 20; ++t) {
      Element x = random_element(rng, f.algebra.dim());
      Element x2 = principal_power(f.algebra, x, 2);
      ASSERT_EQ(plenary_power(f.algebra, x, 1), x);
      ASSERT_EQ(plenary_power(f.algebra, x, 2), x2);
      ASSERT_EQ(plenary_power(f.algebra, x, 3), multiply(f.algebra, x2, x2));
    }
  }
}

// Closed forms for x = a e1 + b e2 + c e3 in the worked example.
TEST(Algebra, ExamplePowerFormulas) {
  auto f = fixture("example.alg");
  const FieldElement z = FieldElement::lambda();
  std::mt19937 rng(37);
  for (int t = 0; t < 20; ++t) {
    FieldElement a = random_field_element(rng), b = random_field_element(rng),
                 c = random_field_element(rng);
    Element x{a, b, c};
    Element x2{a * a, a * b, a * a + b * b + FieldElement(2) * a * b + FieldElement(2) * z * a * c};
    Element x3{a.pow(3), a * a * b,
               (z + 1) * a.pow(3) + (z + 1) * a * b * b + (FieldElement(2) * z + 2) * a * a * b +
                   (FieldElement(2) * z * z + z) * a * a * c};
    FieldElement q = z * z + z + 1;
    Element x4{a.pow(4), a.pow(3) * b,
               q * a.pow(4) + q * a * a * b * b + FieldElement(2) * q * a.pow(3) * b +
                   (FieldElement(2) * z.pow(3) + z * z + z) * a.pow(3) * c};
    ASSERT_EQ(principal_power(f.algebra, x, 2), x2);
    ASSERT_EQ(principal_power(f.algebra, x, 3), x3);
    ASSERT_EQ(principal_power(f.algebra, x, 4), x4);
  }
}

TEST(Algebra, OraclePowersOfE1) {
  auto f = fixture("example.alg");
  Element e1 = f.algebra.basis_vector(0);
  const FieldElement l = FieldElement::lambda();
  EXPECT_EQ(principal_power(f.algebra, e1, 3), (Element{1, 0, FieldElement(1, 1)}));
  EXPECT_EQ(principal_power(f.algebra, e1, 4),
            (Element{1, 0, FieldElement(Rational(-1, 2), Rational(1, 2))}));
  EXPECT_EQ(plenary_power(f.algebra, e1, 3), (Element{1, 0, FieldElement(1) + FieldElement(2) * l}));
}

TEST(Algebra, FindWeights) {
  auto ex = fixture("example.alg");
  auto ws = find_weights(ex.algebra);
  ASSERT_EQ(ws.size(), 1u);
  EXPECT_EQ(ws[0], *ex.weight);
  EXPECT_TRUE(find_weights(fixture("zero2.alg").algebra).empty());
  EXPECT_THROW(find_weights(fixture("euvw.alg").algebra), UnsupportedDimension);
}

TEST(Algebra, VerifyWeightReportsViolations) {
  auto f = fixture("example.alg");
  WeightFunction bad{{FieldElement(1), FieldElement(1), FieldElement(0)}};
  auto c = verify_weight(f.algebra, bad);
  EXPECT_FALSE(c.ok);
  EXPECT_FALSE(c.violations.empty());
  WeightFunction zero{{FieldElement(0), FieldElement(0), FieldElement(0)}};
  EXPECT_FALSE(verify_weight(f.algebra, zero).ok);
}

TEST(Algebra, ElementFormatParsesBack) {
  auto f = fixture("example.alg");
  std::mt19937 rng(41);
  for (int t = 0; t < 200; ++t) {
    Element x = random_element(rng, 3);
    if (t % 3 == 0)
      x[1] = FieldElement(0);
    ASSERT_EQ(parse_element(format(f.algebra, x), f.algebra.basis_names()), x)
        << format(f.algebra, x);
  }
  EXPECT_EQ(format(f.algebra, f.algebra.zero()), "0");
  EXPECT_EQ(format(f.algebra, Element{1, FieldElement(Rational(1, 2)), FieldElement(0, -1)}),
            "e1 + 1/2*e2 - l*e3");
}

TEST(Algebra, LeftMultiplicationMatrix) {
  auto f = fixture("example.alg");
  std::mt19937 rng(43);
  for (int t = 0; t < 20; ++t) {
    Element x = random_element(rng, 3), y = random_element(rng, 3);
    ASSERT_EQ(left_multiplication(f.algebra, x) * y, multiply(f.algebra, x, y));
  }
}
