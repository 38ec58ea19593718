#include <gtest/gtest.h>

#include "support.hpp"

using namespace baric;
using baric::testing::random_field_element;

namespace {

UniPoly random_poly(std::mt19937 &rng, int degree) {
  std::vector<FieldElement> c;
  for (int i = 0; i <= degree; ++i)
    c.push_back(random_field_element(rng));
  return UniPoly(std::move(c));
}

} // namespace

TEST(UniPoly, DivmodReconstructs) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    UniPoly a = random_poly(rng, 5), b = random_poly(rng, 2);
    if (b.is_zero())
      continue;
    auto [q, r] = divmod(a, b);
    ASSERT_EQ(q * b + r, a);
    ASSERT_LT(r.degree(), b.degree());
  }
}

TEST(UniPoly, GcdOfProducts) {
  const FieldElement l = FieldElement::lambda();
  UniPoly common = UniPoly::linear_factor(l) * UniPoly::linear_factor(FieldElement(Rational(1, 2)));
  UniPoly a = common * UniPoly::linear_factor(FieldElement(3));
  UniPoly b = common * UniPoly::linear_factor(l.conj());
  EXPECT_EQ(gcd(a, b), common.monic());
}

TEST(UniPoly, FormatAndEval) {
  UniPoly p({FieldElement(0), FieldElement(-3), FieldElement(5), FieldElement(0), FieldElement(4)});
  EXPECT_EQ(format(p), "4*X^4 + 5*X^2 - 3*X");
  EXPECT_EQ(format(UniPoly::linear_factor(FieldElement::lambda_bar())), "X + (1/2 + l)");
  EXPECT_TRUE(p(FieldElement::lambda()).is_zero());
  EXPECT_TRUE(p(FieldElement::lambda_bar()).is_zero());
  EXPECT_TRUE(p(FieldElement(Rational(1, 2))).is_zero());
}

TEST(UniPoly, MinimalPolynomialOfMatrix) {
  using M = Matrix<FieldElement>;
  const FieldElement l = FieldElement::lambda();
  // diag(l, l, 1/2) has minimal polynomial (X - l)(X - 1/2)
  M d(3, 3);
  d(0, 0) = l;
  d(1, 1) = l;
  d(2, 2) = FieldElement(Rational(1, 2));
  EXPECT_EQ(minimal_polynomial(d),
            UniPoly::linear_factor(l) * UniPoly::linear_factor(FieldElement(Rational(1, 2))));
  // a Jordan block keeps the square
  M j(2, 2);
  j(0, 0) = l;
  j(1, 1) = l;
  j(0, 1) = FieldElement(1);
  EXPECT_EQ(minimal_polynomial(j), UniPoly::linear_factor(l) * UniPoly::linear_factor(l));
  EXPECT_TRUE(minimal_polynomial(j)(j).is_zero());
}

TEST(UniPoly, RootsInField) {
  const FieldElement l = FieldElement::lambda();
  std::vector<FieldElement> want = {FieldElement(0), FieldElement(Rational(-2, 3)), l,
                                    FieldElement(Rational(1, 4), Rational(-3, 2))};
  UniPoly p = UniPoly::constant(FieldElement(7));
  for (const auto &r : want)
    p = p * UniPoly::linear_factor(r);
  // an irreducible quadratic over Q(l) contributes nothing
  p = p * UniPoly({FieldElement(2), FieldElement(0), FieldElement(1)});
  auto roots = roots_in_field(p);
  std::sort(roots.begin(), roots.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(roots, want);
  EXPECT_EQ(multiplicity(p * UniPoly::linear_factor(l), l), 2u);
}
