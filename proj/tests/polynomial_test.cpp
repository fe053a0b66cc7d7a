#include <gtest/gtest.h>

#include "flagclean/error.hpp"
#include "flagclean/polynomial.hpp"
#include "test_support.hpp"

namespace flagclean {
namespace {

const std::vector<std::string> kVars{"a", "b", "c"};

Polynomial var(std::size_t i) { return Polynomial::variable(3, i); }
Polynomial num(long c) { return Polynomial::constant(3, c); }

Polynomial random_poly(int terms = 3, int max_degree = 2) {
  Polynomial p(3);
  for (int k = 0; k < terms; ++k) {
    Polynomial::Exponents e(3);
    for (auto& d : e) d = static_cast<int>(testing::uniform(0, max_degree));
    p += Polynomial::monomial(e, testing::random_rational(5, 3));
  }
  return p;
}

bool divides(const Polynomial& d, const Polynomial& p) {
  try {
    divide_exact(p, d);
    return true;
  } catch (const Error&) {
    return false;
  }
}

TEST(Polynomial, ArithmeticAndPrinting) {
  const Polynomial p = var(0) * var(0) * var(1) - num(1) * Rational(1, 2) * var(1) + num(3);
  EXPECT_EQ(to_string(p, kVars), "a^2*b - 1/2*b + 3");
  EXPECT_EQ(p.degree_in(0), 2);
  EXPECT_EQ(p.coeff_in(0, 2), var(1));
  EXPECT_EQ(to_string(Polynomial(3), kVars), "0");
  EXPECT_EQ((var(0) + var(1)) * (var(0) - var(1)), var(0) * var(0) - var(1) * var(1));
}

TEST(Polynomial, ExactDivision) {
  const Polynomial a = var(0) + var(1), b = var(0) - num(2) * Rational(1) * var(2);
  EXPECT_EQ(divide_exact(a * b, b), a);
  EXPECT_THROW(divide_exact(a, b), Error);
}

TEST(Gcd, KnownFactors) {
  const Polynomial f = var(0) + var(1);
  const Polynomial g = var(0) * var(2) - num(1);
  const Polynomial h = var(1) * var(1) + num(2);
  EXPECT_EQ(gcd(f * g, f * h), f);
  EXPECT_EQ(gcd(f * g * Rational(3), g * h * Rational(-2)), g);
  EXPECT_EQ(gcd(f, g), num(1));
  EXPECT_EQ(gcd(Polynomial(3), h), h);
  EXPECT_EQ(gcd(Polynomial(3), Polynomial(3)), Polynomial(3));
}

TEST(Gcd, RandomProductsContainCommonFactor) {
  for (int k = 0; k < 60; ++k) {
    const Polynomial c = random_poly(2, 1);
    if (c.is_zero()) continue;
    const Polynomial a = random_poly() * c, b = random_poly() * c;
    if (a.is_zero() || b.is_zero()) continue;
    const Polynomial g = gcd(a, b);
    EXPECT_TRUE(divides(g, a));
    EXPECT_TRUE(divides(g, b));
    EXPECT_TRUE(divides(c, g * c.leading_coeff())) << to_string(c, kVars) << " vs " << to_string(g, kVars);
    EXPECT_EQ(g.leading_coeff(), 1);
  }
}

TEST(RatFunc, CanonicalForm) {
  const Polynomial f = var(0) + var(1);
  const RatFunc r(f * var(2) * Rational(2), f * var(0) * Rational(4));
  EXPECT_EQ(r.num(), var(2) * Rational(1, 2));
  EXPECT_EQ(r.den(), var(0));
  EXPECT_EQ(to_string(r, kVars), "1/2*c/a");
  EXPECT_THROW(RatFunc(var(0), Polynomial(3)), Error);
}

TEST(RatFunc, EqualityIsValueEquality) {
  for (int k = 0; k < 60; ++k) {
    const Polynomial p = random_poly(), q = random_poly(), s = random_poly(2, 1);
    if (q.is_zero() || s.is_zero()) continue;
    EXPECT_EQ(RatFunc(p * s, q * s), RatFunc(p, q));
  }
}

TEST(RatFunc, FieldLaws) {
  for (int k = 0; k < 60; ++k) {
    const Polynomial p = random_poly(), q = random_poly(), u = random_poly(), v = random_poly();
    if (p.is_zero() || q.is_zero() || v.is_zero()) continue;
    const RatFunc x(p, q), y(u, v);
    EXPECT_EQ((x + y) - y, x);
    EXPECT_EQ(x * x.inverse(), RatFunc::constant(3, 1));
    if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
    EXPECT_EQ(x * (y + x), x * y + x * x);
  }
}

TEST(RatFunc, Printing) {
  const RatFunc r(var(0) + num(1), var(0) * var(1));
  EXPECT_EQ(to_string(r, kVars), "(a + 1)/(a*b)");
  EXPECT_EQ(to_string(RatFunc(num(1), var(0) * var(0)), kVars), "1/a^2");
  EXPECT_EQ(to_string(RatFunc::constant(3, Rational(-2, 3)), kVars), "-2/3");
  EXPECT_TRUE(RatFunc::constant(3, 1).is_one());
}

}  // namespace
}  // namespace flagclean
