#include <gtest/gtest.h>

#include <algorithm>

#include "flagclean/error.hpp"
#include "flagclean/loop_matrix.hpp"
#include "flagclean/model_file.hpp"

namespace flagclean {
namespace {

const std::vector<std::string> kVars{"a_-1", "a_0"};

LaurentPoly E(const std::string& text) { return parse_loop_expr(text, kVars); }
LoopPolyMatrix M(const std::string& text) { return parse_loop_matrix(text, kVars); }
LoopMatrix L(const std::string& text, int precision = kDefaultPrecision) {
  return LoopMatrix::from_poly(M(text), precision);
}
LaurentSeries S(const std::string& text, int precision = kDefaultPrecision) {
  return LaurentSeries::from_poly(E(text), precision);
}

std::string text(const LaurentSeries& s) {
  LaurentPoly p(s.nvars());
  for (int k = s.valuation(); k < s.precision(); ++k)
    if (auto c = s.coefficient(k); c && !c->is_zero()) p = p + LaurentPoly::monomial(*c, k);
  return to_string(p, kVars);
}

bool same(const LoopMatrix& a, const LoopMatrix& b) { return a.agrees_with(b); }

// --- expressions ---------------------------------------------------------------

TEST(LoopExpr, ParsesAndPrints) {
  EXPECT_EQ(to_string(E("a_-1*t^-1 + a_0"), kVars), "a_-1*t^-1 + a_0");
  EXPECT_EQ(to_string(E("(t + a_0)^2"), kVars), "a_0^2 + 2*a_0*t + t^2");
  EXPECT_EQ(to_string(E("a_0/a_-1^2 * t^-1"), kVars), "(a_0/a_-1^2)*t^-1");
  EXPECT_EQ(E("1/t"), E("t^-1"));
  EXPECT_EQ(E("t^0"), E("1"));
}

TEST(LoopExpr, RoundTrip) {
  for (const char* s : {"a_-1*t^-1 + a_0", "-t + 1/a_0*t^-1", "(a_0 + 1)/a_-1 - t^3", "0"})
    EXPECT_EQ(E(to_string(E(s), kVars)), E(s)) << s;
  const LoopPolyMatrix m = M("[[t, a_-1*t^-1 + a_0], [0, t^-1]] * [[a_-1, 0], [0, 1/a_-1]]");
  EXPECT_EQ(M(to_string(m, kVars)), m);
}

TEST(LoopExpr, Errors) {
  for (const char* bad : {"1/(t + 1)", "(a_0 + t)^-1", "a_1", "t^a_0", "1/0", "a_0 +", "0.5", "[[1, 0], [0]]"})
    EXPECT_THROW(parse_loop_matrix(std::string("[[") + bad + ", 0], [0, 1]]", kVars), Error) << bad;
  EXPECT_THROW(parse_loop_expr("x", {"t"}), Error);
}

// --- series --------------------------------------------------------------------

TEST(Series, PrecisionPropagation) {
  const LaurentSeries a = S("t^-1 + 1", 5), b = S("t^2", 6);
  EXPECT_EQ((a + b).precision(), 5);
  EXPECT_EQ((a * b).precision(), std::min(5 + 2, 6 - 1));
  EXPECT_EQ(a.valuation(), -1);
  EXPECT_FALSE(a.coefficient(5).has_value());
}

TEST(Series, GeometricInverse) {
  const LaurentSeries inv = S("1 - a_0*t", 6).inverse();
  EXPECT_EQ(inv.precision(), 6);
  EXPECT_EQ(text(inv), "1 + a_0*t + a_0^2*t^2 + a_0^3*t^3 + a_0^4*t^4 + a_0^5*t^5");
  EXPECT_THROW(LaurentSeries(2, 4).inverse(), Error);
}

TEST(Series, InverseIsTwoSided) {
  const LaurentSeries s = S("a_-1*t^-1 + a_0 + t^2", 8);
  const LaurentSeries one = s * s.inverse();
  EXPECT_TRUE(one.agrees_with(S("1", one.precision())));
  EXPECT_GT(one.precision(), 0);
}

// --- matrices ------------------------------------------------------------------

TEST(LoopMatrix, InverseOfIdentity) {
  const LoopMatrix id = LoopMatrix::identity(2, 8);
  EXPECT_TRUE(same(id.inverse(), id));
}

TEST(LoopMatrix, InverseOfOpenCellFamily) {
  const LoopMatrix g = L("[[t, a_-1*t^-1 + a_0], [0, t^-1]]");
  EXPECT_TRUE(same(g.inverse(), L("[[t^-1, -a_-1*t^-1 - a_0], [0, t]]")));
  const LoopMatrix prod = g * g.inverse();
  EXPECT_TRUE(same(prod, LoopMatrix::identity(2, prod.precision())));
}

TEST(LoopMatrix, DeterminantIsMultiplicative) {
  const LoopMatrix g = L("[[t, a_-1*t^-1 + a_0], [0, t^-1]]");
  const LoopMatrix h = L("[[-a_-1, 1 + a_-1/a_0*t^-1], [-1, 1/a_0*t^-1]]");
  const LaurentSeries d = (g * h).determinant();
  EXPECT_TRUE(d.agrees_with(g.determinant() * h.determinant()));
  EXPECT_TRUE(d.agrees_with(S("1", d.precision())));
}

TEST(LoopMatrix, Associativity) {
  const LoopMatrix a = L("[[t, a_-1*t^-1 + a_0], [0, t^-1]]");
  const LoopMatrix b = L("[[a_0, 1], [-1, 0]]");
  const LoopMatrix c = L("[[1, 0], [-1/a_0 + t, 1]]");
  EXPECT_TRUE(same((a * b) * c, a * (b * c)));
}

TEST(LoopMatrix, NonUnitDeterminant) {
  const LoopMatrix z = LoopMatrix::from_poly(M("[[0, 0], [0, 0]]"), 4);
  EXPECT_THROW(z.inverse(), Error);
}

// --- membership ----------------------------------------------------------------

TEST(Membership, LowerTriangularUnipotent) {
  const LoopMatrix g = L("[[1, 0], [t, 1]]");
  EXPECT_EQ(in_iwahori(g).status, MembershipStatus::Yes);
  EXPECT_EQ(in_iwahori_unipotent(g).status, MembershipStatus::Yes);
}

TEST(Membership, LowerLeftConstantFails) {
  const MembershipVerdict v = in_iwahori(L("[[1, 0], [1, 1]]"));
  EXPECT_EQ(v.status, MembershipStatus::No);
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_EQ(v.certificate->row, 2);
  EXPECT_EQ(v.certificate->col, 1);
  EXPECT_EQ(v.certificate->power, 0);
}

TEST(Membership, TorusElementRecordsDenominator) {
  const LoopMatrix g = L("[[a_0, 1], [0, 1/a_0]]");
  const MembershipVerdict v = in_iwahori(g);
  EXPECT_EQ(v.status, MembershipStatus::Yes);
  ASSERT_EQ(v.denominators.size(), 1u);
  EXPECT_EQ(to_string(v.denominators[0], kVars), "a_0");
  const MembershipVerdict u = in_iwahori_unipotent(g);
  EXPECT_EQ(u.status, MembershipStatus::No);
  EXPECT_EQ(u.certificate->row, 1);
  EXPECT_EQ(u.certificate->col, 1);
}

TEST(Membership, NegativePowerCertificate) {
  const MembershipVerdict v = in_iwahori(L("[[1, a_-1*t^-1], [0, 1]]"));
  EXPECT_EQ(v.status, MembershipStatus::No);
  EXPECT_EQ(v.certificate->row, 1);
  EXPECT_EQ(v.certificate->col, 2);
  EXPECT_EQ(v.certificate->power, -1);
}

TEST(Membership, InsufficientPrecision) {
  EXPECT_EQ(in_iwahori(LoopMatrix::identity(2, 0)).status, MembershipStatus::InsufficientPrecision);
  EXPECT_EQ(in_iwahori(LoopMatrix::identity(2, 1)).status, MembershipStatus::Yes);
}

TEST(Membership, RequiresDeterminantOne) {
  EXPECT_THROW(in_iwahori(L("[[2, 0], [0, 1]]")), Error);
}

// --- cosets --------------------------------------------------------------------

TEST(Coset, Reflexive) {
  const LoopMatrix g = L("[[t, a_-1*t^-1 + a_0], [0, t^-1]]");
  EXPECT_EQ(coset_equal(g, g, Subgroup::Iwahori).membership.status, MembershipStatus::Yes);
  EXPECT_EQ(coset_equal(g, g, Subgroup::IwahoriUnipotent).membership.status, MembershipStatus::Yes);
}

TEST(Coset, FiniteLimitQuotient) {
  const CosetVerdict v = coset_equal(L("[[a_0, 1], [-1, 0]]"), L("[[1, 0], [-1/a_0, 1]]"), Subgroup::Iwahori);
  EXPECT_EQ(v.membership.status, MembershipStatus::Yes);
  EXPECT_TRUE(same(v.quotient, L("[[a_0, 1], [0, 1/a_0]]")));
  ASSERT_EQ(v.membership.denominators.size(), 1u);
  EXPECT_EQ(to_string(v.membership.denominators[0], kVars), "a_0");
}

TEST(Coset, DistinctLimitFamilies) {
  const CosetVerdict v =
      coset_equal(L("[[1, a_-1*t^-1], [0, 1]]"), L("[[t, a_-1*t^-1], [0, t^-1]]"), Subgroup::Iwahori);
  EXPECT_EQ(v.membership.status, MembershipStatus::No);
  EXPECT_EQ(v.membership.certificate->power, -1);
}

TEST(Fixtures, EmptyList) { EXPECT_TRUE(verify_fixtures({}).results.empty()); }

TEST(Fixtures, BuiltinSetPasses) {
  const FixtureReport r = verify_fixtures(builtin_document().fixtures);
  EXPECT_EQ(r.results.size(), builtin_document().fixtures.size());
  for (const auto& f : r.results) EXPECT_TRUE(f.pass) << f.name;
  EXPECT_TRUE(r.ok());
}

TEST(Fixtures, ChartTwoSectionNeedsTwist) {
  const auto fixtures = builtin_document().fixtures;
  const auto find = [&](const std::string& name) {
    return *std::find_if(fixtures.begin(), fixtures.end(), [&](const LoopFixture& f) { return f.name == name; });
  };
  const LoopFixture twisted = find("chart2_section");
  const LoopFixture untwisted = find("chart2_untwisted");
  EXPECT_EQ(twisted.subgroup, Subgroup::IwahoriUnipotent);
  EXPECT_TRUE(twisted.expected);
  EXPECT_FALSE(untwisted.expected);
  EXPECT_EQ(twisted.right, untwisted.right);
}

TEST(Fixtures, WrongExpectationFails) {
  auto fixtures = builtin_document().fixtures;
  for (auto& f : fixtures) f.expected = !f.expected;
  const FixtureReport r = verify_fixtures(fixtures);
  EXPECT_TRUE(std::none_of(r.results.begin(), r.results.end(), [](const FixtureResult& f) { return f.pass; }));
}

TEST(Fixtures, RetryAtDoublePrecision) {
  LoopFixture f;
  f.name = "deep";
  // The t^-1 entries cost one power of t on the quotient's diagonal.
  f.left = M("[[1, t^-1], [0, 1]]");
  f.right = M("[[1, t^-1], [0, 1]]");
  f.subgroup = Subgroup::IwahoriUnipotent;
  const FixtureReport r = verify_fixtures({f}, 1);
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].precision, 2);
  EXPECT_TRUE(r.results[0].pass);
}

TEST(Fixtures, VerdictStableAcrossPrecision) {
  const auto fixtures = builtin_document().fixtures;
  const FixtureReport base = verify_fixtures(fixtures, 4);
  for (int n = 5; n <= 16; ++n) {
    const FixtureReport r = verify_fixtures(fixtures, n);
    for (std::size_t k = 0; k < r.results.size(); ++k)
      EXPECT_EQ(r.results[k].verdict.membership.status, base.results[k].verdict.membership.status)
          << r.results[k].name << " at N=" << n;
  }
}

TEST(Fixtures, CosetRelationIsAnEquivalence) {
  const auto fixtures = builtin_document().fixtures;
  std::vector<std::pair<LoopMatrix, Subgroup>> pool;
  for (const auto& f : fixtures) {
    pool.emplace_back(LoopMatrix::from_poly(f.left, 12), f.subgroup);
    pool.emplace_back(LoopMatrix::from_poly(f.right, 12), f.subgroup);
  }
  for (Subgroup s : {Subgroup::Iwahori, Subgroup::IwahoriUnipotent}) {
    std::vector<LoopMatrix> items;
    for (const auto& [m, sub] : pool) items.push_back(m);
    const std::size_t n = items.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto st = coset_equal(items[i], items[j], s).membership.status;
        ASSERT_NE(st, MembershipStatus::InsufficientPrecision);
        rel[i][j] = st == MembershipStatus::Yes;
      }
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_TRUE(rel[i][i]);
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(rel[i][j], rel[j][i]);
        for (std::size_t k = 0; k < n; ++k)
          if (rel[i][j] && rel[j][k]) EXPECT_TRUE(rel[i][k]);
      }
    }
  }
}

}  // namespace
}  // namespace flagclean
