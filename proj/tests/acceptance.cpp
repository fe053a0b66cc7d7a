// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "flagclean/cleanness.hpp"
#include "flagclean/cli.hpp"
#include "flagclean/lattice_oracle.hpp"
#include "flagclean/loop_matrix.hpp"
#include "flagclean/model_file.hpp"
#include "test_support.hpp"

using namespace flagclean;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

LinearForm F(const AtlasModel& m, const std::string& text) { return parse_linear_form(text, m.params); }

Outcome criterion_reproduction() {
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = run_cli({"derive", "--builtin"}, out, err);
  const double t = seconds_since(start);
  const std::string expected = "mu_-1\nmu_0\nmu_-1 + 2*mu_0 + Lambda + 3*kappa\nmu_0 + Lambda + kappa\n";
  return {code == 0 && out.str() == expected && t < 1.0, "4 forms, " + fmt_seconds(t)};
}

Outcome chart_exponent_tuples() {
  const AtlasModel m = builtin_sl2();
  const std::vector<LinearForm> fiber{F(m, "Lambda"), F(m, "kappa")};
  const std::vector<std::pair<std::string, std::vector<LinearForm>>> cases{
      {"2", {F(m, "-mu_-1 - 2*mu_0 - Lambda - 3*kappa"), F(m, "mu_0")}},
      {"3", {F(m, "mu_-1"), F(m, "-mu_0 - Lambda - kappa")}},
      {"4", {F(m, "-mu_-1 - 2*mu_0 - Lambda - 3*kappa"), F(m, "-mu_0 - Lambda - kappa")}},
  };
  for (const auto& [chart, base] : cases) {
    const ExponentVector e = chart_exponents(m, chart);
    if (e.base != base || e.fiber != fiber) return {false, "chart " + chart + " differs"};
  }
  return {true, "charts 2, 3, 4"};
}

Outcome transition_reproduction() {
  const AtlasModel m = builtin_sl2();
  const std::vector<std::pair<std::string, MonomialMap>> cases{
      {"2", MonomialMap::pure({{-1, 0, 0, 0}, {-2, 1, 0, 0}, {-1, 0, 1, 0}, {-3, 0, 0, 1}})},
      {"3", MonomialMap::pure({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, -1, 1, 0}, {0, -1, 0, 1}})},
      {"4", MonomialMap::pure({{-1, 0, 0, 0}, {-2, -1, 0, 0}, {-1, -1, 1, 0}, {-3, -1, 0, 1}})},
  };
  for (const auto& [chart, expected] : cases) {
    const MonomialMap got = transition(m, "1", chart).full();
    if (got != expected) return {false, "Psi_1" + chart + " = " + format_map(got, {"x", "y", "a", "v"})};
  }
  return {true, "Psi_12, Psi_13, Psi_14 with fiber rows and unit coefficients"};
}

Outcome linebundle_derivation() {
  const AtlasModel m = builtin_sl2();
  const std::vector<std::pair<std::string, std::vector<Integer>>> cases{
      {"2", {-3, 0}}, {"3", {0, -1}}, {"4", {-1, -1}}};
  for (const auto& [j, expected] : cases)
    if (derive_logform_cocycle(m, "1", j).exponents().row(0) != expected)
      return {false, "t_1" + j + " exponents differ"};
  const LineBundleReport r = check_linebundle(m);
  return {r.ok(), std::to_string(r.entries.size()) + " pairs checked"};
}

Outcome integral_twists() {
  const AtlasModel m = builtin_sl2();
  const Criterion full = criterion(m);
  const std::vector<LinearForm> expected{F(m, "mu_-1"), F(m, "mu_0"), F(m, "mu_-1 + 2*mu_0")};
  int cases = 0;
  for (long lambda = -2; lambda <= 2; ++lambda)
    for (long kappa = -2; kappa <= 2; ++kappa) {
      ++cases;
      const Criterion c = specialize(full, {{"Lambda", Rational(lambda)}, {"kappa", Rational(kappa)}});
      if (c.forms() != expected)
        return {false, "Lambda=" + std::to_string(lambda) + " kappa=" + std::to_string(kappa)};
    }
  return {true, std::to_string(cases) + " integer pairs"};
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  const GridReport r = oracle_grid(builtin_sl2(), 4, 3, 16, 5000);
  const double t = seconds_since(start);
  return {r.ok() && r.cases == 5000 && t < 120.0,
          std::to_string(r.agreements) + "/" + std::to_string(r.cases) + " agree (grid " +
              std::to_string(r.grid_size) + ", " + std::to_string(r.clean_cases) + " clean), " +
              fmt_seconds(t)};
}

Outcome oracle_closed_form() {
  const auto values = grid_values(5, 2);
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= values.size();
    for (std::size_t k = 0; k < total; ++k) {
      std::vector<Rational> mu(n);
      std::size_t r = k;
      for (std::size_t i = 0; i < n; ++i, r /= values.size()) mu[i] = values[r % values.size()];
      bool closed = true;
      for (const auto& q : mu) closed = closed && !is_integer(q);
      const std::int64_t b = LatticeModule::required_window(mu);
      const bool simple = is_simple(mu, b);
      if (simple != closed) return {false, "mismatch at n=" + std::to_string(n)};
      if ((n < 3 || k % 13 == 0) && is_simple(mu, 2 * b) != simple)
        return {false, "window doubling changed the verdict at n=" + std::to_string(n)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " exponent vectors, n = 1..3"};
}

Outcome duality_symmetry() {
  const auto values = grid_values(4, 3);
  std::size_t checked = 0;
  for (const auto& p : values)
    for (const auto& q : values) {
      const std::vector<Rational> mu{p, q}, neg{-p, -q};
      if (is_clean_oracle(mu, 16) != is_clean_oracle(neg, 16)) return {false, "asymmetric verdict"};
      ++checked;
    }
  return {true, std::to_string(checked) + " grid points"};
}

Outcome group_laws() {
  const ParamSpace space({"p0", "p1", "p2", "p3"});
  int maps = 0;
  for (int k = 0; k < 240; ++k) {
    const std::size_t n = static_cast<std::size_t>(1 + k % 4);
    const MonomialMap f = testing::random_map(n), g = testing::random_map(n), h = testing::random_map(n);
    maps += 3;
    std::vector<LinearForm> lambda;
    for (std::size_t i = 0; i < n; ++i) lambda.push_back(testing::random_form(space));
    const bool ok = compose(compose(f, g), h) == compose(f, compose(g, h)) &&
                    compose(f, invert(f)) == MonomialMap::identity(n) &&
                    compose(invert(f), f) == MonomialMap::identity(n) &&
                    pullback_exponents(compose(f, g), lambda) ==
                        pullback_exponents(g, pullback_exponents(f, lambda));
    if (!ok) return {false, "group law violated"};
  }
  const AtlasModel base = builtin_sl2();
  if (!verify_cocycles(base).ok()) return {false, "builtin cocycles fail"};

  auto find = [](AtlasModel& m, const std::string& i, const std::string& j) -> TotalTransition& {
    for (auto& t : m.transitions)
      if (t.target == i && t.source == j) return t;
    throw std::logic_error("missing transition");
  };
  const std::vector<std::pair<std::string, std::function<void(AtlasModel&)>>> perturbations{
      {"Psi_12 v-row (-3,0)->(-2,0)", [&](AtlasModel& m) { find(m, "1", "2").twists.at(1, 0) = -2; }},
      {"Psi_14 E[1][0] -2->-1",
       [&](AtlasModel& m) {
         TotalTransition& t = find(m, "1", "4");
         IntMatrix e = t.base.exponents();
         e.at(1, 0) = -1;
         t.base = MonomialMap(t.base.coeffs(), e);
       }},
      {"Psi_13 a-row (0,-1)->(1,-1)", [&](AtlasModel& m) { find(m, "1", "3").twists.at(0, 0) = 1; }},
  };
  for (const auto& [name, apply] : perturbations) {
    AtlasModel m = base;
    apply(m);
    if (verify_cocycles(m).ok()) return {false, "perturbation not detected: " + name};
  }
  return {true, std::to_string(maps) + " random maps; 3 perturbations detected"};
}

Outcome loop_fixtures() {
  const std::vector<std::string> vars{"a_-1", "a_0"};
  auto L = [&](const std::string& s, int n) { return LoopMatrix::from_poly(parse_loop_matrix(s, vars), n); };
  const CosetVerdict pos = coset_equal(L("[[a_0, 1], [-1, 0]]", 8), L("[[1, 0], [-1/a_0, 1]]", 8), Subgroup::Iwahori);
  if (pos.membership.status != MembershipStatus::Yes) return {false, "finite limit pair not equivalent"};
  if (!pos.quotient.agrees_with(L("[[a_0, 1], [0, 1/a_0]]", 8))) return {false, "unexpected quotient"};
  const CosetVerdict neg = coset_equal(L("[[1, a_-1*t^-1], [0, 1]]", 8), L("[[t, a_-1*t^-1], [0, t^-1]]", 8),
                                       Subgroup::Iwahori);
  if (neg.membership.status != MembershipStatus::No) return {false, "distinct cosets reported equal"};

  const auto fixtures = builtin_document().fixtures;
  const FixtureReport ref = verify_fixtures(fixtures, 4);
  if (!ref.ok()) return {false, "builtin fixtures fail at N=4"};
  for (int n = 5; n <= 16; ++n) {
    const FixtureReport r = verify_fixtures(fixtures, n);
    for (std::size_t k = 0; k < r.results.size(); ++k)
      if (r.results[k].verdict.membership.status != ref.results[k].verdict.membership.status)
        return {false, r.results[k].name + " changes at N=" + std::to_string(n)};
  }
  return {true, std::to_string(fixtures.size()) + " fixtures stable for N = 4..16"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"criterion reproduction", criterion_reproduction},
      {"chart exponent tuples", chart_exponent_tuples},
      {"transition reproduction", transition_reproduction},
      {"line-bundle derivation", linebundle_derivation},
      {"integral-twist specialization", integral_twists},
      {"oracle equivalence on grid", oracle_equivalence},
      {"oracle closed form", oracle_closed_form},
      {"duality symmetry", duality_symmetry},
      {"cocycle and group laws", group_laws},
      {"loop-group fixtures", loop_fixtures},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %2zu  %-32s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
