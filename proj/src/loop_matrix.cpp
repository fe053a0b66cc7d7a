#include "flagclean/loop_matrix.hpp"

#include <algorithm>

#include "flagclean/error.hpp"

namespace flagclean {

LaurentPoly LoopPolyMatrix::determinant() const {
  return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
}

LoopPolyMatrix operator*(const LoopPolyMatrix& a, const LoopPolyMatrix& b) {
  LoopPolyMatrix c;
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < 2; ++k)
      c.entries[static_cast<std::size_t>(2 * r + k)] = a.at(r, 0) * b.at(0, k) + a.at(r, 1) * b.at(1, k);
  return c;
}

std::string to_string(const LoopPolyMatrix& m, const std::vector<std::string>& names) {
  return "[[" + to_string(m.at(0, 0), names) + ", " + to_string(m.at(0, 1), names) + "], [" +
         to_string(m.at(1, 0), names) + ", " + to_string(m.at(1, 1), names) + "]]";
}

LoopMatrix::LoopMatrix(std::array<LaurentSeries, 4> entries, std::optional<Rational> det_claim)
    : entries_(std::move(entries)), det_claim_(std::move(det_claim)) {}

LoopMatrix LoopMatrix::from_poly(const LoopPolyMatrix& m, int precision) {
  std::optional<Rational> claim;
  const LaurentPoly det = m.determinant();
  if (det.is_single_term() && det.terms().begin()->first == 0 && det.terms().begin()->second.is_constant())
    claim = det.terms().begin()->second.num().constant_term();
  return LoopMatrix({LaurentSeries::from_poly(m.at(0, 0), precision),
                     LaurentSeries::from_poly(m.at(0, 1), precision),
                     LaurentSeries::from_poly(m.at(1, 0), precision),
                     LaurentSeries::from_poly(m.at(1, 1), precision)},
                    claim);
}

LoopMatrix LoopMatrix::identity(std::size_t nvars, int precision) {
  const LaurentPoly one = LaurentPoly::constant(RatFunc::constant(nvars, 1));
  const LaurentPoly zero(nvars);
  return from_poly(LoopPolyMatrix{{one, zero, zero, one}}, precision);
}

int LoopMatrix::precision() const {
  int p = entries_[0].precision();
  for (const auto& e : entries_) p = std::min(p, e.precision());
  return p;
}

LaurentSeries LoopMatrix::determinant() const {
  return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
}

LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b) {
  std::optional<Rational> claim;
  if (a.det_claim_ && b.det_claim_) claim = *a.det_claim_ * *b.det_claim_;
  return LoopMatrix({a.at(0, 0) * b.at(0, 0) + a.at(0, 1) * b.at(1, 0),
                     a.at(0, 0) * b.at(0, 1) + a.at(0, 1) * b.at(1, 1),
                     a.at(1, 0) * b.at(0, 0) + a.at(1, 1) * b.at(1, 0),
                     a.at(1, 0) * b.at(0, 1) + a.at(1, 1) * b.at(1, 1)},
                    claim);
}

LoopMatrix LoopMatrix::inverse() const {
  std::array<LaurentSeries, 4> adj{at(1, 1), -at(0, 1), -at(1, 0), at(0, 0)};
  if (det_claim_ && *det_claim_ == 1) return LoopMatrix(adj, Rational(1));
  const LaurentSeries det_inv = determinant().inverse();
  for (auto& e : adj) e = e * det_inv;
  std::optional<Rational> claim;
  if (det_claim_) claim = Rational(1) / *det_claim_;
  return LoopMatrix(adj, claim);
}

bool LoopMatrix::agrees_with(const LoopMatrix& o) const {
  for (std::size_t i = 0; i < 4; ++i)
    if (!entries_[i].agrees_with(o.entries_[i])) return false;
  return true;
}

const char* to_string(Subgroup s) {
  return s == Subgroup::Iwahori ? "I" : "Iu";
}

const char* to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::Yes: return "yes";
    case MembershipStatus::No: return "no";
    case MembershipStatus::InsufficientPrecision: return "insufficient_precision";
  }
  return "?";
}

MembershipVerdict in_subgroup(const LoopMatrix& g, Subgroup subgroup) {
  if (!g.det_claim() || *g.det_claim() != 1)
    throw Error(ErrorKind::InvalidArgument, "membership test needs a determinant-one matrix");
  MembershipVerdict v;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const LaurentSeries& e = g.at(r, c);
      for (int k = std::min(e.valuation(), 0); k < e.precision(); ++k) {
        const RatFunc coeff = *e.coefficient(k);
        if (!coeff.den().is_constant() &&
            std::find(v.denominators.begin(), v.denominators.end(), coeff.den()) == v.denominators.end())
          v.denominators.push_back(coeff.den());
      }
    }

  bool unknown = false;
  auto fail = [&](int r, int c, int k, std::string reason) {
    if (!v.certificate) v.certificate = MembershipCertificate{r + 1, c + 1, k, std::move(reason)};
  };
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const LaurentSeries& e = g.at(r, c);
      const int val = e.valuation();
      if (val < 0 && val < e.precision()) fail(r, c, val, "negative power of t");
      // Power needed to decide this entry: t^0 for the lower-left entry and,
      // in the unipotent radical, for the diagonal; t^-1 otherwise.
      const bool needs_t0 = (r == 1 && c == 0) || (subgroup == Subgroup::IwahoriUnipotent && r == c);
      if (e.precision() < (needs_t0 ? 1 : 0)) {
        unknown = true;
        continue;
      }
      if (r == 1 && c == 0 && !e.coefficient(0)->is_zero())
        fail(r, c, 0, "lower-left entry not divisible by t");
      if (subgroup == Subgroup::IwahoriUnipotent && r == c && !e.coefficient(0)->is_one())
        fail(r, c, 0, "diagonal entry not congruent to 1 mod t");
    }
  if (v.certificate)
    v.status = MembershipStatus::No;
  else if (unknown)
    v.status = MembershipStatus::InsufficientPrecision;
  return v;
}

MembershipVerdict in_iwahori(const LoopMatrix& g) { return in_subgroup(g, Subgroup::Iwahori); }

MembershipVerdict in_iwahori_unipotent(const LoopMatrix& g) {
  return in_subgroup(g, Subgroup::IwahoriUnipotent);
}

CosetVerdict coset_equal(const LoopMatrix& g1, const LoopMatrix& g2, Subgroup subgroup) {
  LoopMatrix q = g2.inverse() * g1;
  MembershipVerdict m = in_subgroup(q, subgroup);
  return {std::move(m), std::move(q)};
}

bool FixtureReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

FixtureReport verify_fixtures(const std::vector<LoopFixture>& fixtures, int precision) {
  FixtureReport report;
  for (const auto& f : fixtures) {
    int prec = precision;
    auto run = [&](int p) {
      return coset_equal(LoopMatrix::from_poly(f.left, p), LoopMatrix::from_poly(f.right, p),
                         f.subgroup);
    };
    CosetVerdict verdict = run(prec);
    if (verdict.membership.status == MembershipStatus::InsufficientPrecision) {
      prec *= 2;
      verdict = run(prec);
    }
    const auto status = verdict.membership.status;
    const bool pass = (f.expected && status == MembershipStatus::Yes) ||
                      (!f.expected && status == MembershipStatus::No);
    report.results.push_back({f.name, f.expected, prec, std::move(verdict), pass});
  }
  return report;
}

}  // namespace flagclean
