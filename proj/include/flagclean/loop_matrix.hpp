#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagclean/laurent.hpp"

namespace flagclean {

/// 2x2 matrix of exact Laurent polynomials (fixture data).
struct LoopPolyMatrix {
  std::array<LaurentPoly, 4> entries;  // row-major

  const LaurentPoly& at(int r, int c) const { return entries[static_cast<std::size_t>(2 * r + c)]; }
  LaurentPoly determinant() const;
  friend LoopPolyMatrix operator*(const LoopPolyMatrix& a, const LoopPolyMatrix& b);

  bool operator==(const LoopPolyMatrix&) const = default;
};

/// "[[a, b], [c, d]]" with entries rendered by to_string(LaurentPoly).
std::string to_string(const LoopPolyMatrix& m, const std::vector<std::string>& names);

/// Element of the loop group over the rational-function field, with
/// entries truncated to a working precision.
class LoopMatrix {
 public:
  LoopMatrix(std::array<LaurentSeries, 4> entries, std::optional<Rational> det_claim);
  static LoopMatrix from_poly(const LoopPolyMatrix& m, int precision);
  static LoopMatrix identity(std::size_t nvars, int precision);

  const LaurentSeries& at(int r, int c) const { return entries_[static_cast<std::size_t>(2 * r + c)]; }
  const std::optional<Rational>& det_claim() const { return det_claim_; }
  std::size_t nvars() const { return entries_[0].nvars(); }
  int precision() const;

  LaurentSeries determinant() const;
  friend LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b);
  /// Adjugate divided by the determinant (just the adjugate when the
  /// determinant is claimed to be 1).
  LoopMatrix inverse() const;

  /// Entrywise agreement on the commonly known coefficients.
  bool agrees_with(const LoopMatrix& o) const;

 private:
  std::array<LaurentSeries, 4> entries_;
  std::optional<Rational> det_claim_;
};

enum class Subgroup { Iwahori, IwahoriUnipotent };
enum class MembershipStatus { Yes, No, InsufficientPrecision };

const char* to_string(Subgroup s);
const char* to_string(MembershipStatus s);

struct MembershipCertificate {
  int row = 0;  ///< 1-based
  int col = 0;  ///< 1-based
  int power = 0;
  std::string reason;
};

struct MembershipVerdict {
  MembershipStatus status = MembershipStatus::Yes;
  std::optional<MembershipCertificate> certificate;
  /// Non-constant denominators of the inspected coefficients: the verdict
  /// holds where these do not vanish.
  std::vector<Polynomial> denominators;
};

/// Membership in the Iwahori subgroup (entries in R[[t]], lower-left entry
/// divisible by t) or in its pro-unipotent radical (additionally diagonal
/// entries congruent to 1 mod t). Requires det_claim = 1.
MembershipVerdict in_subgroup(const LoopMatrix& g, Subgroup subgroup);
MembershipVerdict in_iwahori(const LoopMatrix& g);
MembershipVerdict in_iwahori_unipotent(const LoopMatrix& g);

struct CosetVerdict {
  MembershipVerdict membership;
  LoopMatrix quotient;  ///< g2^-1 * g1
};

/// g1 H = g2 H  iff  g2^-1 g1 in H.
CosetVerdict coset_equal(const LoopMatrix& g1, const LoopMatrix& g2, Subgroup subgroup);

struct LoopFixture {
  std::string name;
  LoopPolyMatrix left;
  LoopPolyMatrix right;
  Subgroup subgroup = Subgroup::Iwahori;
  bool expected = true;

  bool operator==(const LoopFixture&) const = default;
};

struct FixtureResult {
  std::string name;
  bool expected;
  int precision;
  CosetVerdict verdict;
  bool pass;
};

struct FixtureReport {
  std::vector<FixtureResult> results;
  bool ok() const;
};

constexpr int kDefaultPrecision = 8;

/// Runs each fixture at `precision`, retrying once at twice the precision if
/// the first verdict is inconclusive.
FixtureReport verify_fixtures(const std::vector<LoopFixture>& fixtures,
                              int precision = kDefaultPrecision);

/// Expression over the chart variables and t: numbers, names, + - * /, ^
/// with integer exponents, parentheses. Divisors and negative powers must be
/// single terms c*t^k.
LaurentPoly parse_loop_expr(std::string_view text, const std::vector<std::string>& vars);

/// One or more "[[e, e], [e, e]]" joined by '*'.
LoopPolyMatrix parse_loop_matrix(std::string_view text, const std::vector<std::string>& vars);

}  // namespace flagclean
