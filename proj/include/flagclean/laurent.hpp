#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagclean/polynomial.hpp"

namespace flagclean {

/// Exact Laurent polynomial in t over rational functions in the chart
/// variables. Used for fixture data before truncation.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static LaurentPoly constant(const RatFunc& c);
  static LaurentPoly monomial(const RatFunc& c, int power);

  std::size_t nvars() const { return nvars_; }
  const std::map<int, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Single term c * t^k (zero is not a single term).
  bool is_single_term() const { return terms_.size() == 1; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  /// Inverse of a single term; throws InvalidArgument otherwise.
  LaurentPoly inverse_term() const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  void add_term(int power, const RatFunc& c);

  std::size_t nvars_;
  std::map<int, RatFunc> terms_;
};

/// Parseable rendering, e.g. "a_-1*t^-1 + a_0".
std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names);

/// Truncated Laurent series: coefficients of t^k are known for k < precision
/// and stored from `start` on (everything below `start` is zero).
class LaurentSeries {
 public:
  LaurentSeries(std::size_t nvars, int precision);
  static LaurentSeries from_poly(const LaurentPoly& p, int precision);

  std::size_t nvars() const { return nvars_; }
  int precision() const { return precision_; }
  /// First exponent with a nonzero known coefficient; precision if none.
  int valuation() const;
  bool known_zero() const { return valuation() == precision_; }
  /// Coefficient of t^k, or nullopt when k >= precision.
  std::optional<RatFunc> coefficient(int k) const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries operator-() const;
  /// Throws NonUnitDeterminant if no known coefficient is nonzero.
  LaurentSeries inverse() const;

  /// Equal on all commonly known coefficients.
  bool agrees_with(const LaurentSeries& o) const;

 private:
  std::size_t nvars_;
  int start_;
  int precision_;
  std::vector<RatFunc> coeffs_;  // t^start_, ..., t^(precision_-1)
};

}  // namespace flagclean
