#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "flagclean/rational.hpp"

namespace flagclean {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Terms are kept in descending lexicographic order of exponent vectors, so
/// the first term is the leading term.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational, std::greater<>>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Exponents& exps, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const Rational& leading_coeff() const { return terms_.begin()->second; }
  const Exponents& leading_exponents() const { return terms_.begin()->first; }

  int degree_in(std::size_t var) const;
  /// Coefficient of var^d, as a polynomial in the remaining variables.
  Polynomial coeff_in(std::size_t var, int d) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  Polynomial operator-() const { return *this * Rational(-1); }

  bool operator==(const Polynomial&) const = default;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t nvars_;
  Terms terms_;
};

/// a / b where b divides a exactly; throws InvalidArgument otherwise.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero only if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// "a_0^2*a_-1 - 1/2*a_0 + 3".
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);

/// Quotient of polynomials in lowest terms with monic denominator; this form
/// is unique, so structural equality is equality of rational functions.
class RatFunc {
 public:
  explicit RatFunc(std::size_t nvars = 0) : num_(nvars), den_(Polynomial::constant(nvars, 1)) {}
  RatFunc(Polynomial num, Polynomial den);
  explicit RatFunc(Polynomial num);
  static RatFunc constant(std::size_t nvars, const Rational& c);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc inverse() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const { return RatFunc(-num_, den_); }

  bool operator==(const RatFunc&) const = default;

 private:
  struct Coprime {};
  /// num and den already coprime; only the leading coefficient is fixed.
  RatFunc(Polynomial num, Polynomial den, Coprime);
  void canonicalize();
  void normalize_leading();

  Polynomial num_;
  Polynomial den_;
};

std::string to_string(const RatFunc& f, const std::vector<std::string>& names);

}  // namespace flagclean
