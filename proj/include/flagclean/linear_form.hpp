#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagclean/rational.hpp"

namespace flagclean {

/// Ordered, duplicate-free list of parameter names. The order is used for
/// printing and for the sign convention of normalize().
class ParamSpace {
 public:
  ParamSpace() = default;
  explicit ParamSpace(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool contains(std::string_view name) const { return index_of(name).has_value(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const ParamSpace&) const = default;

 private:
  std::vector<std::string> names_;
};

using Assignment = std::map<std::string, Rational, std::less<>>;

/// Affine-linear form sum_p c_p * p + constant with exact coefficients.
/// Zero coefficients are never stored, so structural equality is equality
/// of forms.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(Rational constant);
  static LinearForm param(const std::string& name, Rational coeff = 1);

  const std::map<std::string, Rational, std::less<>>& coeffs() const { return coeffs_; }
  const Rational& constant() const { return constant_; }
  Rational coeff(std::string_view name) const;
  bool is_constant() const { return coeffs_.empty(); }

  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  LinearForm& operator*=(const Rational& s);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }
  LinearForm operator-() const;

  bool operator==(const LinearForm&) const = default;

 private:
  void add_term(const std::string& name, const Rational& c);

  std::map<std::string, Rational, std::less<>> coeffs_;
  Rational constant_ = 0;
};

/// Exact value at an assignment; throws MissingParameter if a parameter with
/// nonzero coefficient is unassigned.
Rational evaluate(const LinearForm& form, const Assignment& assignment);
bool is_integral(const LinearForm& form, const Assignment& assignment);

/// Replaces the assigned parameters by their values; others are kept.
LinearForm substitute(const LinearForm& form, const Assignment& assignment);

/// Canonical representative of {+-form + n : n integer}: the first nonzero
/// coefficient in `space` order is made positive, then the constant is
/// reduced into [0, 1). A constant form only has its constant reduced.
LinearForm normalize(const LinearForm& form, const ParamSpace& space);

/// Coefficients in `space` order (for ordering and the JSON mirror).
std::vector<Rational> coefficient_vector(const LinearForm& form, const ParamSpace& space);

/// "mu_-1 + 2*mu_0 - 1/2*Lambda + 1/3"; terms in `space` order.
std::string to_string(const LinearForm& form, const ParamSpace& space);

/// Inverse of to_string: sums of [coefficient*]name and rational constants.
/// Every name must belong to `space`.
LinearForm parse_linear_form(std::string_view text, const ParamSpace& space);

/// Exponents of a rank-one torus local system: one form per base
/// coordinate and one per fiber-torus coordinate.
struct ExponentVector {
  std::vector<LinearForm> base;
  std::vector<LinearForm> fiber;

  std::vector<LinearForm> flattened() const;
  bool operator==(const ExponentVector&) const = default;
};

}  // namespace flagclean
