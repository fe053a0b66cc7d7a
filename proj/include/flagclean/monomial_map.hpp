#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flagclean/linear_form.hpp"
#include "flagclean/rational.hpp"

namespace flagclean {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(std::vector<std::vector<Integer>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Integer> row(std::size_t r) const;

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  /// Exact determinant (fraction-free elimination).
  Integer determinant() const;
  bool is_unimodular() const;
  /// Integer inverse; throws NonInvertible unless square and unimodular.
  IntMatrix inverse() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::string to_string(const IntMatrix& m);

/// Torus morphism z -> (c_j * prod_i z_i^{E_ji})_j. Coefficients are nonzero
/// rationals; the exponent matrix has one row per output coordinate.
class MonomialMap {
 public:
  MonomialMap() = default;
  MonomialMap(std::vector<Rational> coeffs, IntMatrix exponents);
  static MonomialMap identity(std::size_t n);
  /// All coefficients equal to one.
  static MonomialMap pure(IntMatrix exponents);

  std::size_t source_dim() const { return exponents_.cols(); }
  std::size_t target_dim() const { return exponents_.rows(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const IntMatrix& exponents() const { return exponents_; }

  /// Evaluates at a point of the torus (all coordinates nonzero).
  std::vector<Rational> apply(const std::vector<Rational>& point) const;

  bool operator==(const MonomialMap&) const = default;

 private:
  std::vector<Rational> coeffs_;
  IntMatrix exponents_;
};

/// f o g.
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);

/// Two-sided inverse. For a unimodular exponent matrix the coefficient system
/// has the unique solution c' = c^(-E^-1), so only the matrix can obstruct.
MonomialMap invert(const MonomialMap& f);

/// Exponents of the pullback of the rank-one torus local system with
/// exponents `exps` (one per target coordinate): E^T * exps. Coefficients of
/// f do not enter.
std::vector<LinearForm> pullback_exponents(const MonomialMap& f,
                                           const std::vector<LinearForm>& exps);

/// "y/x^2", "1/(x^2*y)", "-2*a*x"; `exponents` indexes `names`.
std::string format_monomial(const Rational& coeff, const std::vector<Integer>& exponents,
                            const std::vector<std::string>& names);

/// "(x, y) -> (1/x, y/x^2)".
std::string format_map(const MonomialMap& f, const std::vector<std::string>& source_names);

}  // namespace flagclean
