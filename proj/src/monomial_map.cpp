#include "flagclean/monomial_map.hpp"

#include <sstream>

#include "flagclean/error.hpp"

namespace flagclean {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> v;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (long x : r) row.emplace_back(x);
    v.push_back(std::move(row));
  }
  *this = from_rows(std::move(v));
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Integer>> rows) {
  IntMatrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != m.cols_)
      throw Error(ErrorKind::DimensionMismatch, "ragged integer matrix");
    m.data_.insert(m.data_.end(), r.begin(), r.end());
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "matrix product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Integer sign = 1;
  Integer prev = 1;
  // Bareiss: every division below is exact.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = v;
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
  if (rows_ != cols_) return false;
  Integer d = determinant();
  return d == 1 || d == -1;
}

IntMatrix IntMatrix::inverse() const {
  if (!is_unimodular())
    throw Error(ErrorKind::NonInvertible,
                "exponent matrix " + to_string(*this) + " is not unimodular");
  const std::size_t n = rows_;
  // Gauss-Jordan over Q; the result is integral because det = +-1.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(at(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = a[i][n + j].get_num();
  return inv;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m.at(i, j).get_str();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

MonomialMap::MonomialMap(std::vector<Rational> coeffs, IntMatrix exponents)
    : coeffs_(std::move(coeffs)), exponents_(std::move(exponents)) {
  if (coeffs_.size() != exponents_.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "monomial map has " + std::to_string(coeffs_.size()) + " coefficients but " +
                    std::to_string(exponents_.rows()) + " exponent rows");
  for (const auto& c : coeffs_)
    if (c == 0) throw Error(ErrorKind::InvalidArgument, "monomial map coefficient is zero");
}

MonomialMap MonomialMap::identity(std::size_t n) {
  return {std::vector<Rational>(n, Rational(1)), IntMatrix::identity(n)};
}

MonomialMap MonomialMap::pure(IntMatrix exponents) {
  std::vector<Rational> ones(exponents.rows(), Rational(1));
  return {std::move(ones), std::move(exponents)};
}

std::vector<Rational> MonomialMap::apply(const std::vector<Rational>& point) const {
  if (point.size() != source_dim())
    throw Error(ErrorKind::DimensionMismatch, "point has wrong dimension");
  std::vector<Rational> out(target_dim());
  for (std::size_t j = 0; j < target_dim(); ++j) {
    Rational v = coeffs_[j];
    for (std::size_t i = 0; i < source_dim(); ++i)
      v *= pow(point[i], to_long(exponents_.at(j, i)));
    out[j] = v;
  }
  return out;
}

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
  if (g.target_dim() != f.source_dim())
    throw Error(ErrorKind::DimensionMismatch,
                "cannot compose: inner map has target dimension " +
                    std::to_string(g.target_dim()) + ", outer map has source dimension " +
                    std::to_string(f.source_dim()));
  std::vector<Rational> coeffs(f.target_dim());
  for (std::size_t j = 0; j < f.target_dim(); ++j) {
    Rational c = f.coeffs()[j];
    for (std::size_t i = 0; i < f.source_dim(); ++i)
      c *= pow(g.coeffs()[i], to_long(f.exponents().at(j, i)));
    coeffs[j] = c;
  }
  return {std::move(coeffs), f.exponents() * g.exponents()};
}

MonomialMap invert(const MonomialMap& f) {
  if (f.source_dim() != f.target_dim())
    throw Error(ErrorKind::NonInvertible, "monomial map is not square");
  IntMatrix inv = f.exponents().inverse();
  std::vector<Rational> coeffs(inv.rows());
  for (std::size_t i = 0; i < inv.rows(); ++i) {
    Rational c = 1;
    for (std::size_t k = 0; k < inv.cols(); ++k)
      c *= pow(f.coeffs()[k], -to_long(inv.at(i, k)));
    coeffs[i] = c;
  }
  return {std::move(coeffs), std::move(inv)};
}

std::vector<LinearForm> pullback_exponents(const MonomialMap& f,
                                           const std::vector<LinearForm>& exps) {
  if (exps.size() != f.target_dim())
    throw Error(ErrorKind::DimensionMismatch,
                "exponent list has length " + std::to_string(exps.size()) +
                    ", map target dimension is " + std::to_string(f.target_dim()));
  std::vector<LinearForm> out(f.source_dim());
  for (std::size_t i = 0; i < f.source_dim(); ++i)
    for (std::size_t j = 0; j < f.target_dim(); ++j)
      if (const Integer& e = f.exponents().at(j, i); e != 0) out[i] += Rational(e) * exps[j];
  return out;
}

std::string format_monomial(const Rational& coeff, const std::vector<Integer>& exponents,
                            const std::vector<std::string>& names) {
  auto factor = [&](std::size_t i, const Integer& e) {
    Integer a = abs(e);
    return a == 1 ? names[i] : names[i] + "^" + a.get_str();
  };
  std::vector<std::string> num, den;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) num.push_back(factor(i, exponents[i]));
    if (exponents[i] < 0) den.push_back(factor(i, exponents[i]));
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
    return s;
  };
  std::string out;
  Rational a = abs(coeff);
  if (coeff < 0) out += "-";
  if (num.empty()) {
    out += is_integer(a) ? a.get_str() : "(" + a.get_str() + ")";
  } else {
    if (a != 1) out += (is_integer(a) ? a.get_str() : "(" + a.get_str() + ")") + "*";
    out += join(num);
  }
  if (!den.empty()) out += "/" + (den.size() == 1 ? den[0] : "(" + join(den) + ")");
  return out;
}

std::string format_map(const MonomialMap& f, const std::vector<std::string>& source_names) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < source_names.size(); ++i) out << (i ? ", " : "") << source_names[i];
  out << ") -> (";
  for (std::size_t j = 0; j < f.target_dim(); ++j)
    out << (j ? ", " : "") << format_monomial(f.coeffs()[j], f.exponents().row(j), source_names);
  out << ')';
  return out.str();
}

}  // namespace flagclean
