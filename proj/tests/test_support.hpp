#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "flagclean/linear_form.hpp"
#include "flagclean/monomial_map.hpp"

namespace flagclean {

inline void PrintTo(const LinearForm& f, std::ostream* os) {
  std::vector<std::string> names;
  for (const auto& [n, c] : f.coeffs()) names.push_back(n);
  *os << to_string(f, ParamSpace(names));
}

inline void PrintTo(const IntMatrix& m, std::ostream* os) { *os << to_string(m); }

inline void PrintTo(const MonomialMap& m, std::ostream* os) {
  *os << "coeffs [";
  for (std::size_t i = 0; i < m.coeffs().size(); ++i) *os << (i ? ", " : "") << m.coeffs()[i].get_str();
  *os << "] exponents " << to_string(m.exponents());
}

}  // namespace flagclean

namespace flagclean::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed2026);
  return engine;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational random_rational(long num_bound = 9, long den_bound = 6) {
  Rational q(uniform(-num_bound, num_bound), uniform(1, den_bound));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational() {
  Rational q;
  do q = random_rational(); while (q == 0);
  return q;
}

/// Product of random elementary row operations and sign changes.
inline IntMatrix random_unimodular(std::size_t n, int steps = 6) {
  IntMatrix m = IntMatrix::identity(n);
  for (int s = 0; s < steps && n > 1; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const long k = uniform(-2, 2);
    for (std::size_t c = 0; c < n; ++c) m.at(i, c) += k * m.at(j, c);
  }
  for (std::size_t r = 0; r < n; ++r)
    if (uniform(0, 1))
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = -m.at(r, c);
  return m;
}

inline MonomialMap random_map(std::size_t n) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_nonzero_rational());
  return MonomialMap(std::move(c), random_unimodular(n));
}

inline LinearForm random_form(const ParamSpace& space) {
  LinearForm f(random_rational());
  for (const auto& name : space.names())
    if (uniform(0, 2)) f += LinearForm::param(name, random_rational(4, 3));
  return f;
}

inline Assignment random_assignment(const ParamSpace& space) {
  Assignment a;
  for (const auto& name : space.names()) a[name] = random_rational(6, 4);
  return a;
}

inline std::vector<Rational> random_point(std::size_t n) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_nonzero_rational());
  return p;
}

}  // namespace flagclean::testing
