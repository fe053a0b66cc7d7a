#include "flagclean/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "flagclean/error.hpp"

namespace flagclean {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& exps, const Rational& c) {
  Polynomial p(exps.size());
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Polynomial Polynomial::coeff_in(std::size_t var, int d) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_)
    if (e[var] == d) {
      Exponents f = e;
      f[var] = 0;
      r.add_term(f, c);
    }
  return r;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_)
    throw Error(ErrorKind::DimensionMismatch, "polynomial term has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_)
    throw Error(ErrorKind::DimensionMismatch, "polynomials over different variable sets");
  Polynomial r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  Polynomial q(a.nvars());
  Polynomial r = a;
  const auto& lb = b.leading_exponents();
  while (!r.is_zero()) {
    const auto& lr = r.leading_exponents();
    Polynomial::Exponents e(lr.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = lr[i] - lb[i];
      if (e[i] < 0) throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact");
    }
    Polynomial t = Polynomial::monomial(e, r.leading_coeff() / b.leading_coeff());
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

Polynomial monic(const Polynomial& p) {
  return p.is_zero() ? p : p * (Rational(1) / p.leading_coeff());
}

/// Scales p to integer coefficients with gcd 1; keeps the remainder
/// sequence from accumulating rational coefficient growth.
Polynomial integer_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  return p * scale;
}

/// Highest variable index occurring in p, or -1 for constants.
int main_variable(const Polynomial& p) {
  int v = -1;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) v = std::max(v, static_cast<int>(i));
  return v;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (int d = p.degree_in(var); d >= 0; --d) {
    const Polynomial c = p.coeff_in(var, d);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial power(const Polynomial& p, int e) {
  Polynomial r = Polynomial::constant(p.nvars(), 1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

/// lc(b)^(deg a - deg b + 1) * a reduced modulo b, both viewed in Q[others][var].
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const int db = b.degree_in(var);
  const Polynomial lb = b.coeff_in(var, db);
  int steps = a.degree_in(var) - db + 1;
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    Polynomial::Exponents shift(a.nvars(), 0);
    shift[var] = da - db;
    a = lb * a - a.coeff_in(var, da) * Polynomial::monomial(shift, 1) * b;
    --steps;
  }
  return steps > 0 ? power(lb, steps) * a : a;
}

/// Componentwise minimum of the exponents of p.
Polynomial::Exponents min_exponents(const Polynomial& p) {
  Polynomial::Exponents m = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Polynomial univariate_gcd(Polynomial p, Polynomial q, std::size_t var) {
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (!q.is_zero()) {
    Polynomial r = monic(pseudo_remainder(p, q, var));
    p = std::move(q);
    q = std::move(r);
  }
  return monic(p);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.nvars(), 1);
  if (a.terms().size() == 1 || b.terms().size() == 1) {
    Polynomial::Exponents m = min_exponents(a);
    const Polynomial::Exponents mb = min_exponents(b);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], mb[i]);
    return Polynomial::monomial(m, 1);
  }
  const int v = std::max(main_variable(a), main_variable(b));
  const auto var = static_cast<std::size_t>(v);
  if (v == 0) return univariate_gcd(a, b, var);

  const Polynomial ca = content_in(a, var);
  const Polynomial cb = content_in(b, var);
  const Polynomial c = gcd(ca, cb);
  Polynomial p = integer_primitive(divide_exact(a, ca));
  Polynomial q = integer_primitive(divide_exact(b, cb));
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  // Subresultant remainder sequence.
  Polynomial g = Polynomial::constant(a.nvars(), 1);
  Polynomial h = g;
  while (q.degree_in(var) > 0) {
    const int delta = p.degree_in(var) - q.degree_in(var);
    Polynomial r = pseudo_remainder(p, q, var);
    if (r.is_zero()) break;
    p = std::move(q);
    q = divide_exact(r, g * power(h, delta));
    g = p.coeff_in(var, p.degree_in(var));
    h = delta == 0 ? h : divide_exact(power(g, delta), power(h, delta - 1));
  }
  Polynomial prim = q.degree_in(var) > 0 ? divide_exact(q, content_in(q, var))
                                         : Polynomial::constant(a.nvars(), 1);
  return monic(c * prim);
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool unit_monomial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    Rational a = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    bool need_star = false;
    if (a != 1 || unit_monomial) {
      out << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << '*';
      out << names.at(i);
      if (e[i] != 1) out << '^' << e[i];
      need_star = true;
    }
  }
  return out.str();
}

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational function with zero denominator");
  canonicalize();
}

RatFunc::RatFunc(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), 1)) {}

RatFunc RatFunc::constant(std::size_t nvars, const Rational& c) {
  return RatFunc(Polynomial::constant(nvars, c));
}

bool RatFunc::is_one() const { return num_ == den_; }

RatFunc::RatFunc(Polynomial num, Polynomial den, Coprime)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize_leading();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), 1);
    return;
  }
  Polynomial g = gcd(num_, den_);
  num_ = divide_exact(num_, g);
  den_ = divide_exact(den_, g);
  normalize_leading();
}

void RatFunc::normalize_leading() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), 1);
    return;
  }
  const Rational lc = den_.leading_coeff();
  if (lc == 1) return;
  num_ *= Rational(1) / lc;
  den_ *= Rational(1) / lc;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of the zero rational function");
  return RatFunc(den_, num_, Coprime{});
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  // With d = g*d1 = g*d2' coprime parts, the sum's common factor divides g.
  const Polynomial g = gcd(den_, o.den_);
  const Polynomial d1 = divide_exact(den_, g);
  const Polynomial d2 = divide_exact(o.den_, g);
  Polynomial num = num_ * d2 + o.num_ * d1;
  if (num.is_zero()) return *this = RatFunc(nvars());
  const Polynomial h = gcd(num, g);
  *this = RatFunc(divide_exact(num, h), d1 * divide_exact(o.den_, h), Coprime{});
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc(nvars());
  const Polynomial g1 = gcd(num_, o.den_);
  const Polynomial g2 = gcd(o.num_, den_);
  *this = RatFunc(divide_exact(num_, g1) * divide_exact(o.num_, g2),
                  divide_exact(den_, g2) * divide_exact(o.den_, g1), Coprime{});
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string to_string(const RatFunc& f, const std::vector<std::string>& names) {
  std::string num = to_string(f.num(), names);
  if (f.den().is_constant()) return num;  // canonical denominators are monic
  std::string den = to_string(f.den(), names);
  if (f.num().terms().size() > 1) num = "(" + num + ")";
  if (f.den().terms().size() > 1 || den.find('*') != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace flagclean
