#include "flagclean/laurent.hpp"

#include <algorithm>
#include <functional>

#include "flagclean/error.hpp"

namespace flagclean {

LaurentPoly LaurentPoly::constant(const RatFunc& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const RatFunc& c, int power) {
  LaurentPoly p(c.nvars());
  p.add_term(power, c);
  return p;
}

void LaurentPoly::add_term(int power, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [k, c] : terms_) r.add_term(k, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.nvars_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::inverse_term() const {
  if (!is_single_term())
    throw Error(ErrorKind::InvalidArgument, "only single terms c*t^k can be inverted exactly");
  const auto& [k, c] = *terms_.begin();
  return monomial(c.inverse(), -k);
}

std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    std::string cs = to_string(c, names);
    bool negative = !cs.empty() && cs.front() == '-' &&
                    c.num().terms().size() == 1;
    if (negative) cs.erase(0, 1);
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      std::string tp = k == 1 ? "t" : "t^" + std::to_string(k);
      if (cs == "1")
        term = tp;
      else if (c.num().terms().size() > 1 || !c.den().is_constant())
        term = "(" + cs + ")*" + tp;
      else
        term = cs + "*" + tp;
    }
    if (first)
      out += (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

LaurentSeries::LaurentSeries(std::size_t nvars, int precision)
    : nvars_(nvars), start_(precision), precision_(precision) {}

LaurentSeries LaurentSeries::from_poly(const LaurentPoly& p, int precision) {
  LaurentSeries s(p.nvars(), precision);
  if (p.is_zero() || p.terms().begin()->first >= precision) return s;
  s.start_ = p.terms().begin()->first;
  for (int k = s.start_; k < precision; ++k) {
    auto it = p.terms().find(k);
    s.coeffs_.push_back(it == p.terms().end() ? RatFunc(p.nvars()) : it->second);
  }
  return s;
}

int LaurentSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return start_ + static_cast<int>(i);
  return precision_;
}

std::optional<RatFunc> LaurentSeries::coefficient(int k) const {
  if (k >= precision_) return std::nullopt;
  if (k < start_) return RatFunc(nvars_);
  return coeffs_[static_cast<std::size_t>(k - start_)];
}

namespace {

LaurentSeries build(std::size_t nvars, int lo, int precision,
                    const std::function<RatFunc(int)>& coeff) {
  LaurentPoly p(nvars);
  for (int k = lo; k < precision; ++k) p += LaurentPoly::monomial(coeff(k), k);
  return LaurentSeries::from_poly(p, precision);
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const int prec = std::min(a.precision_, b.precision_);
  const int lo = std::min(a.start_, b.start_);
  return build(a.nvars_, lo, prec, [&](int k) { return *a.coefficient(k) + *b.coefficient(k); });
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const int va = a.valuation();
  const int vb = b.valuation();
  const int prec = std::min(a.precision_ + vb, b.precision_ + va);
  return build(a.nvars_, va + vb, prec, [&](int k) {
    RatFunc sum(a.nvars_);
    for (int i = va; k - i >= vb; ++i) {
      auto ca = a.coefficient(i);
      auto cb = b.coefficient(k - i);
      if (!ca || !cb) continue;  // cannot happen below prec
      if (!ca->is_zero() && !cb->is_zero()) sum += *ca * *cb;
    }
    return sum;
  });
}

LaurentSeries LaurentSeries::inverse() const {
  const int v = valuation();
  if (v == precision_)
    throw Error(ErrorKind::NonUnitDeterminant,
                "series has no nonzero coefficient below t^" + std::to_string(precision_));
  const int rel = precision_ - v;  // known terms of the unit part
  const RatFunc u0_inv = coefficient(v)->inverse();
  std::vector<RatFunc> w;
  for (int k = 0; k < rel; ++k) {
    if (k == 0) {
      w.push_back(u0_inv);
      continue;
    }
    RatFunc sum(nvars_);
    for (int i = 1; i <= k; ++i) {
      const RatFunc ui = *coefficient(v + i);
      if (!ui.is_zero() && !w[static_cast<std::size_t>(k - i)].is_zero())
        sum += ui * w[static_cast<std::size_t>(k - i)];
    }
    w.push_back(-(sum * u0_inv));
  }
  return build(nvars_, -v, -v + rel, [&](int k) { return w[static_cast<std::size_t>(k + v)]; });
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
  const int prec = std::min(precision_, o.precision_);
  const int lo = std::min(start_, o.start_);
  for (int k = lo; k < prec; ++k)
    if (!(*coefficient(k) == *o.coefficient(k))) return false;
  return true;
}

}  // namespace flagclean
