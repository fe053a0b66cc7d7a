#include "flagclean/linear_form.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "flagclean/error.hpp"
#include "flagclean/lexing.hpp"

namespace flagclean {

ParamSpace::ParamSpace(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!lexing::is_identifier(n))
      throw Error(ErrorKind::InvalidArgument, "invalid parameter name '" + n + "'");
    if (!seen.insert(n).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate parameter name '" + n + "'");
  }
}

std::optional<std::size_t> ParamSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

LinearForm::LinearForm(Rational constant) : constant_(std::move(constant)) {}

LinearForm LinearForm::param(const std::string& name, Rational coeff) {
  LinearForm f;
  f.add_term(name, coeff);
  return f;
}

Rational LinearForm::coeff(std::string_view name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LinearForm::add_term(const std::string& name, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(name, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  for (const auto& [name, c] : other.coeffs_) add_term(name, c);
  constant_ += other.constant_;
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) { return *this += -other; }

LinearForm& LinearForm::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    constant_ = 0;
    return *this;
  }
  for (auto& [name, c] : coeffs_) c *= s;
  constant_ *= s;
  return *this;
}

LinearForm LinearForm::operator-() const {
  LinearForm r = *this;
  r *= Rational(-1);
  return r;
}

Rational evaluate(const LinearForm& form, const Assignment& assignment) {
  Rational value = form.constant();
  for (const auto& [name, c] : form.coeffs()) {
    auto it = assignment.find(name);
    if (it == assignment.end())
      throw Error(ErrorKind::MissingParameter, "no value assigned to parameter '" + name + "'");
    value += c * it->second;
  }
  return value;
}

bool is_integral(const LinearForm& form, const Assignment& assignment) {
  return is_integer(evaluate(form, assignment));
}

LinearForm substitute(const LinearForm& form, const Assignment& assignment) {
  LinearForm r(form.constant());
  for (const auto& [name, c] : form.coeffs()) {
    auto it = assignment.find(name);
    if (it == assignment.end())
      r += LinearForm::param(name, c);
    else
      r += LinearForm(c * it->second);
  }
  return r;
}

std::vector<Rational> coefficient_vector(const LinearForm& form, const ParamSpace& space) {
  std::vector<Rational> v;
  v.reserve(space.size());
  for (const auto& n : space.names()) v.push_back(form.coeff(n));
  return v;
}

LinearForm normalize(const LinearForm& form, const ParamSpace& space) {
  // Leading coefficient: first in space order, then unknown names by name.
  std::optional<Rational> leading;
  for (const auto& n : space.names())
    if (Rational c = form.coeff(n); c != 0) {
      leading = c;
      break;
    }
  if (!leading)
    for (const auto& [n, c] : form.coeffs())
      if (!space.contains(n)) {
        leading = c;
        break;
      }
  if (!leading) {
    // Constant forms: c and -c have the same integrality.
    const Rational c = std::min(frac(form.constant()), frac(-form.constant()));
    return LinearForm(c);
  }
  LinearForm r = *leading < 0 ? -form : form;
  return r + LinearForm(frac(r.constant()) - r.constant());
}

std::string to_string(const LinearForm& form, const ParamSpace& space) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& n : space.names())
    if (Rational c = form.coeff(n); c != 0) terms.emplace_back(n, c);
  for (const auto& [n, c] : form.coeffs())
    if (!space.contains(n)) terms.emplace_back(n, c);

  std::ostringstream out;
  bool first = true;
  auto emit_sign = [&](const Rational& c) {
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
  };
  for (const auto& [n, c] : terms) {
    emit_sign(c);
    Rational a = abs(c);
    if (a != 1) out << a.get_str() << '*';
    out << n;
  }
  if (form.constant() != 0 || first) {
    emit_sign(form.constant());
    out << Rational(abs(form.constant())).get_str();
  }
  return out.str();
}

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, const ParamSpace& space) : s_(text), space_(space) {}

  LinearForm parse() {
    LinearForm result;
    skip_ws();
    if (at_end()) fail("empty linear form");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result += sign * term();
      first = false;
    }
    return result;
  }

 private:
  LinearForm term() {
    if (at_end()) fail("unexpected end of form");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational c = number();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        return LinearForm::param(name(), c);
      }
      return LinearForm(c);
    }
    return LinearForm::param(name());
  }

  Rational number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) fail("expected denominator");
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  std::string name() {
    std::size_t len = lexing::identifier_length(s_, pos_);
    if (len == 0) fail("expected parameter name");
    std::string n(s_.substr(pos_, len));
    if (!space_.contains(n)) fail("unknown parameter '" + n + "'");
    pos_ += len;
    return n;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" +
                                      std::string(s_) + "'");
  }

  std::string_view s_;
  const ParamSpace& space_;
  std::size_t pos_ = 0;
};

}  // namespace

LinearForm parse_linear_form(std::string_view text, const ParamSpace& space) {
  return FormParser(text, space).parse();
}

std::vector<LinearForm> ExponentVector::flattened() const {
  std::vector<LinearForm> all = base;
  all.insert(all.end(), fiber.begin(), fiber.end());
  return all;
}

}  // namespace flagclean
