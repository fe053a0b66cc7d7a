#include "flagclean/rational.hpp"

#include <cctype>

#include "flagclean/error.hpp"

namespace flagclean {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::NonUnitDeterminant: return "NonUnitDeterminant";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::Parse, "not an exact rational: '" + std::string(text) + "'");
  Integer d{std::string(den)};
  if (d == 0)
    throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q{Integer{std::string(num)}, d};
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer round_nearest(const Rational& q) { return floor(q + Rational(1, 2)); }

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw Error(ErrorKind::InvalidArgument, "zero raised to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p())
    throw Error(ErrorKind::InvalidArgument, "integer out of machine range: " + z.get_str());
  return z.get_si();
}

}  // namespace flagclean
