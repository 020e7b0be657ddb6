#include "multideal/rational.hpp"

#include <cctype>

#include "multideal/error.hpp"

namespace multideal {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num))
    throw ParseError("parse_error", "malformed rational '" + std::string(text) + "'", 0);
  if (!all_digits(den))
    throw ParseError("parse_error", "malformed rational '" + std::string(text) + "'",
                     text.size() - body.size() + num.size() + 1);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("parse_error", "zero denominator in '" + std::string(text) + "'", 0);
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

Coefficient::Coefficient(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (sgn(value_) <= 0) throw InvalidArgument("coefficient must be positive, got " + to_string(value_));
}

}  // namespace multideal
