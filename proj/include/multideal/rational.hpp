#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace multideal {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0). Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Fractional part in [0, 1).
Rational frac(const Rational& q);

// A positive rational weight r, together with its round-down and fractional part.
class Coefficient {
public:
  explicit Coefficient(Rational value);

  const Rational& value() const noexcept { return value_; }
  Integer whole() const { return floor(value_); }
  Rational fractional() const { return frac(value_); }

private:
  Rational value_;
};

}  // namespace multideal
