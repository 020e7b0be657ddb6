#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "multideal/rational.hpp"

namespace multideal {

// Exponent vector of a monomial, one entry per declared variable.
using Exponent = std::vector<std::int64_t>;

bool divides(const Exponent& a, const Exponent& b);  // a <= b componentwise
Exponent add(const Exponent& a, const Exponent& b);

// Polynomial with rational coefficients over an ordered list of named
// variables. Terms are stored densely keyed by exponent; zero coefficients
// are never stored, so structural equality is ideal-theoretic equality.
class Polynomial {
public:
  using TermMap = std::map<Exponent, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(std::vector<std::string> variables, const Rational& c);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);
  static Polynomial monomial(std::vector<std::string> variables, Exponent e, const Rational& c);

  std::size_t nvars() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  // Adds c·x^e to this polynomial, merging with an existing term.
  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned long k) const;
  Polynomial derivative(std::size_t index) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Same terms, with the variable list replaced (dimensions must agree).
  Polynomial with_variables(std::vector<std::string> variables) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void check_compatible(const Polynomial& other) const;

  std::vector<std::string> variables_;
  TermMap terms_;
};

// Canonical text form in the input grammar: explicit '*', terms by
// descending total degree then descending lexicographic exponent.
std::string to_string(const Polynomial& p);

}  // namespace multideal
