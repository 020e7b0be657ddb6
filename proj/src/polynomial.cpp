#include "multideal/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "multideal/error.hpp"

namespace multideal {

bool divides(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw DimensionMismatch("exponent vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent add(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw DimensionMismatch("exponent vectors of different length");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
  Polynomial p(std::move(variables));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
  Polynomial p(std::move(variables));
  if (index >= p.nvars()) throw InvalidArgument("variable index out of range");
  Exponent e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, Exponent e, const Rational& c) {
  Polynomial p(std::move(variables));
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != variables_.size())
    throw DimensionMismatch("term has " + std::to_string(e.size()) + " exponents, expected " +
                            std::to_string(variables_.size()));
  for (auto v : e)
    if (v < 0) throw InvalidArgument("negative exponent in polynomial term");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (variables_ != other.variables_) throw DimensionMismatch("polynomials over different variable lists");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  check_compatible(other);
  Polynomial product(variables_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) product.add_term(add(ea, eb), ca * cb);
  terms_ = std::move(product.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial result = constant(variables_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= nvars()) throw InvalidArgument("variable index out of range");
  Polynomial d(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent de = e;
    --de[index];
    d.add_term(de, c * Rational(e[index]));
  }
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw DimensionMismatch("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      t *= p;
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::with_variables(std::vector<std::string> variables) const {
  if (variables.size() != nvars()) throw DimensionMismatch("variable list length differs");
  Polynomial r(std::move(variables));
  r.terms_ = terms_;
  return r;
}

namespace {

std::int64_t degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), std::int64_t{0}); }

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    auto da = degree(a.first), db = degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    bool unit_power = degree(e) > 0;
    bool wrote = false;
    if (!(unit_power && mag == 1)) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << p.variables()[i];
      if (e[i] > 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace multideal
