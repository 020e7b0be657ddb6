#include "multideal/ideal.hpp"

#include <algorithm>

#include "multideal/error.hpp"

namespace multideal {

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return minimalize(n, {Exponent(n, 0)}); }

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](auto v) { return v == 0; });
}

MonomialIdeal minimalize(std::size_t n, std::vector<Exponent> candidates) {
  for (const auto& c : candidates) {
    if (c.size() != n) throw DimensionMismatch("generator has wrong dimension");
    for (auto v : c)
      if (v < 0) throw InvalidArgument("negative exponent in monomial generator");
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  MonomialIdeal result(n);
  // In lexicographic order a divisor always precedes its multiples, so
  // checking against already-kept generators suffices.
  for (auto& c : candidates) {
    bool redundant = std::any_of(result.gens_.begin(), result.gens_.end(),
                                 [&](const Exponent& g) { return divides(g, c); });
    if (!redundant) result.gens_.push_back(std::move(c));
  }
  return result;
}

MonomialIdeal term_ideal(const Polynomial& f) {
  if (f.is_zero()) throw ZeroIdeal("term ideal of the zero polynomial");
  std::vector<Exponent> exps;
  exps.reserve(f.size());
  for (const auto& [e, c] : f.terms()) exps.push_back(e);
  return minimalize(f.nvars(), std::move(exps));
}

bool contains(const MonomialIdeal& a, const Exponent& m) {
  if (m.size() != a.dimension()) throw DimensionMismatch("monomial and ideal dimensions differ");
  return std::any_of(a.generators().begin(), a.generators().end(),
                     [&](const Exponent& g) { return divides(g, m); });
}

bool contains(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("ideal dimensions differ");
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Exponent& g) { return contains(a, g); });
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("ideal dimensions differ");
  std::vector<Exponent> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(add(g, h));
  return minimalize(a.dimension(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned k) {
  MonomialIdeal result = MonomialIdeal::unit(a.dimension());
  for (unsigned i = 0; i < k; ++i) result = product(result, a);
  return result;
}

MonomialIdeal shift(const MonomialIdeal& a, const Exponent& s) {
  std::vector<Exponent> gens;
  for (const auto& g : a.generators()) gens.push_back(add(g, s));
  return minimalize(a.dimension(), std::move(gens));
}

namespace {

FactoredIdeal absorb_monomial_base(const FactoredIdeal& f) {
  if (f.exponent == 0 || f.base.size() != 1) return f;
  Exponent e = f.base.terms().begin()->first;
  for (auto& v : e) v *= static_cast<std::int64_t>(f.exponent);
  return FactoredIdeal{f.base, 0, shift(f.monomial, e)};
}

}  // namespace

bool same_ideal(const FactoredIdeal& a, const FactoredIdeal& b) {
  if (a.base.variables() != b.base.variables()) throw DimensionMismatch("factored ideals over different rings");
  if (a.exponent != 0 && b.exponent != 0 && a.base != b.base)
    throw InvalidArgument("factored ideals with different bases are not comparable");
  FactoredIdeal x = absorb_monomial_base(a);
  FactoredIdeal y = absorb_monomial_base(b);
  if (x.monomial.is_zero() && y.monomial.is_zero()) return true;
  return x.exponent == y.exponent && x.monomial == y.monomial;
}

}  // namespace multideal
