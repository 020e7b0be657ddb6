#pragma once

#include <cstddef>
#include <vector>

#include "multideal/polynomial.hpp"

namespace multideal {

// Monomial ideal stored by its minimal generators, sorted lexicographically.
// No generators: the zero ideal. The single generator 0: the unit ideal.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t n) : n_(n) {}

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n);

  std::size_t dimension() const noexcept { return n_; }
  const std::vector<Exponent>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  friend MonomialIdeal minimalize(std::size_t n, std::vector<Exponent> candidates);

  std::size_t n_ = 0;
  std::vector<Exponent> gens_;
};

// The antichain of componentwise-minimal elements of the given set.
MonomialIdeal minimalize(std::size_t n, std::vector<Exponent> candidates);

// Monomial ideal generated by the terms of f. Throws ZeroIdeal for f = 0.
MonomialIdeal term_ideal(const Polynomial& f);

bool contains(const MonomialIdeal& a, const Exponent& m);

// b ⊆ a.
bool contains(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, unsigned k);

// Multiplies every generator by x^shift.
MonomialIdeal shift(const MonomialIdeal& a, const Exponent& shift);

// (base^exponent) · monomial. exponent == 0 means a purely monomial ideal.
struct FactoredIdeal {
  Polynomial base;
  unsigned long exponent = 0;
  MonomialIdeal monomial;
};

// Ideal equality of two factored ideals over the same base polynomial.
// A monomial base is absorbed into the monomial part before comparing;
// for a base with two or more terms, f^k·J = f^l·K forces k = l and J = K.
bool same_ideal(const FactoredIdeal& a, const FactoredIdeal& b);

}  // namespace multideal
