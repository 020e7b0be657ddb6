#pragma once

#include <cstddef>
#include <vector>

#include "multideal/polynomial.hpp"

namespace multideal {

// Degree-reverse-lexicographic order, variables ranked in declaration order
// (the first variable is the largest). True when a < b.
bool grevlex_less(const Exponent& a, const Exponent& b);

// Leading exponent under grevlex. f must be nonzero.
Exponent leading_exponent(const Polynomial& f);

// The formal partial derivatives of f, one per variable.
std::vector<Polynomial> partials(const Polynomial& f);

struct GroebnerOptions {
  // Maximum number of S-polynomial reductions before giving up.
  std::size_t max_reductions = 50000;
};

struct GroebnerResult {
  // Reduced Gröbner basis (monic, sorted by decreasing leading monomial).
  // Meaningful only when complete is true.
  std::vector<Polynomial> basis;
  bool complete = true;
  std::size_t reductions = 0;
};

// Buchberger's algorithm under grevlex: normal selection strategy with the
// coprime and chain criteria; coefficients kept as primitive integer
// vectors during reduction.
GroebnerResult buchberger(const std::vector<Polynomial>& system, const GroebnerOptions& options = {});

// Remainder of full reduction of p by the given polynomials, over Q.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors);

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b);

enum class TorusZeros { Somewhere, Nowhere, Inconclusive };

// Whether the system has a common zero with every coordinate nonzero, over
// an algebraically closed field. Adjoins t with t·x_1⋯x_n − 1 (t ordered
// last) and asks whether the Gröbner basis is {1}.
TorusZeros vanishes_on_torus(const std::vector<Polynomial>& system, const GroebnerOptions& options = {});

const char* to_string(TorusZeros z);

}  // namespace multideal
