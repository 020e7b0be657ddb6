#pragma once

#include <optional>
#include <vector>

#include "multideal/error.hpp"
#include "multideal/ideal.hpp"
#include "multideal/nondeg.hpp"
#include "multideal/polytope.hpp"
#include "multideal/rational.hpp"

namespace multideal {

// The polynomial fails the nondegeneracy condition the requested formula needs.
class DegenerateInput : public Error {
public:
  DegenerateInput(const std::string& message, std::vector<FaceReport> witnesses)
      : Error("degenerate_input", message), witnesses_(std::move(witnesses)) {}

  const std::vector<FaceReport>& witnesses() const noexcept { return witnesses_; }

private:
  std::vector<FaceReport> witnesses_;
};

// J(r·a) = { m : m + (1,…,1) lies in the interior of r·P(a) }.
MonomialIdeal multiplier_monomial(const MonomialIdeal& a, const Coefficient& r);
MonomialIdeal multiplier_monomial(const NewtonPolyhedron& p, const Coefficient& r);

// Side length used by the last multiplier_monomial search; exposed so tests
// can check that no generator reaches the box boundary.
struct SearchStats {
  std::int64_t box = 0;
  std::size_t retries = 0;
};
MonomialIdeal multiplier_monomial(const NewtonPolyhedron& p, const Coefficient& r, SearchStats& stats);

enum class Mode {
  Strict,         // f nondegenerate on every face: valid on all of affine space
  PrincipalPart,  // f nondegenerate on compact faces: valid near the origin
};

// J(r·Div f) = (f^⌊r⌋) · J({r}·τ(f)) for f meeting the nondegeneracy
// condition of `mode`. Throws DegenerateInput or Inconclusive otherwise.
FactoredIdeal multiplier_poly(const Polynomial& f, const Coefficient& r, Mode mode = Mode::Strict,
                              const NondegOptions& options = {});

// Log canonical threshold of a monomial ideal; nullopt stands for +∞ (unit ideal).
std::optional<Rational> lct(const MonomialIdeal& a);

// Every r in (0, bound] at which J(r·a) strictly shrinks, increasing.
std::vector<Rational> jumping_numbers(const MonomialIdeal& a, const Rational& bound);

// Jumps of r ↦ J(r·Div f) in (0, bound] for f meeting the condition of `mode`.
std::vector<Rational> jumping_numbers_poly(const Polynomial& f, const Rational& bound, Mode mode = Mode::Strict,
                                           const NondegOptions& options = {});

}  // namespace multideal
