#pragma once

#include <vector>

#include "multideal/groebner.hpp"
#include "multideal/polynomial.hpp"
#include "multideal/polytope.hpp"

namespace multideal {

enum class Verdict { Nondegenerate, Degenerate, Inconclusive };

const char* to_string(Verdict v);

struct FaceReport {
  Face face;
  Polynomial restriction;  // f_σ
  Verdict verdict = Verdict::Inconclusive;
};

struct NondegReport {
  NewtonPolyhedron polyhedron;
  std::vector<FaceReport> faces;   // in the order of faces()
  Verdict overall = Verdict::Inconclusive;
  Verdict principal_part = Verdict::Inconclusive;  // compact faces only
  std::vector<std::size_t> witnesses;  // indices into faces with a degenerate verdict
};

struct NondegOptions {
  PolytopeLimits limits;
  GroebnerOptions groebner;
};

// Whether d(f_σ) has no zero on the torus. Single-term restrictions,
// including nonzero constants at the origin, are nondegenerate without
// consulting the Gröbner engine.
Verdict face_nondegenerate(const Polynomial& f, const NewtonPolyhedron& p, const Face& face,
                           const NondegOptions& options = {});

// Per-face verdicts over all faces of P(τ(f)). A certain degenerate face
// makes the aggregate degenerate; otherwise any inconclusive face makes it
// inconclusive.
NondegReport classify(const Polynomial& f, const NondegOptions& options = {});

}  // namespace multideal
