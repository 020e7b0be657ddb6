#include "multideal/nondeg.hpp"

#include "multideal/error.hpp"

namespace multideal {

namespace {

Verdict combine(Verdict acc, Verdict v) {
  if (acc == Verdict::Degenerate || v == Verdict::Degenerate) return Verdict::Degenerate;
  if (acc == Verdict::Inconclusive || v == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Nondegenerate;
}

Verdict verdict_for(const Polynomial& restriction, const GroebnerOptions& options) {
  if (restriction.size() <= 1) return Verdict::Nondegenerate;
  std::vector<Polynomial> system;
  for (auto& d : partials(restriction))
    if (!d.is_zero()) system.push_back(std::move(d));
  switch (vanishes_on_torus(system, options)) {
    case TorusZeros::Nowhere: return Verdict::Nondegenerate;
    case TorusZeros::Somewhere: return Verdict::Degenerate;
    case TorusZeros::Inconclusive: return Verdict::Inconclusive;
  }
  return Verdict::Inconclusive;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Nondegenerate: return "nondegenerate";
    case Verdict::Degenerate: return "degenerate";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict face_nondegenerate(const Polynomial& f, const NewtonPolyhedron& p, const Face& face,
                           const NondegOptions& options) {
  return verdict_for(face_terms(f, p, face), options.groebner);
}

NondegReport classify(const Polynomial& f, const NondegOptions& options) {
  if (f.is_zero()) throw ZeroIdeal("cannot classify the zero polynomial");
  NondegReport report;
  report.polyhedron = newton_polyhedron(term_ideal(f), options.limits);
  report.overall = Verdict::Nondegenerate;
  report.principal_part = Verdict::Nondegenerate;
  for (auto& face : faces(report.polyhedron, options.limits)) {
    FaceReport fr;
    fr.restriction = face_terms(f, report.polyhedron, face);
    fr.verdict = verdict_for(fr.restriction, options.groebner);
    fr.face = std::move(face);
    report.overall = combine(report.overall, fr.verdict);
    if (fr.face.compact) report.principal_part = combine(report.principal_part, fr.verdict);
    if (fr.verdict == Verdict::Degenerate) report.witnesses.push_back(report.faces.size());
    report.faces.push_back(std::move(fr));
  }
  return report;
}

}  // namespace multideal
