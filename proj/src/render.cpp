#include "multideal/render.hpp"

#include <sstream>

namespace multideal {

using nlohmann::json;

json to_json(const MonomialIdeal& a) {
  // Generators are kept sorted lexicographically.
  return json{{"n", a.dimension()}, {"generators", a.generators()}};
}

json to_json(const NewtonPolyhedron& p) {
  json facets = json::array();
  for (const auto& f : p.facets()) facets.push_back(json::array({f.normal, f.rhs}));
  return json{{"n", p.dimension()}, {"vertices", p.vertices()}, {"facets", facets}};
}

json to_json(const Face& face) {
  return json{{"active", face.active}, {"dim", face.dim}, {"compact", face.compact}};
}

json to_json(const FactoredIdeal& j) {
  return json{{"principal", {{"base", to_string(j.base)}, {"exponent", j.exponent}}},
              {"monomial_generators", j.monomial.generators()}};
}

json to_json(const NondegReport& report) {
  json degenerate = json::array();
  for (auto i : report.witnesses) {
    json w = to_json(report.faces[i].face);
    w["restriction"] = to_string(report.faces[i].restriction);
    degenerate.push_back(std::move(w));
  }
  json faces = json::array();
  for (const auto& fr : report.faces) {
    json f = to_json(fr.face);
    f["verdict"] = to_string(fr.verdict);
    f["restriction"] = to_string(fr.restriction);
    faces.push_back(std::move(f));
  }
  return json{{"overall", to_string(report.overall)},
              {"principal_part", to_string(report.principal_part)},
              {"degenerate_faces", degenerate},
              {"polyhedron", to_json(report.polyhedron)},
              {"faces", faces}};
}

json to_json(const std::vector<oracle::DivisorData>& data) {
  json rays = json::array();
  for (const auto& d : data)
    rays.push_back(json{{"ray", d.ray}, {"order", d.order}, {"discrepancy", d.discrepancy}});
  return rays;
}

std::string to_string(const MonomialIdeal& a, const std::vector<std::string>& variables) {
  if (a.is_zero()) return "(0)";
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < a.generators().size(); ++i) {
    if (i) out << ", ";
    out << to_string(Polynomial::monomial(variables, a.generators()[i], 1));
  }
  out << ')';
  return out.str();
}

std::string to_string(const FactoredIdeal& j) {
  std::string monomial = to_string(j.monomial, j.base.variables());
  if (j.exponent == 0) return monomial;
  std::ostringstream out;
  out << '(' << to_string(j.base) << ')';
  if (j.exponent > 1) out << '^' << j.exponent;
  if (!j.monomial.is_unit()) out << " * " << monomial;
  return out.str();
}

}  // namespace multideal
