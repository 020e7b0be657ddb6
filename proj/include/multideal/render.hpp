#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "multideal/ideal.hpp"
#include "multideal/nondeg.hpp"
#include "multideal/polytope.hpp"
#include "multideal/toric_oracle.hpp"

namespace multideal {

nlohmann::json to_json(const MonomialIdeal& a);
nlohmann::json to_json(const NewtonPolyhedron& p);
nlohmann::json to_json(const Face& face);
nlohmann::json to_json(const FactoredIdeal& j);
nlohmann::json to_json(const NondegReport& report);
nlohmann::json to_json(const std::vector<oracle::DivisorData>& data);

// "(x^2, x*y, y^2)", "(1)" or "(0)".
std::string to_string(const MonomialIdeal& a, const std::vector<std::string>& variables);
std::string to_string(const FactoredIdeal& j);

}  // namespace multideal
