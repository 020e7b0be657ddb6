#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "multideal/ideal.hpp"
#include "multideal/rational.hpp"

// Verification path in two variables: resolve a monomial ideal by a smooth
// fan refining the normal fan of its Newton polygon, then read the
// multiplier ideal off the exceptional divisors. Shares nothing with the
// polytope module beyond the MonomialIdeal type.
namespace multideal::oracle {

using Ray = std::array<std::int64_t, 2>;

// Rays ordered from (1,0) to (0,1) by increasing angle.
struct Fan2D {
  std::vector<Ray> rays;
  std::vector<std::int64_t> determinants;  // det(rays[i], rays[i+1])
};

struct DivisorData {
  Ray ray;
  std::int64_t order = 0;        // min over generators g of ray·g
  std::int64_t discrepancy = 0;  // ray·(1,1) − 1, the coefficient in K_{X'/X}
};

// Inner normals of the non-coordinate edges of the Newton polygon, computed
// directly from the lower hull of the generators.
std::vector<Ray> polygon_normals(const MonomialIdeal& a);

// Starts from the smooth cone {(1,0), (0,1)} and inserts the sum of the
// adjacent pair bracketing each missing normal until every normal is a ray.
// Every inserted ray is the sum of a unimodular adjacent pair, so all
// adjacent determinants stay 1.
Fan2D smooth_subdivision(const MonomialIdeal& a);

std::vector<DivisorData> divisor_data(const MonomialIdeal& a, const Fan2D& fan);

// { m : ray·m ≥ ⌊r·order⌋ − discrepancy for every ray of the fan }.
MonomialIdeal multiplier_via_resolution(const MonomialIdeal& a, const Coefficient& r);

}  // namespace multideal::oracle
