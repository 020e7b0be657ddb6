#include "multideal/toric_oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "multideal/error.hpp"

namespace multideal::oracle {

namespace {

void require_plane(const MonomialIdeal& a) {
  if (a.dimension() != 2) throw DimensionMismatch("the toric oracle works in two variables only");
  if (a.is_zero()) throw ZeroIdeal("resolution of the zero ideal");
}

std::int64_t det(const Ray& u, const Ray& w) { return u[0] * w[1] - u[1] * w[0]; }

Ray primitive(std::int64_t x, std::int64_t y) {
  std::int64_t g = std::gcd(x, y);
  return {x / g, y / g};
}

std::int64_t cross(const Exponent& o, const Exponent& a, const Exponent& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

std::vector<Ray> polygon_normals(const MonomialIdeal& a) {
  require_plane(a);
  // Minimal generators sorted by x have strictly decreasing y. The bounded
  // edges of the polygon form the lower-left convex chain through them.
  std::vector<Exponent> pts = a.generators();
  std::sort(pts.begin(), pts.end());
  std::vector<Exponent> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  std::vector<Ray> normals;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    std::int64_t dx = hull[i + 1][0] - hull[i][0];
    std::int64_t dy = hull[i][1] - hull[i + 1][1];
    normals.push_back(primitive(dy, dx));
  }
  return normals;
}

Fan2D smooth_subdivision(const MonomialIdeal& a) {
  Fan2D fan;
  fan.rays = {Ray{1, 0}, Ray{0, 1}};
  for (const auto& target : polygon_normals(a)) {
    for (;;) {
      auto hit = std::find(fan.rays.begin(), fan.rays.end(), target);
      if (hit != fan.rays.end()) break;
      // The adjacent pair (u, w) with target strictly inside cone(u, w).
      std::size_t k = 0;
      while (!(det(fan.rays[k], target) > 0 && det(target, fan.rays[k + 1]) > 0)) ++k;
      const Ray& u = fan.rays[k];
      const Ray& w = fan.rays[k + 1];
      fan.rays.insert(fan.rays.begin() + static_cast<std::ptrdiff_t>(k) + 1, Ray{u[0] + w[0], u[1] + w[1]});
    }
  }
  for (std::size_t i = 0; i + 1 < fan.rays.size(); ++i) fan.determinants.push_back(det(fan.rays[i], fan.rays[i + 1]));
  return fan;
}

std::vector<DivisorData> divisor_data(const MonomialIdeal& a, const Fan2D& fan) {
  require_plane(a);
  std::vector<DivisorData> out;
  for (const auto& v : fan.rays) {
    DivisorData d;
    d.ray = v;
    d.order = std::numeric_limits<std::int64_t>::max();
    for (const auto& g : a.generators()) d.order = std::min(d.order, v[0] * g[0] + v[1] * g[1]);
    d.discrepancy = v[0] + v[1] - 1;
    out.push_back(d);
  }
  return out;
}

MonomialIdeal multiplier_via_resolution(const MonomialIdeal& a, const Coefficient& r) {
  require_plane(a);
  std::vector<DivisorData> data = divisor_data(a, smooth_subdivision(a));
  // Required order of x^m along each divisor.
  std::vector<Integer> need;
  Integer top = 0;
  for (const auto& d : data) {
    need.push_back(floor(r.value() * Rational(d.order)) - d.discrepancy);
    top = std::max(top, need.back());
  }
  // Each ray has a positive entry in every coordinate it involves, so a
  // coordinate at or beyond the largest requirement satisfies all rays
  // that see it; minimal generators stay below top + 1.
  if (!top.fits_slong_p()) throw LimitExceeded("resolution search box too large");
  const std::int64_t box = std::max<std::int64_t>(top.get_si(), 0) + 1;
  std::vector<Exponent> members;
  for (std::int64_t x = 0; x <= box; ++x) {
    for (std::int64_t y = 0; y <= box; ++y) {
      bool ok = true;
      for (std::size_t i = 0; i < data.size() && ok; ++i)
        ok = Integer(data[i].ray[0] * x + data[i].ray[1] * y) >= need[i];
      if (ok) {
        members.push_back({x, y});
        break;  // larger y only gives multiples
      }
    }
  }
  MonomialIdeal j = minimalize(2, std::move(members));
  for (const auto& g : j.generators())
    if (g[0] >= box || g[1] >= box) throw std::logic_error("resolution search box too small");
  return j;
}

}  // namespace multideal::oracle
