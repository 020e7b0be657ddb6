#include "multideal/polytope.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "linalg.hpp"
#include "multideal/error.hpp"

namespace multideal {

namespace {

using detail::IntMatrix;

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw LimitExceeded("facet data exceeds 64-bit range");
  return z.get_si();
}

Integer dot(const Exponent& v, const Exponent& x) {
  Integer s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += Integer(v[i]) * Integer(x[i]);
  return s;
}

bool tight(const Facet& f, const Exponent& x) { return dot(f.normal, x) == f.rhs; }

// Calls visit(indices) for every k-subset of {0, ..., n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool Facet::is_coordinate() const {
  if (rhs != 0) return false;
  return std::count(normal.begin(), normal.end(), 1) == 1 &&
         std::count(normal.begin(), normal.end(), 0) == static_cast<std::ptrdiff_t>(normal.size()) - 1;
}

bool NewtonPolyhedron::contains(std::span<const Rational> x) const {
  if (x.size() != dimension()) throw DimensionMismatch("point has wrong dimension");
  for (const auto& f : facets_) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += Rational(f.normal[i]) * x[i];
    if (s < f.rhs) return false;
  }
  return true;
}

NewtonPolyhedron NewtonPolyhedron::scaled(std::int64_t k) const {
  if (k < 1) throw InvalidArgument("scale factor must be a positive integer");
  NewtonPolyhedron p = *this;
  std::vector<Exponent> gens = ideal_.generators();
  for (auto& g : gens)
    for (auto& v : g) v *= k;
  p.ideal_ = minimalize(dimension(), gens);
  for (auto& v : p.vertices_)
    for (auto& c : v) c *= k;
  for (auto& f : p.facets_) f.rhs *= k;
  return p;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a, const PolytopeLimits& limits) {
  const std::size_t n = a.dimension();
  if (a.is_zero()) throw ZeroIdeal("Newton polyhedron of the zero ideal");
  if (n == 0) throw InvalidArgument("Newton polyhedron needs at least one variable");
  if (n > limits.max_dimension)
    throw LimitExceeded("dimension " + std::to_string(n) + " exceeds the configured cap of " +
                        std::to_string(limits.max_dimension));

  // Generators of the cone over P in dimension n+1: (g, 1) for each
  // ideal generator and (e_i, 0) for each coordinate ray.
  IntMatrix cone;
  for (const auto& g : a.generators()) {
    std::vector<Integer> row(g.begin(), g.end());
    row.push_back(1);
    cone.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> row(n + 1, 0);
    row[i] = 1;
    cone.push_back(std::move(row));
  }

  std::set<std::pair<Exponent, std::int64_t>> found;
  for_each_subset(cone.size(), n, [&](const std::vector<std::size_t>& pick) {
    IntMatrix rows;
    rows.reserve(n);
    for (auto i : pick) rows.push_back(cone[i]);
    std::vector<Integer> c = detail::cofactor_kernel(rows);
    Integer g = detail::gcd_of(c);
    if (g == 0) return;
    for (auto& x : c) x /= g;
    bool pos = false, neg = false;
    for (const auto& row : cone) {
      Integer s = 0;
      for (std::size_t j = 0; j <= n; ++j) s += row[j] * c[j];
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) return;
    if (neg)
      for (auto& x : c) x = -x;
    Exponent normal(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      normal[j] = to_int64(c[j]);
      nonzero |= normal[j] != 0;
    }
    // The all-zero normal is the face at infinity of the homogenised cone.
    if (!nonzero) return;
    found.emplace(std::move(normal), to_int64(-c[n]));
  });

  NewtonPolyhedron p;
  p.ideal_ = a;
  for (const auto& [normal, rhs] : found) p.facets_.push_back(Facet{normal, rhs});
  std::stable_sort(p.facets_.begin(), p.facets_.end(), [](const Facet& x, const Facet& y) {
    if (x.is_coordinate() != y.is_coordinate()) return !x.is_coordinate();
    if (x.is_coordinate()) return x.normal > y.normal;
    return std::tie(x.normal, x.rhs) < std::tie(y.normal, y.rhs);
  });

  for (const auto& g : a.generators()) {
    IntMatrix normals;
    for (const auto& f : p.facets_)
      if (tight(f, g)) normals.emplace_back(f.normal.begin(), f.normal.end());
    if (detail::rank(std::move(normals)) == n) p.vertices_.push_back(g);
  }
  return p;
}

std::optional<Face> face_from_facets(const NewtonPolyhedron& p, std::vector<std::size_t> facets) {
  const std::size_t n = p.dimension();
  const auto& all = p.facets();
  for (auto j : facets)
    if (j >= all.size()) throw InvalidArgument("facet index out of range");

  Face face;
  for (const auto& v : p.vertices())
    if (std::all_of(facets.begin(), facets.end(), [&](auto j) { return tight(all[j], v); }))
      face.vertices.push_back(v);
  if (face.vertices.empty()) return std::nullopt;

  for (std::size_t i = 0; i < n; ++i)
    if (std::all_of(facets.begin(), facets.end(), [&](auto j) { return all[j].normal[i] == 0; }))
      face.recession.push_back(i);

  for (std::size_t j = 0; j < all.size(); ++j) {
    bool on_vertices = std::all_of(face.vertices.begin(), face.vertices.end(),
                                   [&](const Exponent& v) { return tight(all[j], v); });
    bool on_rays = std::all_of(face.recession.begin(), face.recession.end(),
                               [&](auto i) { return all[j].normal[i] == 0; });
    if (on_vertices && on_rays) face.active.push_back(j);
  }

  IntMatrix span;
  const Exponent& base = face.vertices.front();
  for (std::size_t k = 1; k < face.vertices.size(); ++k) {
    std::vector<Integer> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = face.vertices[k][i] - base[i];
    span.push_back(std::move(row));
  }
  for (auto i : face.recession) {
    std::vector<Integer> row(n, 0);
    row[i] = 1;
    span.push_back(std::move(row));
  }
  face.dim = detail::rank(std::move(span));
  face.compact = face.recession.empty();

  face.functional.assign(n, 0);
  for (auto j : face.active)
    for (std::size_t i = 0; i < n; ++i) face.functional[i] += all[j].normal[i];
  return face;
}

std::vector<Face> faces(const NewtonPolyhedron& p, const PolytopeLimits& limits) {
  if (p.facets().size() > limits.max_facets)
    throw LimitExceeded(std::to_string(p.facets().size()) + " facets exceed the configured cap of " +
                        std::to_string(limits.max_facets));
  std::vector<Face> out;
  std::set<std::vector<std::size_t>> seen;
  std::deque<Face> queue;
  auto whole = face_from_facets(p, {});
  seen.insert(whole->active);
  queue.push_back(*whole);
  while (!queue.empty()) {
    Face f = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < p.facets().size(); ++j) {
      if (std::binary_search(f.active.begin(), f.active.end(), j)) continue;
      std::vector<std::size_t> next = f.active;
      next.insert(std::upper_bound(next.begin(), next.end(), j), j);
      auto g = face_from_facets(p, std::move(next));
      if (g && seen.insert(g->active).second) queue.push_back(std::move(*g));
    }
    out.push_back(std::move(f));
  }
  std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.active < b.active;
  });
  return out;
}

bool in_scaled_interior(const NewtonPolyhedron& p, const Rational& r, std::span<const Rational> x) {
  if (sgn(r) <= 0) throw InvalidArgument("scale must be positive");
  if (x.size() != p.dimension()) throw DimensionMismatch("point has wrong dimension");
  // P is full-dimensional, so its interior is where every facet inequality is strict.
  for (const auto& f : p.facets()) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += Rational(f.normal[i]) * x[i];
    if (!(s > r * f.rhs)) return false;
  }
  return true;
}

bool in_scaled_interior(const NewtonPolyhedron& p, const Rational& r, const Exponent& x) {
  std::vector<Rational> q(x.begin(), x.end());
  return in_scaled_interior(p, r, std::span<const Rational>(q));
}

bool on_face(const NewtonPolyhedron& p, const Face& face, const Exponent& m) {
  if (m.size() != p.dimension()) throw DimensionMismatch("monomial has wrong dimension");
  for (const auto& f : p.facets())
    if (dot(f.normal, m) < f.rhs) return false;
  return std::all_of(face.active.begin(), face.active.end(),
                     [&](auto j) { return tight(p.facets().at(j), m); });
}

Polynomial face_terms(const Polynomial& f, const NewtonPolyhedron& p, const Face& face) {
  if (f.nvars() != p.dimension()) throw DimensionMismatch("polynomial and polyhedron dimensions differ");
  if (term_ideal(f) != p.ideal())
    throw InvalidArgument("face/polynomial mismatch: polyhedron is not the Newton polyhedron of f");
  Polynomial restricted(f.variables());
  for (const auto& [e, c] : f.terms())
    if (on_face(p, face, e)) restricted.add_term(e, c);
  return restricted;
}

std::vector<std::size_t> face_locus(const Face& face) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < face.functional.size(); ++i)
    if (face.functional[i] == 0) s.push_back(i);
  return s;
}

}  // namespace multideal
