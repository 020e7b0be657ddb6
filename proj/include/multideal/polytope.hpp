#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "multideal/ideal.hpp"
#include "multideal/polynomial.hpp"
#include "multideal/rational.hpp"

namespace multideal {

// Half-space normal·x >= rhs. The normal is primitive and nonnegative.
// A coordinate facet has normal e_i and rhs 0.
struct Facet {
  Exponent normal;
  std::int64_t rhs = 0;

  bool is_coordinate() const;
  friend bool operator==(const Facet&, const Facet&) = default;
};

struct PolytopeLimits {
  std::size_t max_dimension = 6;
  std::size_t max_facets = 20;
};

// Newton polyhedron conv(generators) + nonnegative orthant of a nonzero
// monomial ideal, in both vertex and facet form. The facet list is the
// full irredundant H-description and includes every coordinate hyperplane
// that supports the polyhedron.
class NewtonPolyhedron {
public:
  std::size_t dimension() const noexcept { return ideal_.dimension(); }
  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const std::vector<Exponent>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }

  bool contains(std::span<const Rational> x) const;

  // The polyhedron k·P, i.e. every rhs multiplied by k.
  NewtonPolyhedron scaled(std::int64_t k) const;

private:
  friend NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a, const PolytopeLimits& limits);

  MonomialIdeal ideal_;
  std::vector<Exponent> vertices_;
  std::vector<Facet> facets_;
};

// A face of a Newton polyhedron, identified by the facets tight on it.
// An empty active set is the whole polyhedron.
struct Face {
  std::vector<std::size_t> active;      // indices into NewtonPolyhedron::facets()
  std::size_t dim = 0;
  bool compact = false;
  std::vector<Exponent> vertices;       // vertices of P lying on the face
  std::vector<std::size_t> recession;   // coordinate directions e_i in the face's recession cone
  Exponent functional;                  // sum of active facet normals

  friend bool operator==(const Face&, const Face&) = default;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a, const PolytopeLimits& limits = {});

// Every face of every dimension, the whole polyhedron first, then by
// decreasing dimension and lexicographic active set.
std::vector<Face> faces(const NewtonPolyhedron& p, const PolytopeLimits& limits = {});

// The face cut out by a set of facets (its closure under tightness), or
// nothing if those facets have no common point on P.
std::optional<Face> face_from_facets(const NewtonPolyhedron& p, std::vector<std::size_t> facets);

// x lies in the topological interior of r·P.
bool in_scaled_interior(const NewtonPolyhedron& p, const Rational& r, std::span<const Rational> x);

// Integer-point variant: x is a lattice point.
bool in_scaled_interior(const NewtonPolyhedron& p, const Rational& r, const Exponent& x);

bool on_face(const NewtonPolyhedron& p, const Face& face, const Exponent& m);

// f_σ: the terms of f whose exponents lie on the face. p must be P(τ(f)).
Polynomial face_terms(const Polynomial& f, const NewtonPolyhedron& p, const Face& face);

// Indices of the variables on which the face's functional vanishes; the
// coordinate subspace they span is the locus of the face.
std::vector<std::size_t> face_locus(const Face& face);

}  // namespace multideal
