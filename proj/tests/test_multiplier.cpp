#include <doctest.h>

#include <numeric>
#include <random>

#include "multideal/error.hpp"
#include "multideal/exprparse.hpp"
#include "multideal/multiplier.hpp"

using namespace multideal;

namespace {

const std::vector<std::string> xy{"x", "y"};

Polynomial P(const std::string& s) { return parse_polynomial(s, xy); }

MonomialIdeal I(std::size_t n, std::vector<Exponent> gens) { return minimalize(n, std::move(gens)); }

std::int64_t max_coord(const MonomialIdeal& a) {
  std::int64_t m = 0;
  for (const auto& g : a.generators())
    for (auto c : g) m = std::max(m, c);
  return m;
}

// Every nonzero weight w in [0, W]^n with W large enough to include all
// primitive facet normals of the Newton polyhedron.
std::vector<Exponent> weights(const MonomialIdeal& a) {
  std::size_t n = a.dimension();
  std::int64_t m = std::max<std::int64_t>(max_coord(a), 1);
  std::int64_t bound = n == 1 ? 1 : n == 2 ? m : 2 * m * m;
  std::vector<Exponent> out;
  Exponent w(n, 0);
  while (true) {
    std::size_t i = 0;
    while (i < n && w[i] == bound) w[i++] = 0;
    if (i == n) break;
    ++w[i];
    out.push_back(w);
  }
  return out;
}

// m ∈ J(r·a) iff w·(m+1) > r·min_g w·g for every weight.
bool brute_member(const MonomialIdeal& a, const std::vector<Exponent>& ws, const Rational& r, const Exponent& m) {
  for (const auto& w : ws) {
    std::int64_t lhs = 0, order = INT64_MAX;
    for (std::size_t i = 0; i < m.size(); ++i) lhs += w[i] * (m[i] + 1);
    for (const auto& g : a.generators()) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < g.size(); ++i) v += w[i] * g[i];
      order = std::min(order, v);
    }
    if (Rational(lhs) <= r * Rational(order)) return false;
  }
  return true;
}

MonomialIdeal brute_multiplier(const MonomialIdeal& a, const Rational& r) {
  auto ws = weights(a);
  std::size_t n = a.dimension();
  std::int64_t box = floor(r * Rational(n * max_coord(a))).get_si() + 2;
  std::vector<Exponent> members;
  Exponent m(n, 0);
  while (true) {
    if (brute_member(a, ws, r, m)) members.push_back(m);
    std::size_t i = 0;
    while (i < n && m[i] == box) m[i++] = 0;
    if (i == n) break;
    ++m[i];
  }
  return minimalize(n, members);
}

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n, int max_exp) {
  std::vector<Exponent> gens;
  int k = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int i = 0; i < k; ++i) {
    Exponent g(n);
    for (auto& c : g) c = std::uniform_int_distribution<int>(0, max_exp)(rng);
    gens.push_back(g);
  }
  // Keep the ideal proper.
  for (auto& g : gens)
    if (std::all_of(g.begin(), g.end(), [](auto c) { return c == 0; })) g[0] = 1;
  return minimalize(n, gens);
}

Rational random_r(std::mt19937& rng) {
  int q = std::uniform_int_distribution<int>(1, 12)(rng);
  int p = std::uniform_int_distribution<int>(1, 3 * q)(rng);
  return Rational(p, q);
}

}  // namespace

TEST_CASE("monomial examples") {
  MonomialIdeal a = I(2, {{3, 0}, {0, 3}});
  CHECK(multiplier_monomial(a, Coefficient(Rational(1))) == I(2, {{2, 0}, {1, 1}, {0, 2}}));
  MonomialIdeal b = I(2, {{2, 0}, {0, 3}});
  CHECK(multiplier_monomial(b, Coefficient(Rational(5, 6))) == I(2, {{1, 0}, {0, 1}}));
  CHECK(multiplier_monomial(b, Coefficient(Rational(4, 5))).is_unit());
  CHECK(multiplier_monomial(b, Coefficient(Rational(1))) == I(2, {{1, 0}, {0, 1}}));
  CHECK(multiplier_monomial(b, Coefficient(Rational(7, 6))) == I(2, {{1, 0}, {0, 2}}));
  MonomialIdeal x = I(1, {{1}});
  CHECK(multiplier_monomial(x, Coefficient(Rational(5, 2))) == I(1, {{2}}));
  CHECK(multiplier_monomial(MonomialIdeal::unit(2), Coefficient(Rational(7))).is_unit());
  CHECK_THROWS_AS(multiplier_monomial(MonomialIdeal::zero(2), Coefficient(Rational(1))), ZeroIdeal);
  CHECK_THROWS_AS(Coefficient(Rational(0)), InvalidArgument);
}

TEST_CASE("agreement with the weight scan") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = trial % 5 == 4 ? 3 : trial % 5 == 3 ? 1 : 2;
    MonomialIdeal a = random_ideal(rng, n, n == 3 ? 2 : 6);
    Rational r = random_r(rng);
    if (n == 3 && r > 2) r -= 1;
    SearchStats stats;
    MonomialIdeal got = multiplier_monomial(newton_polyhedron(a), Coefficient(r), stats);
    CHECK_MESSAGE(got == brute_multiplier(a, r), "trial " << trial << " r=" << to_string(r));
    CHECK(stats.retries == 0);
    // No generator touches the far side of the search box.
    for (const auto& g : got.generators())
      for (auto c : g) CHECK(c < stats.box);
  }
}

TEST_CASE("structural properties") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 1 + trial % 3;
    MonomialIdeal a = random_ideal(rng, n, 5);
    Rational r1 = random_r(rng), r2 = random_r(rng);
    if (r2 < r1) std::swap(r1, r2);
    MonomialIdeal j1 = multiplier_monomial(a, Coefficient(r1));
    MonomialIdeal j2 = multiplier_monomial(a, Coefficient(r2));
    CHECK(contains(j1, j2));
    CHECK(contains(multiplier_monomial(a, Coefficient(Rational(1))), a));
    auto c = lct(a);
    REQUIRE(c);
    CHECK(j1.is_unit() == (r1 < *c));
    CHECK_FALSE(multiplier_monomial(a, Coefficient(*c)).is_unit());
    // a·J((r−1)·a) ⊆ J(r·a).
    Rational r3 = r2 + 1;
    CHECK(contains(multiplier_monomial(a, Coefficient(r3)), product(a, j2)));
  }
}

TEST_CASE("log canonical thresholds") {
  CHECK(*lct(I(2, {{2, 0}, {0, 3}})) == Rational(5, 6));
  CHECK(*lct(I(2, {{1, 0}, {0, 1}})) == 2);
  CHECK(*lct(I(2, {{1, 1}})) == 1);
  CHECK(*lct(I(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 6}})) == 1);
  CHECK(*lct(I(1, {{4}})) == Rational(1, 4));
  CHECK_FALSE(lct(MonomialIdeal::unit(2)).has_value());
  CHECK_THROWS_AS(lct(MonomialIdeal::zero(2)), ZeroIdeal);
}

TEST_CASE("jumping numbers") {
  MonomialIdeal b = I(2, {{2, 0}, {0, 3}});
  auto jumps = jumping_numbers(b, Rational(3, 2));
  CHECK(jumps == std::vector<Rational>{Rational(5, 6), Rational(7, 6), Rational(4, 3), Rational(3, 2)});
  CHECK(jumping_numbers(b, Rational(1, 2)).empty());
  CHECK(jumping_numbers(I(1, {{1}}), Rational(3)) == std::vector<Rational>{1, 2, 3});
  CHECK_THROWS_AS(jumping_numbers(b, Rational(0)), InvalidArgument);
  CHECK_THROWS_AS(jumping_numbers(MonomialIdeal::unit(2), Rational(1)), InvalidArgument);
  CHECK_THROWS_AS(jumping_numbers(MonomialIdeal::zero(2), Rational(1)), ZeroIdeal);

  // Exactly the rationals (denominator ≤ 60) where the ideal drops.
  std::mt19937 rng(61);
  for (int trial = 0; trial < 12; ++trial) {
    MonomialIdeal a = random_ideal(rng, 2, 4);
    Rational bound(2);
    auto js = jumping_numbers(a, bound);
    std::vector<Rational> grid;
    for (int q = 1; q <= 60; ++q)
      for (int p = 1; p <= 2 * q; ++p)
        if (std::gcd(p, q) == 1) grid.push_back(Rational(p, q));
    std::sort(grid.begin(), grid.end());
    std::vector<Rational> drops;
    MonomialIdeal prev = MonomialIdeal::unit(2);
    for (const auto& r : grid) {
      MonomialIdeal cur = multiplier_monomial(a, Coefficient(r));
      if (cur != prev) drops.push_back(r);
      prev = cur;
    }
    // Facet right-hand sides are at most 32 here, so every jump lies on the grid.
    CHECK(drops == js);
  }
}

TEST_CASE("polynomial multiplier ideals") {
  Polynomial d = P("x^2 + y^3");
  FactoredIdeal j = multiplier_poly(d, Coefficient(Rational(5, 6)));
  CHECK(j.exponent == 0);
  CHECK(j.monomial == I(2, {{1, 0}, {0, 1}}));
  FactoredIdeal k = multiplier_poly(d, Coefficient(Rational(11, 6)));
  CHECK(k.exponent == 1);
  CHECK(k.monomial == I(2, {{1, 0}, {0, 1}}));
  CHECK(multiplier_poly(d, Coefficient(Rational(1, 2))).monomial.is_unit());

  Polynomial f = P("y^2 - y*(x-1)^2");
  CHECK_THROWS_AS(multiplier_poly(f, Coefficient(Rational(1, 2))), DegenerateInput);
  FactoredIdeal fp = multiplier_poly(f, Coefficient(Rational(1, 2)), Mode::PrincipalPart);
  CHECK(fp.monomial.is_unit());

  Polynomial h = P("(x+y)^2 - (x-y)^5");
  try {
    multiplier_poly(h, Coefficient(Rational(1)), Mode::PrincipalPart);
    FAIL("expected DegenerateInput");
  } catch (const DegenerateInput& e) {
    CHECK(e.code() == "degenerate_input");
    REQUIRE_FALSE(e.witnesses().empty());
    for (const auto& w : e.witnesses()) CHECK(w.face.compact);
  }

  NondegOptions capped;
  capped.groebner.max_reductions = 0;
  CHECK_THROWS_AS(multiplier_poly(P("x^2 + x*y + y^3"), Coefficient(Rational(1)), Mode::Strict, capped), Inconclusive);
}

TEST_CASE("polynomial jumping numbers") {
  CHECK(jumping_numbers_poly(P("x^2 + y^3"), Rational(2)) ==
        std::vector<Rational>{Rational(5, 6), 1, Rational(11, 6), 2});
  CHECK(jumping_numbers_poly(P("x + y"), Rational(3, 2)) == std::vector<Rational>{1});
  CHECK(jumping_numbers_poly(P("x^2 + y^3"), Rational(1, 2)).empty());
  CHECK(jumping_numbers_poly(P("x*y"), Rational(2)) == std::vector<Rational>{1, 2});
  CHECK_THROWS_AS(jumping_numbers_poly(P("3"), Rational(1)), InvalidArgument);
}
