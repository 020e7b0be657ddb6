#include "multideal/multiplier.hpp"

#include <algorithm>
#include <set>

namespace multideal {

namespace {

using i128 = __int128;

struct IntFacet {
  std::vector<std::int64_t> normal;
  std::int64_t rhs;
};

std::int64_t checked_int64(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw LimitExceeded(std::string(what) + " exceeds 64-bit range");
  return z.get_si();
}

// Membership test for J(r·a): q·v·(m+1) > p·b for every facet, r = p/q.
class InteriorTest {
public:
  InteriorTest(const NewtonPolyhedron& p, const Rational& r)
      : num_(checked_int64(r.get_num(), "coefficient numerator")),
        den_(checked_int64(r.get_den(), "coefficient denominator")) {
    for (const auto& f : p.facets()) facets_.push_back(IntFacet{f.normal, f.rhs});
  }

  bool operator()(const std::vector<std::int64_t>& m) const {
    for (const auto& f : facets_) {
      i128 s = 0;
      for (std::size_t i = 0; i < m.size(); ++i) s += static_cast<i128>(f.normal[i]) * (m[i] + 1);
      if (!(static_cast<i128>(den_) * s > static_cast<i128>(num_) * f.rhs)) return false;
    }
    return true;
  }

private:
  std::int64_t num_, den_;
  std::vector<IntFacet> facets_;
};

// Minimal elements of an upward-closed subset of [0, box]^n given by a
// monotone predicate. For each point of the first n-1 coordinates the least
// admissible last coordinate is found by bisection.
template <class Pred>
std::vector<Exponent> minimal_elements(std::size_t n, std::int64_t box, const Pred& member) {
  const std::size_t outer = n - 1;
  const std::int64_t side = box + 1;
  std::size_t cells = 1;
  for (std::size_t i = 0; i < outer; ++i) {
    if (cells > 50'000'000 / static_cast<std::size_t>(side))
      throw LimitExceeded("multiplier ideal search box too large");
    cells *= static_cast<std::size_t>(side);
  }
  constexpr std::int64_t none = -1;
  std::vector<std::int64_t> height(cells, none);
  std::vector<Exponent> out;
  Exponent m(n, 0);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::size_t rest = cell;
    for (std::size_t i = 0; i < outer; ++i) {
      m[i] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(side));
      rest /= static_cast<std::size_t>(side);
    }
    m[n - 1] = box;
    if (!member(m)) continue;
    std::int64_t lo = 0, hi = box;  // member at hi
    while (lo < hi) {
      std::int64_t mid = lo + (hi - lo) / 2;
      m[n - 1] = mid;
      if (member(m))
        hi = mid;
      else
        lo = mid + 1;
    }
    height[cell] = hi;
    bool minimal = true;
    std::size_t stride = 1;
    for (std::size_t i = 0; i < outer && minimal; ++i) {
      if (m[i] > 0) {
        std::int64_t h = height[cell - stride];
        if (h != none && h <= hi) minimal = false;
      }
      stride *= static_cast<std::size_t>(side);
    }
    if (minimal) {
      m[n - 1] = hi;
      out.push_back(m);
    }
  }
  return out;
}

std::int64_t initial_box(const NewtonPolyhedron& p, const Rational& r) {
  // The starting guess r·(1 + largest vertex coordinate) …
  std::int64_t max_coord = 0;
  for (const auto& v : p.vertices())
    for (auto c : v) max_coord = std::max(max_coord, c);
  Integer guess = ceil(r * Rational(1 + max_coord)) + 1;
  // … raised to floor(r·b_max) + 1: once m_i + 1 > r·b for every facet,
  // each facet with v_i > 0 holds regardless of the other coordinates, so
  // no minimal generator has a coordinate above floor(r·b_max).
  std::int64_t b_max = 0;
  for (const auto& f : p.facets()) b_max = std::max(b_max, f.rhs);
  Integer sound = floor(r * Rational(b_max)) + 1;
  return checked_int64(std::max(guess, sound), "search box");
}

std::set<Rational> monomial_candidates(const NewtonPolyhedron& p, const Rational& bound) {
  // J(r·a) changes only where q·v·(m+1) = p·b for some facet, i.e. at w/b
  // with w ≥ v·(1,…,1) an integer.
  std::set<Rational> out;
  for (const auto& f : p.facets()) {
    if (f.rhs <= 0) continue;
    std::int64_t start = 0;
    for (auto v : f.normal) start += v;
    Integer last = floor(bound * Rational(f.rhs));
    for (Integer w = start; w <= last; ++w) {
      Rational c(w, f.rhs);
      c.canonicalize();
      out.insert(c);
    }
  }
  return out;
}

void require_nondegenerate(const NondegReport& report, Mode mode) {
  Verdict v = mode == Mode::Strict ? report.overall : report.principal_part;
  if (v == Verdict::Nondegenerate) return;
  if (v == Verdict::Inconclusive)
    throw Inconclusive("nondegeneracy could not be certified within the Gröbner resource cap");
  std::vector<FaceReport> witnesses;
  for (auto i : report.witnesses) {
    if (mode == Mode::PrincipalPart && !report.faces[i].face.compact) continue;
    witnesses.push_back(report.faces[i]);
  }
  throw DegenerateInput(mode == Mode::Strict ? "polynomial is degenerate"
                                             : "polynomial has degenerate principal part",
                        std::move(witnesses));
}

FactoredIdeal factored(const Polynomial& f, const NewtonPolyhedron& p, const Rational& r) {
  FactoredIdeal out;
  out.base = f;
  out.exponent = checked_int64(floor(r), "integer part of coefficient");
  Rational fractional = frac(r);
  out.monomial = sgn(fractional) == 0 ? MonomialIdeal::unit(f.nvars())
                                      : multiplier_monomial(p, Coefficient(fractional));
  return out;
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

}  // namespace

MonomialIdeal multiplier_monomial(const NewtonPolyhedron& p, const Coefficient& r, SearchStats& stats) {
  const std::size_t n = p.dimension();
  InteriorTest member(p, r.value());
  std::int64_t box = initial_box(p, r.value());
  stats = SearchStats{};
  for (;;) {
    MonomialIdeal j = minimalize(n, minimal_elements(n, box, member));
    bool touches = false;
    for (const auto& g : j.generators())
      for (auto c : g) touches |= c >= box;
    stats.box = box;
    if (!touches) return j;
    if (++stats.retries > 8) throw LimitExceeded("multiplier ideal search box did not stabilise");
    box *= 2;
  }
}

MonomialIdeal multiplier_monomial(const NewtonPolyhedron& p, const Coefficient& r) {
  SearchStats stats;
  return multiplier_monomial(p, r, stats);
}

MonomialIdeal multiplier_monomial(const MonomialIdeal& a, const Coefficient& r) {
  return multiplier_monomial(newton_polyhedron(a), r);
}

FactoredIdeal multiplier_poly(const Polynomial& f, const Coefficient& r, Mode mode, const NondegOptions& options) {
  NondegReport report = classify(f, options);
  require_nondegenerate(report, mode);
  return factored(f, report.polyhedron, r.value());
}

std::optional<Rational> lct(const MonomialIdeal& a) {
  NewtonPolyhedron p = newton_polyhedron(a);
  std::optional<Rational> best;
  for (const auto& f : p.facets()) {
    if (f.rhs <= 0) continue;
    std::int64_t s = 0;
    for (auto v : f.normal) s += v;
    Rational t(s, f.rhs);
    t.canonicalize();
    if (!best || t < *best) best = t;
  }
  return best;
}

std::vector<Rational> jumping_numbers(const MonomialIdeal& a, const Rational& bound) {
  if (a.is_zero()) throw ZeroIdeal("jumping numbers of the zero ideal");
  if (a.is_unit()) throw InvalidArgument("the unit ideal has no jumping numbers");
  if (sgn(bound) <= 0) throw InvalidArgument("bound must be positive");
  NewtonPolyhedron p = newton_polyhedron(a);
  std::vector<Rational> jumps;
  Rational prev = 0;
  for (const auto& c : monomial_candidates(p, bound)) {
    MonomialIdeal at = multiplier_monomial(p, Coefficient(c));
    MonomialIdeal below = multiplier_monomial(p, Coefficient(midpoint(prev, c)));
    if (at != below) jumps.push_back(c);
    prev = c;
  }
  return jumps;
}

std::vector<Rational> jumping_numbers_poly(const Polynomial& f, const Rational& bound, Mode mode,
                                           const NondegOptions& options) {
  if (sgn(bound) <= 0) throw InvalidArgument("bound must be positive");
  if (f.is_constant()) throw InvalidArgument("a constant polynomial defines no divisor");
  NondegReport report = classify(f, options);
  require_nondegenerate(report, mode);
  const NewtonPolyhedron& p = report.polyhedron;

  std::set<Rational> candidates;
  std::set<Rational> below_one;
  if (!p.ideal().is_unit())
    for (const auto& c : monomial_candidates(p, 1))
      if (c < 1) below_one.insert(c);
  for (Integer k = 0; k <= floor(bound); ++k) {
    if (k > 0) candidates.insert(Rational(k));
    for (const auto& c : below_one)
      if (c + k <= bound) candidates.insert(c + k);
  }

  std::vector<Rational> jumps;
  Rational prev = 0;
  for (const auto& c : candidates) {
    FactoredIdeal at = factored(f, p, c);
    FactoredIdeal below = factored(f, p, midpoint(prev, c));
    if (!same_ideal(at, below)) jumps.push_back(c);
    prev = c;
  }
  return jumps;
}

}  // namespace multideal
