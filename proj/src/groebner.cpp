#include "multideal/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "multideal/error.hpp"

namespace multideal {

namespace {

std::int64_t total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), std::int64_t{0}); }

struct Term {
  Exponent e;
  Integer c;
};

// Nonzero terms in strictly decreasing grevlex order.
using IPoly = std::vector<Term>;

bool grevlex_greater(const Exponent& a, const Exponent& b) { return grevlex_less(b, a); }

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent quotient(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Integer content(const IPoly& p) {
  Integer g = 0;
  for (const auto& t : p) {
    g = gcd(g, t.c);
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (sgn(p.front().c) < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

// a·p − b·x^shift·q
IPoly combine(const IPoly& p, const Integer& a, const IPoly& q, const Integer& b, const Exponent& shift) {
  IPoly out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  Exponent qe;
  auto shifted = [&](std::size_t k) {
    qe = q[k].e;
    for (std::size_t v = 0; v < qe.size(); ++v) qe[v] += shift[v];
    return qe;
  };
  if (!q.empty()) shifted(0);
  while (i < p.size() || j < q.size()) {
    if (j >= q.size() || (i < p.size() && grevlex_greater(p[i].e, qe))) {
      out.push_back(Term{p[i].e, a * p[i].c});
      ++i;
    } else if (i >= p.size() || grevlex_greater(qe, p[i].e)) {
      out.push_back(Term{qe, -b * q[j].c});
      if (++j < q.size()) shifted(j);
    } else {
      Integer c = a * p[i].c - b * q[j].c;
      if (sgn(c) != 0) out.push_back(Term{p[i].e, std::move(c)});
      ++i;
      if (++j < q.size()) shifted(j);
    }
  }
  return out;
}

IPoly to_ipoly(const Polynomial& f) {
  Integer den = 1;
  for (const auto& [e, c] : f.terms()) den = lcm(den, Integer(c.get_den()));
  IPoly p;
  for (const auto& [e, c] : f.terms()) {
    Rational scaled = c * den;
    p.push_back(Term{e, scaled.get_num()});
  }
  std::sort(p.begin(), p.end(), [](const Term& x, const Term& y) { return grevlex_greater(x.e, y.e); });
  make_primitive(p);
  return p;
}

Polynomial to_monic_polynomial(const IPoly& p, const std::vector<std::string>& vars) {
  Polynomial f(vars);
  if (p.empty()) return f;
  Rational lead(p.front().c);
  for (const auto& t : p) f.add_term(t.e, Rational(t.c) / lead);
  return f;
}

const IPoly* find_reducer(const Exponent& e, const std::vector<IPoly>& basis) {
  for (const auto& g : basis)
    if (divides(g.front().e, e)) return &g;
  return nullptr;
}

// Full reduction; the result is primitive with positive leading coefficient.
IPoly reduce(IPoly p, const std::vector<IPoly>& basis) {
  IPoly done;
  std::size_t steps = 0;
  while (!p.empty()) {
    const IPoly* g = find_reducer(p.front().e, basis);
    if (!g) {
      done.push_back(std::move(p.front()));
      p.erase(p.begin());
      continue;
    }
    const Integer& lg = g->front().c;
    Integer d = gcd(lg, p.front().c);
    Integer a = lg / d;
    Integer b = p.front().c / d;
    Exponent shift = quotient(p.front().e, g->front().e);
    p = combine(p, a, *g, b, shift);
    if (a != 1)
      for (auto& t : done) t.c *= a;
    if (++steps % 8 == 0) {
      Integer c = gcd(content(p), content(done));
      if (c > 1) {
        for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
      }
    }
  }
  make_primitive(done);
  return done;
}

IPoly spoly(const IPoly& f, const IPoly& g) {
  Exponent l = lcm(f.front().e, g.front().e);
  Integer d = gcd(f.front().c, g.front().c);
  Integer a = g.front().c / d;
  Integer b = f.front().c / d;
  // a·(l/lm f)·f − b·(l/lm g)·g
  IPoly fs;
  Exponent sf = quotient(l, f.front().e);
  fs.reserve(f.size());
  for (const auto& t : f) {
    Exponent e = t.e;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += sf[i];
    fs.push_back(Term{std::move(e), t.c});
  }
  IPoly s = combine(fs, a, g, b, quotient(l, g.front().e));
  make_primitive(s);
  return s;
}

bool is_constant(const IPoly& p) {
  return p.size() == 1 && std::all_of(p.front().e.begin(), p.front().e.end(), [](auto v) { return v == 0; });
}

}  // namespace

bool grevlex_less(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw DimensionMismatch("exponent vectors of different length");
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Exponent leading_exponent(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("leading exponent of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
    if (grevlex_less(best->first, it->first)) best = it;
  return best->first;
}

std::vector<Polynomial> partials(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(f.derivative(i));
  return out;
}

GroebnerResult buchberger(const std::vector<Polynomial>& system, const GroebnerOptions& options) {
  GroebnerResult result;
  std::vector<std::string> vars;
  std::vector<IPoly> basis;
  for (const auto& f : system) {
    if (vars.empty() && f.nvars() > 0) vars = f.variables();
    if (f.variables() != vars) throw DimensionMismatch("system polynomials over different variable lists");
    if (f.is_zero()) continue;
    IPoly p = reduce(to_ipoly(f), basis);
    if (p.empty()) continue;
    if (is_constant(p)) {
      result.basis = {Polynomial::constant(vars, 1)};
      return result;
    }
    basis.push_back(std::move(p));
  }

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);
  auto pending = [&](std::size_t i, std::size_t j) { return pairs.count({std::min(i, j), std::max(i, j)}) > 0; };

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first, ties by index.
    auto pick = pairs.begin();
    Exponent pick_lcm = lcm(basis[pick->first].front().e, basis[pick->second].front().e);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Exponent l = lcm(basis[it->first].front().e, basis[it->second].front().e);
      if (grevlex_less(l, pick_lcm)) {
        pick = it;
        pick_lcm = std::move(l);
      }
    }
    auto [i, j] = *pick;
    pairs.erase(pick);

    const Exponent& li = basis[i].front().e;
    const Exponent& lj = basis[j].front().e;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = divides(basis[k].front().e, pick_lcm) && !pending(i, k) && !pending(j, k);
    }
    if (chain) continue;

    if (result.reductions >= options.max_reductions) {
      result.complete = false;
      return result;
    }
    ++result.reductions;
    IPoly h = reduce(spoly(basis[i], basis[j]), basis);
    if (h.empty()) continue;
    if (is_constant(h)) {
      result.basis = {Polynomial::constant(vars, 1)};
      return result;
    }
    basis.push_back(std::move(h));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace(k, basis.size() - 1);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<IPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i || !divides(basis[k].front().e, basis[i].front().e)) continue;
      redundant = basis[k].front().e != basis[i].front().e || k < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const IPoly& a, const IPoly& b) { return grevlex_greater(a.front().e, b.front().e); });
  // Reduced basis: tail-reduce each element by the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<IPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    IPoly out{minimal[i].front()};
    IPoly rest(minimal[i].begin() + 1, minimal[i].end());
    // Reduce the tail, scaling the head by the same multipliers.
    IPoly done;
    Integer scale = 1;
    while (!rest.empty()) {
      const IPoly* g = find_reducer(rest.front().e, others);
      if (!g) {
        done.push_back(std::move(rest.front()));
        rest.erase(rest.begin());
        continue;
      }
      const Integer& lg = g->front().c;
      Integer d = gcd(lg, rest.front().c);
      Integer a = lg / d;
      Integer b = rest.front().c / d;
      Exponent shift = quotient(rest.front().e, g->front().e);
      rest = combine(rest, a, *g, b, shift);
      for (auto& t : done) t.c *= a;
      scale *= a;
    }
    out.front().c *= scale;
    out.insert(out.end(), done.begin(), done.end());
    make_primitive(out);
    minimal[i] = std::move(out);
  }
  for (const auto& g : minimal) result.basis.push_back(to_monic_polynomial(g, vars));
  return result;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  std::vector<std::pair<Exponent, const Polynomial*>> leads;
  for (const auto& g : divisors) {
    if (g.variables() != p.variables()) throw DimensionMismatch("divisor over a different variable list");
    if (!g.is_zero()) leads.emplace_back(leading_exponent(g), &g);
  }
  Polynomial rest = p;
  Polynomial remainder(p.variables());
  while (!rest.is_zero()) {
    Exponent lead = leading_exponent(rest);
    Rational lc = rest.terms().at(lead);
    auto it = std::find_if(leads.begin(), leads.end(), [&](const auto& l) { return divides(l.first, lead); });
    if (it == leads.end()) {
      remainder.add_term(lead, lc);
      rest.add_term(lead, -lc);
      continue;
    }
    const Polynomial& g = *it->second;
    Rational factor = lc / g.terms().at(it->first);
    rest -= Polynomial::monomial(p.variables(), quotient(lead, it->first), factor) * g;
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables()) throw DimensionMismatch("S-polynomial of polynomials over different rings");
  Exponent la = leading_exponent(a), lb = leading_exponent(b);
  Exponent l = lcm(la, lb);
  const auto& vars = a.variables();
  return Polynomial::monomial(vars, quotient(l, la), Rational(1) / a.terms().at(la)) * a -
         Polynomial::monomial(vars, quotient(l, lb), Rational(1) / b.terms().at(lb)) * b;
}

TorusZeros vanishes_on_torus(const std::vector<Polynomial>& system, const GroebnerOptions& options) {
  if (system.empty()) return TorusZeros::Somewhere;
  std::vector<std::string> vars = system.front().variables();
  const std::size_t n = vars.size();
  std::string aux = "t";
  while (std::find(vars.begin(), vars.end(), aux) != vars.end()) aux += "_";
  std::vector<std::string> ext = vars;
  ext.push_back(aux);

  std::vector<Polynomial> saturated;
  for (const auto& f : system) {
    if (f.variables() != vars) throw DimensionMismatch("system polynomials over different variable lists");
    Polynomial g(ext);
    for (const auto& [e, c] : f.terms()) {
      Exponent x = e;
      x.push_back(0);
      g.add_term(x, c);
    }
    saturated.push_back(std::move(g));
  }
  Polynomial rabinowitsch(ext);
  rabinowitsch.add_term(Exponent(n + 1, 1), 1);
  rabinowitsch.add_term(Exponent(n + 1, 0), -1);
  saturated.push_back(std::move(rabinowitsch));

  GroebnerResult gb = buchberger(saturated, options);
  if (!gb.complete) return TorusZeros::Inconclusive;
  bool unit = gb.basis.size() == 1 && gb.basis.front().is_constant();
  return unit ? TorusZeros::Nowhere : TorusZeros::Somewhere;
}

const char* to_string(TorusZeros z) {
  switch (z) {
    case TorusZeros::Somewhere: return "somewhere";
    case TorusZeros::Nowhere: return "nowhere";
    case TorusZeros::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace multideal
