#include <doctest.h>

#include <map>
#include <random>

#include "multideal/error.hpp"
#include "multideal/exprparse.hpp"

using namespace multideal;

namespace {

const std::vector<std::string> xy{"x", "y"};

using Kind = PolyExpr::Kind;

// Independent term-map arithmetic for the homomorphism checks.
using TermMap = std::map<Exponent, Rational>;

TermMap tm_add(TermMap a, const TermMap& b) {
  for (const auto& [e, c] : b) a[e] += c;
  for (auto it = a.begin(); it != a.end();) it = (it->second == 0) ? a.erase(it) : std::next(it);
  return a;
}

TermMap tm_mul(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return tm_add(out, {});
}

PolyExpr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
  switch (pick(rng)) {
    case 0: return PolyExpr::var(std::uniform_int_distribution<std::size_t>(0, 1)(rng));
    case 1: return PolyExpr::lit(Rational(std::uniform_int_distribution<int>(0, 7)(rng),
                                          std::uniform_int_distribution<int>(1, 3)(rng)));
    case 2: return PolyExpr::sum({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 3: return PolyExpr::product({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 4: return PolyExpr::power(random_expr(rng, depth - 1), std::uniform_int_distribution<int>(0, 3)(rng));
    default: return PolyExpr::negate(random_expr(rng, depth - 1));
  }
}

Polynomial random_polynomial(std::mt19937& rng, const std::vector<std::string>& vars) {
  Polynomial p(vars);
  int terms = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int t = 0; t < terms; ++t) {
    Exponent e(vars.size());
    for (auto& v : e) v = std::uniform_int_distribution<int>(0, 4)(rng);
    Rational c(std::uniform_int_distribution<int>(-9, 9)(rng), std::uniform_int_distribution<int>(1, 5)(rng));
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
  PolyExpr e = parse_expr("x^3 + y^3", xy);
  REQUIRE(e.kind == Kind::Sum);
  REQUIRE(e.args.size() == 2);
  CHECK(e.args[0] == PolyExpr::power(PolyExpr::var(0), 3));
  CHECK(e.args[1] == PolyExpr::power(PolyExpr::var(1), 3));

  PolyExpr h = parse_expr("(x+y)^2 - (x-y)^5", xy);
  REQUIRE(h.kind == Kind::Sum);
  CHECK(h.args[0].kind == Kind::Power);
  CHECK(h.args[0].exponent == 2);
  REQUIRE(h.args[1].kind == Kind::Negate);
  CHECK(h.args[1].args[0].kind == Kind::Power);
  CHECK(h.args[1].args[0].exponent == 5);

  PolyExpr f = parse_expr("y^2 - y*(x-1)^2", xy);
  REQUIRE(f.kind == Kind::Sum);
  REQUIRE(f.args[1].kind == Kind::Negate);
  CHECK(f.args[1].args[0].kind == Kind::Product);
}

TEST_CASE("expand") {
  Polynomial p = parse_polynomial("x^3 + y^3", xy);
  CHECK(p.terms() == Polynomial::TermMap{{{3, 0}, 1}, {{0, 3}, 1}});

  // y^2 - y(x^2 - 2x + 1) by hand.
  Polynomial f = parse_polynomial("y^2 - y*(x-1)^2", xy);
  CHECK(f.terms() == Polynomial::TermMap{{{0, 2}, 1}, {{2, 1}, -1}, {{1, 1}, 2}, {{0, 1}, -1}});

  CHECK(parse_polynomial("(x+y)^2", xy).terms() == Polynomial::TermMap{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}});
  CHECK(parse_polynomial("3/6*x - 1/2*x", xy).is_zero());
  CHECK(parse_polynomial("(x*y-1)^9", xy).terms().at({0, 0}) == -1);
  CHECK(parse_polynomial("x^0", xy) == Polynomial::constant(xy, 1));
}

TEST_CASE("parse errors carry codes and positions") {
  auto code_of = [](const std::string& text) -> std::string {
    try {
      parse_expr(text, xy);
    } catch (const ParseError& e) {
      return e.code() + "@" + std::to_string(e.position());
    }
    return "ok";
  };
  CHECK(code_of("x + z") == "unknown_variable@4");
  CHECK(code_of("x^-1") == "bad_exponent@2");
  CHECK(code_of("x^1/2") == "bad_exponent@3");
  CHECK(code_of("x^1.5") == "bad_exponent@3");
  CHECK(code_of("x y") == "parse_error@2");
  CHECK(code_of("(x+y") == "parse_error@4");
  CHECK(code_of("x +") == "parse_error@3");
  CHECK(code_of("1/0") == "parse_error@2");
  CHECK(code_of("2.5*x") == "parse_error@1");
  CHECK(code_of("x^y") == "bad_exponent@2");
  CHECK(code_of(" - x*y + 1/3 ") == "ok");
}

TEST_CASE("variables are inferred in order of first use") {
  CHECK(infer_variables("y^2 - y*(x-1)^2") == std::vector<std::string>{"y", "x"});
  CHECK(infer_variables("a1*b_2 + a1") == std::vector<std::string>{"a1", "b_2"});
  CHECK(infer_variables("3/4").empty());
}

TEST_CASE("rendered polynomials parse back to themselves") {
  std::mt19937 rng(7);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial p = random_polynomial(rng, vars);
    CHECK(parse_polynomial(to_string(p), vars) == p);
  }
}

TEST_CASE("unparse round-trips the tree") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    PolyExpr e = random_expr(rng, 4);
    std::string text = unparse(e, xy);
    PolyExpr back = parse_expr(text, xy);
    CHECK_MESSAGE(expand(back, xy) == expand(e, xy), text);
  }
  for (std::string text : {"x^3 + y^3", "(x+y)^2 - (x-y)^5", "y^2 - y*(x-1)^2", "-(x*y-1/3)^4"}) {
    PolyExpr e = parse_expr(text, xy);
    CHECK(parse_expr(unparse(e, xy), xy) == e);
  }
}

TEST_CASE("expand is a ring homomorphism") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    PolyExpr a = random_expr(rng, 3), b = random_expr(rng, 3);
    TermMap ea = expand(a, xy).terms(), eb = expand(b, xy).terms();
    CHECK(expand(PolyExpr::product({a, b}), xy).terms() == tm_mul(ea, eb));
    CHECK(expand(PolyExpr::sum({a, b}), xy).terms() == tm_add(ea, eb));
  }
}

TEST_CASE("(x-1)^k vanishes at x = 1") {
  const std::vector<std::string> x{"x"};
  for (unsigned k = 1; k <= 25; ++k) {
    Polynomial p = parse_polynomial("(x-1)^" + std::to_string(k), x);
    std::vector<Rational> one{Rational(1)};
    CHECK(p.evaluate(one) == 0);
    CHECK(p.size() == k + 1);
  }
}
