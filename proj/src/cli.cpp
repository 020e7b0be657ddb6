#include "multideal/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

#include "multideal/exprparse.hpp"
#include "multideal/multiplier.hpp"
#include "multideal/render.hpp"
#include "multideal/toric_oracle.hpp"

namespace multideal::cli {

namespace {

using nlohmann::json;

struct Request {
  std::string vars;
  std::string gens;
  std::string poly;
  std::string r;
  std::string bound;
  std::string mode = "strict";
  std::string format = "text";
  std::size_t max_reductions = GroebnerOptions{}.max_reductions;
};

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<std::string> variables_for(const Request& req, const std::string& text) {
  if (req.vars.empty()) {
    auto inferred = infer_variables(text);
    if (inferred.empty()) throw InvalidArgument("no variables declared or used; pass --vars");
    return inferred;
  }
  std::vector<std::string> vars;
  for (auto& v : split_top_level(req.vars)) {
    v.erase(std::remove_if(v.begin(), v.end(), [](unsigned char c) { return std::isspace(c); }), v.end());
    if (v.empty()) throw InvalidArgument("empty variable name in --vars");
    if (std::find(vars.begin(), vars.end(), v) != vars.end()) throw InvalidArgument("duplicate variable '" + v + "'");
    vars.push_back(v);
  }
  return vars;
}

MonomialIdeal parse_generators(const std::string& text, const std::vector<std::string>& vars) {
  std::vector<Exponent> gens;
  for (const auto& piece : split_top_level(text)) {
    Polynomial g = parse_polynomial(piece, vars);
    if (g.size() != 1) throw InvalidArgument("generator '" + piece + "' is not a nonzero monomial");
    gens.push_back(g.terms().begin()->first);
  }
  return minimalize(vars.size(), std::move(gens));
}

Mode parse_mode(const std::string& mode) {
  if (mode == "strict") return Mode::Strict;
  if (mode == "principal" || mode == "principal_part") return Mode::PrincipalPart;
  throw InvalidArgument("unknown mode '" + mode + "' (expected strict or principal)");
}

NondegOptions nondeg_options(const Request& req) {
  NondegOptions o;
  o.groebner.max_reductions = req.max_reductions;
  return o;
}

std::string jumps_text(const std::vector<Rational>& jumps) {
  if (jumps.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < jumps.size(); ++i) s += (i ? ", " : "") + to_string(jumps[i]);
  return s;
}

json jumps_json(const std::vector<Rational>& jumps) {
  json a = json::array();
  for (const auto& j : jumps) a.push_back(to_string(j));
  return a;
}

void emit(std::ostream& out, const Request& req, const json& j, const std::string& text) {
  if (req.format == "json")
    out << j.dump() << '\n';
  else
    out << text << '\n';
}

int cmd_monomial(const Request& req, std::ostream& out) {
  auto vars = variables_for(req, req.gens);
  MonomialIdeal a = parse_generators(req.gens, vars);
  Coefficient r(parse_rational(req.r));
  MonomialIdeal j = multiplier_monomial(a, r);
  json doc = to_json(j);
  doc["r"] = to_string(r.value());
  emit(out, req, doc, "J(" + to_string(r.value()) + " * " + to_string(a, vars) + ") = " + to_string(j, vars));
  return kOk;
}

int cmd_poly(const Request& req, std::ostream& out) {
  auto vars = variables_for(req, req.poly);
  Polynomial f = parse_polynomial(req.poly, vars);
  Coefficient r(parse_rational(req.r));
  FactoredIdeal j = multiplier_poly(f, r, parse_mode(req.mode), nondeg_options(req));
  json doc = to_json(j);
  doc["r"] = to_string(r.value());
  doc["mode"] = req.mode;
  emit(out, req, doc, "J(" + to_string(r.value()) + " * Div(" + to_string(f) + ")) = " + to_string(j));
  return kOk;
}

int cmd_classify(const Request& req, std::ostream& out) {
  auto vars = variables_for(req, req.poly);
  Polynomial f = parse_polynomial(req.poly, vars);
  NondegReport report = classify(f, nondeg_options(req));
  std::ostringstream text;
  text << "overall: " << to_string(report.overall) << '\n'
       << "principal part: " << to_string(report.principal_part) << '\n';
  for (const auto& fr : report.faces) {
    text << "  face dim " << fr.face.dim << (fr.face.compact ? " compact" : " noncompact") << " active [";
    for (std::size_t i = 0; i < fr.face.active.size(); ++i) text << (i ? "," : "") << fr.face.active[i];
    text << "] f_face = " << to_string(fr.restriction) << " : " << to_string(fr.verdict) << '\n';
  }
  std::string s = text.str();
  s.pop_back();
  emit(out, req, to_json(report), s);
  return kOk;
}

int cmd_lct(const Request& req, std::ostream& out) {
  if (req.gens.empty() == req.poly.empty()) throw InvalidArgument("lct takes exactly one of --gens or --f");
  const std::string& text = req.gens.empty() ? req.poly : req.gens;
  auto vars = variables_for(req, text);
  MonomialIdeal a = req.gens.empty() ? term_ideal(parse_polynomial(req.poly, vars)) : parse_generators(req.gens, vars);
  auto t = lct(a);
  std::string s = t ? to_string(*t) : "inf";
  emit(out, req, json{{"lct", s}}, "lct = " + s);
  return kOk;
}

int cmd_jumps(const Request& req, std::ostream& out) {
  if (req.gens.empty() == req.poly.empty()) throw InvalidArgument("jumps takes exactly one of --gens or --f");
  Rational bound = parse_rational(req.bound);
  std::vector<Rational> jumps;
  if (!req.gens.empty()) {
    auto vars = variables_for(req, req.gens);
    jumps = jumping_numbers(parse_generators(req.gens, vars), bound);
  } else {
    auto vars = variables_for(req, req.poly);
    jumps = jumping_numbers_poly(parse_polynomial(req.poly, vars), bound, parse_mode(req.mode), nondeg_options(req));
  }
  emit(out, req, json{{"bound", to_string(bound)}, {"jumps", jumps_json(jumps)}}, jumps_text(jumps));
  return kOk;
}

int cmd_oracle(const Request& req, std::ostream& out) {
  auto vars = variables_for(req, req.gens);
  MonomialIdeal a = parse_generators(req.gens, vars);
  auto fan = oracle::smooth_subdivision(a);
  auto data = oracle::divisor_data(a, fan);
  json doc{{"rays", to_json(data)}};
  std::ostringstream text;
  for (const auto& d : data)
    text << "ray (" << d.ray[0] << "," << d.ray[1] << ") order " << d.order << " discrepancy " << d.discrepancy
         << '\n';
  if (!req.r.empty()) {
    Coefficient r(parse_rational(req.r));
    MonomialIdeal j = oracle::multiplier_via_resolution(a, r);
    doc["r"] = to_string(r.value());
    doc["generators"] = j.generators();
    text << "J(" << to_string(r.value()) << " * " << to_string(a, vars) << ") = " << to_string(j, vars) << '\n';
  }
  std::string s = text.str();
  if (!s.empty()) s.pop_back();
  emit(out, req, doc, s);
  return kOk;
}

// Known answers for the worked examples; one line per check.
int cmd_selftest(const Request& req, std::ostream& out) {
  struct Check {
    std::string name;
    std::function<bool()> ok;
  };
  const std::vector<std::string> xy{"x", "y"};
  const std::vector<std::string> xyz{"x", "y", "z"};
  auto report = [&](const std::string& f) { return classify(parse_polynomial(f, xy)); };
  auto ideal = [](const std::string& gens, const std::vector<std::string>& vars) {
    return parse_generators(gens, vars);
  };
  std::vector<Check> checks{
      {"y^2-y*(x-1)^2 degenerate with nondegenerate principal part",
       [&] {
         auto r = report("y^2 - y*(x-1)^2");
         return r.overall == Verdict::Degenerate && r.principal_part == Verdict::Nondegenerate;
       }},
      {"(x*y-1)^9 degenerate only on the whole polyhedron",
       [&] {
         auto r = report("(x*y-1)^9");
         bool proper_ok = true;
         for (const auto& fr : r.faces)
           if (!fr.face.active.empty()) proper_ok &= fr.verdict == Verdict::Nondegenerate;
         return r.overall == Verdict::Degenerate && proper_ok;
       }},
      {"(x+y)^2-(x-y)^5 degenerate principal part",
       [&] { return report("(x+y)^2 - (x-y)^5").principal_part == Verdict::Degenerate; }},
      {"x^2+y^3 nondegenerate", [&] { return report("x^2 + y^3").overall == Verdict::Nondegenerate; }},
      {"J((x^3,y^3), 1) = (x,y)^2",
       [&] { return multiplier_monomial(ideal("x^3,y^3", xy), Coefficient(1)) == ideal("x^2,x*y,y^2", xy); }},
      {"J((x^3,y^3,z^3), 1) = (x,y,z)",
       [&] { return multiplier_monomial(ideal("x^3,y^3,z^3", xyz), Coefficient(1)) == ideal("x,y,z", xyz); }},
      {"lct(x^2,y^3) = 5/6", [&] { return lct(ideal("x^2,y^3", xy)) == Rational(5, 6); }},
      {"lct(x^3,y^3,z^3) = 1", [&] { return lct(ideal("x^3,y^3,z^3", xyz)) == Rational(1); }},
  };
  bool all = true;
  json results = json::array();
  std::ostringstream text;
  for (const auto& c : checks) {
    bool ok = false;
    try {
      ok = c.ok();
    } catch (const std::exception&) {
      ok = false;
    }
    all &= ok;
    results.push_back(json{{"name", c.name}, {"pass", ok}});
    text << (ok ? "PASS " : "FAIL ") << c.name << '\n';
  }
  std::string s = text.str();
  s.pop_back();
  emit(out, req, json{{"checks", results}, {"pass", all}}, s);
  return all ? kOk : kUsage;
}

void report_error(std::ostream& err, const Request& req, const std::string& code, const std::string& message,
                  const json& extra = json()) {
  if (req.format == "json") {
    json e{{"code", code}, {"message", message}};
    if (!extra.is_null()) e["witnesses"] = extra;
    err << json{{"error", e}}.dump() << '\n';
  } else {
    err << "error [" << code << "]: " << message << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Multiplier ideals of monomial ideals and nondegenerate polynomials", "mult"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", req.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_vars = [&](CLI::App* sub) {
    sub->add_option("--vars", req.vars, "Comma-separated variable names (default: order of first use)");
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--max-reductions", req.max_reductions, "Gröbner S-polynomial reduction cap");
  };

  auto* monomial = app.add_subcommand("monomial", "Multiplier ideal J(r·a) of a monomial ideal");
  add_vars(monomial);
  monomial->add_option("--gens", req.gens, "Comma-separated monomial generators")->required();
  monomial->add_option("--r", req.r, "Coefficient r as p/q")->required();
  add_format(monomial);

  auto* poly = app.add_subcommand("poly", "Multiplier ideal J(r·Div f) of a nondegenerate polynomial");
  add_vars(poly);
  poly->add_option("--f", req.poly, "Polynomial expression")->required();
  poly->add_option("--r", req.r, "Coefficient r as p/q")->required();
  poly->add_option("--mode", req.mode, "strict | principal");
  add_engine(poly);
  add_format(poly);

  auto* cls = app.add_subcommand("classify", "Face-by-face nondegeneracy report");
  add_vars(cls);
  cls->add_option("--f", req.poly, "Polynomial expression")->required();
  add_engine(cls);
  add_format(cls);

  auto* lct_cmd = app.add_subcommand("lct", "Log canonical threshold of a monomial ideal or of τ(f)");
  add_vars(lct_cmd);
  lct_cmd->add_option("--gens", req.gens, "Comma-separated monomial generators");
  lct_cmd->add_option("--f", req.poly, "Polynomial whose term ideal is used");
  add_format(lct_cmd);

  auto* jumps = app.add_subcommand("jumps", "Jumping numbers up to a bound");
  add_vars(jumps);
  jumps->add_option("--gens", req.gens, "Comma-separated monomial generators");
  jumps->add_option("--f", req.poly, "Nondegenerate polynomial");
  jumps->add_option("--bound", req.bound, "Upper bound as p/q")->required();
  jumps->add_option("--mode", req.mode, "strict | principal");
  add_engine(jumps);
  add_format(jumps);

  auto* orc = app.add_subcommand("oracle", "Smooth fan and divisor data of a two-variable monomial ideal");
  add_vars(orc);
  orc->add_option("--gens", req.gens, "Comma-separated monomial generators")->required();
  orc->add_option("--r", req.r, "Also compute J(r·a) through the resolution");
  add_format(orc);

  auto* self = app.add_subcommand("selftest", "Check the built-in worked examples");
  add_format(self);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, req, "usage", e.what());
    return kUsage;
  }

  try {
    if (monomial->parsed()) return cmd_monomial(req, out);
    if (poly->parsed()) return cmd_poly(req, out);
    if (cls->parsed()) return cmd_classify(req, out);
    if (lct_cmd->parsed()) return cmd_lct(req, out);
    if (jumps->parsed()) return cmd_jumps(req, out);
    if (orc->parsed()) return cmd_oracle(req, out);
    if (self->parsed()) return cmd_selftest(req, out);
  } catch (const DegenerateInput& e) {
    json w = json::array();
    for (const auto& fr : e.witnesses()) {
      json face = to_json(fr.face);
      face["restriction"] = to_string(fr.restriction);
      w.push_back(std::move(face));
    }
    report_error(err, req, e.code(), e.what(), w);
    return kDegenerate;
  } catch (const Inconclusive& e) {
    report_error(err, req, e.code(), e.what());
    return kInconclusive;
  } catch (const Error& e) {
    report_error(err, req, e.code(), e.what());
    return kUsage;
  }
  report_error(err, req, "usage", "no subcommand given");
  return kUsage;
}

}  // namespace multideal::cli
