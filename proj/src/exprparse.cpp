#include "multideal/exprparse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "multideal/error.hpp"

namespace multideal {

PolyExpr PolyExpr::var(std::size_t index) {
  PolyExpr e;
  e.kind = Kind::Variable;
  e.variable = index;
  return e;
}

PolyExpr PolyExpr::lit(Rational value) {
  PolyExpr e;
  e.kind = Kind::Literal;
  e.literal = std::move(value);
  e.literal.canonicalize();
  return e;
}

PolyExpr PolyExpr::sum(std::vector<PolyExpr> terms) {
  PolyExpr e;
  e.kind = Kind::Sum;
  e.args = std::move(terms);
  return e;
}

PolyExpr PolyExpr::product(std::vector<PolyExpr> factors) {
  PolyExpr e;
  e.kind = Kind::Product;
  e.args = std::move(factors);
  return e;
}

PolyExpr PolyExpr::power(PolyExpr base, unsigned long k) {
  PolyExpr e;
  e.kind = Kind::Power;
  e.exponent = k;
  e.args.push_back(std::move(base));
  return e;
}

PolyExpr PolyExpr::negate(PolyExpr operand) {
  PolyExpr e;
  e.kind = Kind::Negate;
  e.args.push_back(std::move(operand));
  return e;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& variables)
      : text_(text), variables_(variables) {}

  PolyExpr parse() {
    PolyExpr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& message, std::string code = "parse_error") const {
    throw ParseError(std::move(code), message, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyExpr expr() {
    std::vector<PolyExpr> terms;
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    PolyExpr first = term();
    terms.push_back(negative ? PolyExpr::negate(std::move(first)) : std::move(first));
    for (;;) {
      if (accept('+'))
        terms.push_back(term());
      else if (accept('-'))
        terms.push_back(PolyExpr::negate(term()));
      else
        break;
    }
    if (terms.size() == 1) return std::move(terms.front());
    return PolyExpr::sum(std::move(terms));
  }

  PolyExpr term() {
    std::vector<PolyExpr> factors;
    factors.push_back(factor());
    while (accept('*')) factors.push_back(factor());
    if (factors.size() == 1) return std::move(factors.front());
    return PolyExpr::product(std::move(factors));
  }

  PolyExpr factor() {
    PolyExpr b = base();
    if (!accept('^')) return b;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent", "bad_exponent");
    if (pos_ >= text_.size() || !digit(text_[pos_])) fail("exponent must be a nonnegative integer", "bad_exponent");
    std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/'))
      fail("exponent must be a nonnegative integer", "bad_exponent");
    if (digits.size() > 9) fail("exponent too large", "bad_exponent");
    return PolyExpr::power(std::move(b), std::stoul(digits));
  }

  PolyExpr base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PolyExpr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (digit(c)) return rational();
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(variables_.begin(), variables_.end(), name);
      if (it == variables_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'", "unknown_variable");
      }
      return PolyExpr::var(static_cast<std::size_t>(it - variables_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  PolyExpr rational() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    Integer num(std::string(text_.substr(start, pos_ - start)), 10);
    Integer den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
      if (dstart == pos_) fail("expected denominator");
      den = Integer(std::string(text_.substr(dstart, pos_ - dstart)), 10);
      if (den == 0) {
        pos_ = dstart;
        fail("zero denominator");
      }
    }
    if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported");
    Rational q(num, den);
    q.canonicalize();
    return PolyExpr::lit(std::move(q));
  }

  std::string_view text_;
  const std::vector<std::string>& variables_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse_expr(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

std::vector<std::string> infer_variables(std::string_view text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i]) && (i == 0 || !ident_char(text[i - 1]))) {
      std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(std::move(name));
    } else {
      ++i;
    }
  }
  return names;
}

Polynomial expand(const PolyExpr& e, const std::vector<std::string>& variables) {
  switch (e.kind) {
    case PolyExpr::Kind::Variable:
      return Polynomial::variable(variables, e.variable);
    case PolyExpr::Kind::Literal:
      return Polynomial::constant(variables, e.literal);
    case PolyExpr::Kind::Sum: {
      Polynomial total(variables);
      for (const auto& a : e.args) total += expand(a, variables);
      return total;
    }
    case PolyExpr::Kind::Product: {
      Polynomial total = Polynomial::constant(variables, 1);
      for (const auto& a : e.args) total *= expand(a, variables);
      return total;
    }
    case PolyExpr::Kind::Power:
      return expand(e.args.front(), variables).pow(e.exponent);
    case PolyExpr::Kind::Negate:
      return -expand(e.args.front(), variables);
  }
  return Polynomial(variables);
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return expand(parse_expr(text, variables), variables);
}

std::string unparse(const PolyExpr& e, const std::vector<std::string>& variables) {
  std::ostringstream out;
  switch (e.kind) {
    case PolyExpr::Kind::Variable:
      out << variables.at(e.variable);
      break;
    case PolyExpr::Kind::Literal:
      if (sgn(e.literal) < 0)
        out << "(-" << Rational(-e.literal).get_str() << ")";
      else
        out << e.literal.get_str();
      break;
    case PolyExpr::Kind::Sum:
      out << '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        const auto& a = e.args[i];
        if (a.kind == PolyExpr::Kind::Negate) {
          out << (i == 0 ? "-" : " - ") << unparse(a.args.front(), variables);
        } else {
          out << (i == 0 ? "" : " + ") << unparse(a, variables);
        }
      }
      out << ')';
      break;
    case PolyExpr::Kind::Product:
      out << '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) out << (i ? "*" : "") << unparse(e.args[i], variables);
      out << ')';
      break;
    case PolyExpr::Kind::Power:
      if (e.args.front().kind == PolyExpr::Kind::Power)
        out << '(' << unparse(e.args.front(), variables) << ')';
      else
        out << unparse(e.args.front(), variables);
      out << '^' << e.exponent;
      break;
    case PolyExpr::Kind::Negate:
      out << "(-" << unparse(e.args.front(), variables) << ')';
      break;
  }
  return out.str();
}

}  // namespace multideal
