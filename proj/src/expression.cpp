#include "cosserat/expression.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace cosserat {

namespace {

using Fn = std::function<double(double, double)>;

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression error at position " + std::to_string(pos) + ": " +
                                what + " in \"" + text + "\"");
  }

  Fn parse() {
    Fn e = expr();
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");
    return e;
  }

  Fn expr() {
    Fn lhs = term();
    for (;;) {
      if (consume('+')) {
        Fn rhs = term();
        lhs = [lhs, rhs](double a, double b) { return lhs(a, b) + rhs(a, b); };
      } else if (consume('-')) {
        Fn rhs = term();
        lhs = [lhs, rhs](double a, double b) { return lhs(a, b) - rhs(a, b); };
      } else {
        return lhs;
      }
    }
  }

  Fn term() {
    Fn lhs = factor();
    for (;;) {
      if (consume('*')) {
        Fn rhs = factor();
        lhs = [lhs, rhs](double a, double b) { return lhs(a, b) * rhs(a, b); };
      } else if (consume('/')) {
        Fn rhs = factor();
        lhs = [lhs, rhs](double a, double b) { return lhs(a, b) / rhs(a, b); };
      } else {
        return lhs;
      }
    }
  }

  Fn factor() {
    Fn base = unary();
    if (consume('^')) {
      Fn e = factor();  // right associative
      return [base, e](double a, double b) { return std::pow(base(a, b), e(a, b)); };
    }
    return base;
  }

  Fn unary() {
    if (consume('-')) {
      Fn e = unary();
      return [e](double a, double b) { return -e(a, b); };
    }
    return primary();
  }

  Fn primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      Fn e = expr();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected character");
  }

  Fn number() {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(text.substr(pos), &used);
    } catch (const std::exception&) {
      fail("malformed number");
    }
    pos += used;
    return [v](double, double) { return v; };
  }

  Fn identifier() {
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_')) {
      ++pos;
    }
    const std::string name = text.substr(start, pos - start);
    if (name == "x1" || name == "x") return [](double a, double) { return a; };
    if (name == "x2" || name == "y") return [](double, double b) { return b; };
    if (name == "pi") return [](double, double) { return M_PI; };

    static const std::map<std::string, double (*)(double)> funcs = {
        {"sin", std::sin}, {"cos", std::cos},   {"tan", std::tan}, {"exp", std::exp},
        {"log", std::log}, {"sqrt", std::sqrt}, {"abs", std::fabs}};
    auto it = funcs.find(name);
    if (it == funcs.end()) fail("unknown identifier '" + name + "'");
    if (!consume('(')) fail("expected '(' after function name");
    Fn arg = expr();
    if (!consume(')')) fail("expected ')'");
    auto f = it->second;
    return [f, arg](double a, double b) { return f(arg(a, b)); };
  }
};

}  // namespace

std::function<double(double, double)> parse_expression(const std::string& text) {
  Parser p(text);
  return p.parse();
}

}  // namespace cosserat
