#include "cadprep/poly_text.hpp"

#include <cctype>

#include "cadprep/detail/tokens.hpp"
#include "cadprep/errors.hpp"

namespace cadprep {
namespace detail {

namespace {
constexpr unsigned kMaxExponent = 100000;
}

bool is_keyword(std::string_view word) {
  return word == "and" || word == "or" || word == "not" || word == "in" || word == "true" || word == "false";
}

std::vector<Token> tokenize(std::string_view text, std::size_t line, std::size_t column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    std::size_t col = column + i;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({TokenKind::Number, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({TokenKind::Ident, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "<=" || two == ">=" || two == "!=" || two == "==") {
      out.push_back({TokenKind::Relation, two == "==" ? std::string("=") : std::string(two), col});
      i += 2;
      continue;
    }
    switch (c) {
      case '+': out.push_back({TokenKind::Plus, "+", col}); break;
      case '-': out.push_back({TokenKind::Minus, "-", col}); break;
      case '*': out.push_back({TokenKind::Star, "*", col}); break;
      case '/': out.push_back({TokenKind::Slash, "/", col}); break;
      case '^': out.push_back({TokenKind::Caret, "^", col}); break;
      case '(': out.push_back({TokenKind::LParen, "(", col}); break;
      case ')': out.push_back({TokenKind::RParen, ")", col}); break;
      case ';': out.push_back({TokenKind::Semicolon, ";", col}); break;
      case '[': out.push_back({TokenKind::LBracket, "[", col}); break;
      case ']': out.push_back({TokenKind::RBracket, "]", col}); break;
      case ',': out.push_back({TokenKind::Comma, ",", col}); break;
      case '<':
      case '>':
      case '=': out.push_back({TokenKind::Relation, std::string(1, c), col}); break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    ++i;
  }
  out.push_back({TokenKind::End, "", column + text.size()});
  return out;
}

void PolynomialParser::fail(const std::string& message) const { fail_at(peek(), message); }

void PolynomialParser::fail_at(const Token& t, const std::string& message) const {
  throw ParseError(message, line_, t.column);
}

Polynomial PolynomialParser::parse_expression() {
  Polynomial acc = parse_term();
  while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
    bool minus = next().kind == TokenKind::Minus;
    Polynomial rhs = parse_term();
    acc = minus ? acc - rhs : acc + rhs;
  }
  return acc;
}

Polynomial PolynomialParser::parse_term() {
  Polynomial acc = parse_unary();
  for (;;) {
    auto k = peek().kind;
    if (k == TokenKind::Star) {
      next();
      acc = acc * parse_unary();
    } else if (k == TokenKind::Ident && is_keyword(peek().text)) {
      return acc;
    } else if (k == TokenKind::Number || k == TokenKind::Ident || k == TokenKind::LParen) {
      fail("implicit multiplication is not allowed; use '*'");
    } else {
      return acc;
    }
  }
}

Polynomial PolynomialParser::parse_unary() {
  if (peek().kind == TokenKind::Minus) {
    next();
    return -parse_unary();
  }
  if (peek().kind == TokenKind::Plus) {
    next();
    return parse_unary();
  }
  return parse_power();
}

Polynomial PolynomialParser::parse_power() {
  Polynomial base = parse_primary();
  if (peek().kind != TokenKind::Caret) return base;
  next();
  const Token& e = peek();
  if (e.kind != TokenKind::Number) fail("exponent must be a nonnegative integer literal");
  next();
  if (e.text.size() > 6 || std::stoul(e.text) > kMaxExponent) fail_at(e, "exponent too large");
  if (peek().kind == TokenKind::Caret) fail("chained exponents are ambiguous; use parentheses");
  return base.pow(static_cast<unsigned>(std::stoul(e.text)));
}

Polynomial PolynomialParser::parse_primary() {
  const Token& t = peek();
  switch (t.kind) {
    case TokenKind::Number: {
      next();
      Integer num(t.text);
      if (peek().kind == TokenKind::Slash) {
        next();
        const Token& d = peek();
        if (d.kind != TokenKind::Number) fail("'/' is only allowed inside a rational literal such as 3/4");
        next();
        Integer den(d.text);
        if (den == 0) fail_at(d, "zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return Polynomial(ctx_, q);
      }
      return Polynomial(ctx_, Rational(num));
    }
    case TokenKind::Ident: {
      auto v = ctx_->find(t.text);
      if (!v) fail("unknown variable '" + t.text + "'");
      next();
      return Polynomial::variable(ctx_, *v);
    }
    case TokenKind::LParen: {
      next();
      Polynomial inner = parse_expression();
      if (peek().kind != TokenKind::RParen) fail("expected ')'");
      next();
      return inner;
    }
    case TokenKind::End: fail("unexpected end of expression");
    default: fail("unexpected token '" + t.text + "'");
  }
}

}  // namespace detail

Polynomial parse_polynomial(const ContextPtr& ctx, std::string_view text, std::size_t line, std::size_t column) {
  auto tokens = detail::tokenize(text, line, column);
  detail::PolynomialParser parser(ctx, tokens, line);
  Polynomial p = parser.parse_expression();
  if (parser.peek().kind != detail::TokenKind::End) parser.fail("unexpected token '" + parser.peek().text + "'");
  if (p.is_zero() && !p.context()) return Polynomial(ctx);
  return p;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& ctx = *p.context();
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational mag = abs(t.coeff);
    if (first) {
      if (t.coeff < 0) s += "-";
    } else {
      s += t.coeff < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::uint32_t i = 0; i < t.monomial.size(); ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx.name(Variable{i});
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += mono;
    } else {
      s += mag.get_str() + "*" + mono;
    }
  }
  return s;
}

std::string Polynomial::to_string() const { return format_polynomial(*this); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << format_polynomial(p); }

}  // namespace cadprep
