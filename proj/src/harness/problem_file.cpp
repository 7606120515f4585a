#include "cadprep/problem_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "cadprep/detail/tokens.hpp"
#include "cadprep/errors.hpp"
#include "cadprep/poly_text.hpp"

namespace cadprep {

namespace {

using detail::PolynomialParser;
using detail::Token;
using detail::TokenKind;

bool is_word(const Token& t, std::string_view w) { return t.kind == TokenKind::Ident && t.text == w; }

class FormulaParser {
 public:
  FormulaParser(const ContextPtr& ctx, const std::vector<Token>& tokens, std::size_t line) : p_(ctx, tokens, line) {}

  Formula parse_line() {
    Formula f = parse_or();
    if (p_.peek().kind != TokenKind::End) p_.fail("unexpected token '" + p_.peek().text + "'");
    return f;
  }

 private:
  Formula parse_or() {
    std::vector<Formula> parts{parse_and()};
    while (is_word(p_.peek(), "or")) {
      p_.next();
      parts.push_back(parse_and());
    }
    return parts.size() == 1 ? parts.front() : Formula::disjunction(std::move(parts));
  }

  Formula parse_and() {
    std::vector<Formula> parts{parse_unary()};
    while (is_word(p_.peek(), "and")) {
      p_.next();
      parts.push_back(parse_unary());
    }
    return parts.size() == 1 ? parts.front() : Formula::conjunction(std::move(parts));
  }

  Formula parse_unary() {
    const Token& t = p_.peek();
    if (is_word(t, "not")) {
      p_.next();
      return Formula::negation(parse_unary());
    }
    if (is_word(t, "true") || is_word(t, "false")) {
      p_.next();
      return Formula::constant(t.text == "true");
    }
    if (t.kind == TokenKind::LParen) {
      std::size_t start = p_.position();
      try {
        return parse_atom();
      } catch (const ParseError&) {
        p_.set_position(start);
      }
      p_.next();
      Formula inner = parse_or();
      if (p_.peek().kind != TokenKind::RParen) p_.fail("expected ')'");
      p_.next();
      return inner;
    }
    return parse_atom();
  }

  Formula parse_atom() {
    Polynomial lhs = p_.parse_expression();
    const Token& t = p_.peek();
    if (t.kind == TokenKind::Relation) {
      Relation rel = *parse_relation(t.text);
      p_.next();
      Polynomial rhs = p_.parse_expression();
      return Formula::atom(SignCondition{lhs - rhs, rel});
    }
    if (is_word(t, "in")) {
      p_.next();
      expect(TokenKind::LBracket, "'['");
      Polynomial lo = p_.parse_expression();
      expect(TokenKind::Comma, "','");
      Polynomial hi = p_.parse_expression();
      expect(TokenKind::RBracket, "']'");
      return Formula::conjunction(
          {Formula::atom(SignCondition{lhs - lo, Relation::Ge}), Formula::atom(SignCondition{lhs - hi, Relation::Le})});
    }
    p_.fail("expected a relation or 'in' after the polynomial");
  }

  void expect(TokenKind k, const std::string& what) {
    if (p_.peek().kind != k) p_.fail("expected " + what);
    p_.next();
  }

  PolynomialParser p_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  std::string_view text;
  std::size_t number;
  std::size_t column;  // of text[0]
};

enum class Section { None, Eqs, Constraints };

class ProblemReader {
 public:
  explicit ProblemReader(std::string id) { problem_.id = std::move(id); }

  void feed(std::string_view raw, std::size_t number) {
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    std::string_view body = trim(raw);
    if (body.empty()) return;

    if (auto colon = body.find(':'); colon != std::string_view::npos) {
      std::string_view key = trim(body.substr(0, colon));
      if (key == "name" || key == "vars" || key == "quantifiers" || key == "eqs" || key == "constraints") {
        std::size_t rest_offset = lead + colon + 1;
        std::string_view rest = raw.substr(rest_offset);
        std::size_t skip = 0;
        while (skip < rest.size() && std::isspace(static_cast<unsigned char>(rest[skip]))) ++skip;
        header(key, Line{trim(rest), number, rest_offset + skip + 1});
        return;
      }
    }
    item(Line{body, number, lead + 1});
  }

  Problem finish() {
    if (!problem_.context) throw ParseError("missing 'vars:' line", 1, 1);
    problem_.constraint = Formula::conjunction(std::move(constraints_));
    try {
      validate_problem(problem_);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), vars_line_, 1);
    }
    return std::move(problem_);
  }

 private:
  void header(std::string_view key, const Line& rest) {
    if (!seen_.insert(std::string(key)).second) throw ParseError("duplicate '" + std::string(key) + ":' section", rest.number, 1);
    section_ = Section::None;
    if (key == "name") {
      if (!rest.text.empty()) problem_.id = std::string(rest.text);
    } else if (key == "vars") {
      read_vars(rest);
    } else if (key == "quantifiers") {
      require_vars(rest);
      read_quantifiers(rest);
    } else {
      require_vars(rest);
      section_ = key == "eqs" ? Section::Eqs : Section::Constraints;
      if (!rest.text.empty()) item(rest);
    }
  }

  void item(const Line& l) {
    switch (section_) {
      case Section::None: throw ParseError("text outside of an 'eqs:' or 'constraints:' section", l.number, l.column);
      case Section::Eqs: {
        Polynomial e = parse_polynomial(problem_.context, l.text, l.number, l.column);
        if (e.is_zero()) throw ParseError("equation is identically zero", l.number, l.column);
        problem_.equations.push_back(std::move(e));
        break;
      }
      case Section::Constraints: {
        auto tokens = detail::tokenize(l.text, l.number, l.column);
        constraints_.push_back(FormulaParser(problem_.context, tokens, l.number).parse_line());
        break;
      }
    }
  }

  void require_vars(const Line& l) const {
    if (!problem_.context) throw ParseError("'vars:' must come first", l.number, 1);
  }

  void read_vars(const Line& l) {
    auto tokens = detail::tokenize(l.text, l.number, l.column);
    std::vector<std::string> names;
    for (std::size_t i = 0; tokens[i].kind != TokenKind::End; ++i) {
      const Token& t = tokens[i];
      if (i % 2 == 1) {
        if ((t.kind == TokenKind::Relation && t.text == ">") || t.kind == TokenKind::Comma) continue;
        throw ParseError("expected '>' between variables", l.number, t.column);
      }
      if (t.kind != TokenKind::Ident) throw ParseError("expected a variable name", l.number, t.column);
      if (detail::is_keyword(t.text)) throw ParseError("'" + t.text + "' is reserved", l.number, t.column);
      names.push_back(t.text);
    }
    if (names.empty()) throw ParseError("no variables declared", l.number, l.column);
    try {
      problem_.context = VariableContext::create(names);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), l.number, l.column);
    }
    problem_.declared_order = MonomialOrder::context_order(problem_.context);
    vars_line_ = l.number;
  }

  void read_quantifiers(const Line& l) {
    auto tokens = detail::tokenize(l.text, l.number, l.column);
    Quantifier current = Quantifier::Exists;
    bool open = false;
    for (const auto& t : tokens) {
      if (t.kind == TokenKind::End) break;
      if (t.kind == TokenKind::Semicolon) {
        open = false;
        continue;
      }
      if (t.kind == TokenKind::Comma) continue;
      if (t.kind != TokenKind::Ident) throw ParseError("unexpected token '" + t.text + "'", l.number, t.column);
      if (!open) {
        if (t.text == "exists") current = Quantifier::Exists;
        else if (t.text == "forall") current = Quantifier::Forall;
        else throw ParseError("expected 'exists' or 'forall'", l.number, t.column);
        open = true;
        continue;
      }
      auto v = problem_.context->find(t.text);
      if (!v) throw ParseError("unknown variable '" + t.text + "'", l.number, t.column);
      problem_.prefix.push_back(QuantifiedVariable{current, *v});
    }
  }

  Problem problem_;
  std::vector<Formula> constraints_;
  Section section_ = Section::None;
  std::set<std::string> seen_;
  std::size_t vars_line_ = 1;
};

}  // namespace

Problem parse_problem(std::string_view text, std::string id) {
  ProblemReader reader(std::move(id));
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    reader.feed(line, number);
  }
  return reader.finish();
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open problem file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str(), path.stem().string());
}

std::string format_problem(const Problem& p) {
  std::ostringstream out;
  if (!p.id.empty()) out << "name: " << p.id << "\n";
  out << "vars:";
  for (std::uint32_t i = 0; i < p.context->size(); ++i) out << (i ? " > " : " ") << p.context->name(Variable{i});
  out << "\n";
  if (!p.prefix.empty()) {
    out << "quantifiers:";
    for (std::size_t i = 0; i < p.prefix.size(); ++i)
      out << (i ? "; " : " ") << (p.prefix[i].quantifier == Quantifier::Exists ? "exists " : "forall ")
          << p.context->name(p.prefix[i].variable);
    out << "\n";
  }
  out << "eqs:\n";
  for (const auto& e : p.equations) out << "  " << format_polynomial(e) << "\n";
  out << "constraints:\n";
  if (p.constraint.kind() == Formula::Kind::And) {
    for (const auto& c : p.constraint.children()) out << "  " << c.to_string() << "\n";
  } else if (p.constraint.kind() != Formula::Kind::True) {
    out << "  " << p.constraint.to_string() << "\n";
  }
  return out.str();
}

}  // namespace cadprep
