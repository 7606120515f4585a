#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cadprep/polynomial.hpp"

namespace cadprep::detail {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, Relation, Semicolon, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t column;  // 1-based
};

/// Words of the problem-file formula syntax; they end a polynomial and cannot name variables.
bool is_keyword(std::string_view word);

/// Splits one line of text; `column` is the column of text[0] in the source line.
std::vector<Token> tokenize(std::string_view text, std::size_t line, std::size_t column = 1);

/** Recursive-descent polynomial parser over a token vector, shared with the problem-file reader. */
class PolynomialParser {
 public:
  PolynomialParser(const ContextPtr& ctx, const std::vector<Token>& tokens, std::size_t line)
      : ctx_(ctx), tokens_(tokens), line_(line) {}

  Polynomial parse_expression();

  std::size_t position() const { return pos_; }
  void set_position(std::size_t pos) { pos_ = pos; }
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& t, const std::string& message) const;

 private:
  Polynomial parse_term();
  Polynomial parse_unary();
  Polynomial parse_power();
  Polynomial parse_primary();

  const ContextPtr& ctx_;
  const std::vector<Token>& tokens_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace cadprep::detail
