#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cadprep/polynomial.hpp"

namespace cadprep {

enum class Ordering { Less, Equal, Greater };

/**
 * Purely lexicographical monomial order given by a variable precedence list,
 * highest first. The highest variable is the one eliminated first by a lex
 * Groebner basis and projected first by CAD.
 */
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(ContextPtr ctx, std::vector<Variable> precedence);

  /// Precedence equal to the context order: variable 0 highest.
  static MonomialOrder context_order(ContextPtr ctx);
  /// Parses "x > y > z" (or "x,y,z") against the context.
  static MonomialOrder parse(ContextPtr ctx, std::string_view text);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Variable>& precedence() const { return precedence_; }
  std::size_t size() const { return precedence_.size(); }
  Variable highest() const { return precedence_.front(); }
  Variable lowest() const { return precedence_.back(); }
  /// Position in the precedence list (0 = highest).
  std::size_t rank(Variable v) const;

  MonomialOrder reversed() const;
  Ordering compare(const Monomial& a, const Monomial& b) const;

  /// Highest-precedence variable that occurs in p, if any.
  std::optional<Variable> main_variable(const Polynomial& p) const;

  std::string to_string() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  ContextPtr ctx_;
  std::vector<Variable> precedence_;
  std::vector<std::size_t> rank_;
};

Ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

/// The ord-maximal term of p; throws ZeroPolynomialError for 0.
std::pair<Monomial, Rational> leading_monomial(const Polynomial& p, const MonomialOrder& ord);

}  // namespace cadprep
