#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cadprep/sign_condition.hpp"

namespace cadprep {

/**
 * Boolean combination of sign conditions. Immutable; the builders fold
 * constants, so atoms over constant polynomials never survive construction.
 */
class Formula {
 public:
  enum class Kind { True, False, Atom, And, Or, Not };

  Formula() : Formula(constant(true)) {}

  static Formula constant(bool value);
  static Formula atom(SignCondition c);
  static Formula conjunction(std::vector<Formula> parts);
  static Formula disjunction(std::vector<Formula> parts);
  static Formula negation(const Formula& f);

  Kind kind() const { return node_->kind; }
  bool is_constant() const { return kind() == Kind::True || kind() == Kind::False; }
  const SignCondition& condition() const { return node_->atom; }
  const std::vector<Formula>& children() const { return node_->children; }

  /// Truth value given the sign of each atom polynomial.
  bool evaluate(const std::function<int(const Polynomial&)>& sign_of) const;
  /// Atoms in left-to-right order.
  std::vector<SignCondition> atoms() const;
  /// Distinct atom polynomials in order of first occurrence.
  std::vector<Polynomial> polynomials() const;
  /// Same structure with every atom polynomial replaced (constant results fold).
  Formula map(const std::function<Polynomial(const Polynomial&)>& fn) const;

  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    SignCondition atom;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind k, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

}  // namespace cadprep
