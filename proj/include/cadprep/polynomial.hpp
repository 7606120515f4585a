#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cadprep {

using Rational = mpq_class;
using Integer = mpz_class;

Rational pow(const Rational& base, unsigned exponent);
int sign(const Rational& q);
std::string to_string(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/** A variable is an index into a VariableContext; names live in the context. */
struct Variable {
  std::uint32_t index = 0;
  friend auto operator<=>(Variable, Variable) = default;
};

class VariableContext;
using ContextPtr = std::shared_ptr<const VariableContext>;

/** Ordered, immutable list of variable names shared by every polynomial built over it. */
class VariableContext {
 public:
  static ContextPtr create(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Variable v) const;
  std::optional<Variable> find(std::string_view name) const;
  Variable at(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const VariableContext& a, const VariableContext& b) { return a.names_ == b.names_; }

 private:
  explicit VariableContext(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

bool same_context(const ContextPtr& a, const ContextPtr& b);
void require_same_context(const ContextPtr& a, const ContextPtr& b);
void require_variable(const ContextPtr& ctx, Variable v);
bool is_valid_variable_name(std::string_view name);

/**
 * Power product over a context, stored as a dense exponent vector indexed by
 * variable. The built-in ordering is lexicographic with variable 0 most
 * significant; Polynomial keeps its terms sorted by it.
 */
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  std::size_t variable_count() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b to divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

struct Term {
  Monomial monomial;
  Rational coeff;
  friend bool operator==(const Term& a, const Term& b) { return a.monomial == b.monomial && a.coeff == b.coeff; }
};

/**
 * Exact multivariate polynomial with rational coefficients.
 *
 * Terms are kept sorted in strictly decreasing monomial order with no zero
 * coefficients, so two equal polynomials have identical term vectors. Values
 * are immutable once built; every operation returns a new polynomial.
 */
class Polynomial {
 public:
  /// Zero polynomial without a context; adopts the context of the other operand in arithmetic.
  Polynomial() = default;
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  Polynomial(ContextPtr ctx, const Rational& constant);

  static Polynomial variable(ContextPtr ctx, Variable v, std::uint32_t exponent = 1);
  static Polynomial monomial(ContextPtr ctx, Monomial m, const Rational& coeff);
  /// Sorts and combines the given terms; zero coefficients are dropped.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);
  /// Builds sum(coeffs[i] * v^i); the coefficients must not contain v.
  static Polynomial from_coefficients(ContextPtr ctx, Variable v, std::span<const Polynomial> coeffs);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value (0 when absent).
  Rational constant_coefficient() const;
  const Term& leading_term() const;

  std::uint32_t degree(Variable v) const;
  bool contains(Variable v) const;
  std::vector<Variable> variables() const;

  /// Coefficients with respect to v: result[i] is the coefficient of v^i.
  std::vector<Polynomial> coefficients(Variable v) const;
  Polynomial leading_coefficient(Variable v) const;

  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned exponent) const;

  Polynomial derivative(Variable v) const;
  Polynomial substitute(const std::map<Variable, Rational>& bindings) const;
  Polynomial substitute(Variable v, const Rational& value) const;
  /// Every variable occurring in the polynomial must be bound.
  Rational evaluate(const std::map<Variable, Rational>& bindings) const;

  /// Rescaled so that the leading coefficient (built-in order) is 1.
  Polynomial monic() const;
  /// Rescaled to integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial integer_primitive() const;
  /// Scalar c with *this == c * integer_primitive().
  Rational integer_content() const;

  /// Re-expresses the polynomial over `target`; variable i of this context becomes map[i].
  Polynomial rename(ContextPtr target, std::span<const Variable> map) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Total order used to keep polynomial sets canonical; compares term lists.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(ContextPtr ctx, std::vector<Term> sorted_terms) : ctx_(std::move(ctx)), terms_(std::move(sorted_terms)) {}
  static ContextPtr merged_context(const Polynomial& a, const Polynomial& b);

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

/// Maximum total degree over the terms; throws ZeroPolynomialError for 0.
std::uint64_t total_degree(const Polynomial& p);
/// Sum of the total degrees of all terms; 0 for the zero polynomial.
std::uint64_t sotd(const Polynomial& p);
/// Number of distinct variables that occur in p.
std::size_t noi(const Polynomial& p);
Polynomial derivative(const Polynomial& p, Variable v);
Polynomial substitute(const Polynomial& p, const std::map<Variable, Rational>& bindings);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

enum class ArithOp { Add, Sub, Mul };
Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op);

}  // namespace cadprep
