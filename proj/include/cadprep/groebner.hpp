#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cadprep/deadline.hpp"
#include "cadprep/monomial_order.hpp"
#include "cadprep/polynomial.hpp"

namespace cadprep {

/**
 * Lexicographic Groebner basis together with the order it was computed under.
 * Generators are sorted by leading monomial, largest first.
 */
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> generators, bool reduced);

  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool reduced() const { return reduced_; }
  bool empty() const { return generators_.empty(); }
  std::size_t size() const { return generators_.size(); }

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  bool reduced_ = false;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Reduced Groebner basis of the ideal generated by S; zero inputs are ignored.
GroebnerBasis buchberger(std::span<const Polynomial> S, const MonomialOrder& ord, const Deadline& deadline = {});

/// Full remainder of f on division by the generators of G under G's order.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
/// As above, but throws OrderMismatch unless ord is G's order.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, const MonomialOrder& ord);

/// Division by only those generators accepted by `usable`.
Polynomial restricted_normal_form(const Polynomial& f, const GroebnerBasis& G,
                                  const std::function<bool(const Polynomial&)>& usable);

bool is_member(const Polynomial& f, const GroebnerBasis& G);

}  // namespace cadprep
