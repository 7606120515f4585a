#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "cadprep/groebner.hpp"
#include "cadprep/sign_condition.hpp"

namespace cadprep {

enum class ReductionMode { MainVar, SecondaryVars, AllVars };

std::string_view to_string(ReductionMode m);

/**
 * rem(c^(d-e+1) f, g) with respect to v, where c = lc_v(g), d = deg_v f and
 * e = deg_v g. Returns f unchanged when d < e.
 */
Polynomial prem(const Polynomial& f, const Polynomial& g, Variable v);

struct SpremResult {
  Polynomial remainder;
  unsigned exponent = 0;
};

/// rem(c^m f, g) for the least m that keeps every division step exact.
SpremResult sprem(const Polynomial& f, const Polynomial& g, Variable v);

/// prem with the exponent rounded up to an even number, so that sign(f) is kept where g = 0 and c != 0.
Polynomial pprecond(const Polynomial& f, const Polynomial& g, Variable v);
/// sprem with the exponent rounded up to an even number.
Polynomial sprecond(const Polynomial& f, const Polynomial& g, Variable v);

/**
 * Reduces each constraint polynomial by G; the relation is kept.
 *
 * AllVars is the full normal form. MainVar only uses generators whose leading
 * monomial contains the highest variable of G's order, SecondaryVars only
 * those whose leading monomial does not.
 */
std::vector<SignCondition> reduce_inequalities(std::span<const SignCondition> F, const GroebnerBasis& G,
                                               ReductionMode mode);

/// The reduction applied by reduce_inequalities to a single polynomial.
Polynomial reduce_polynomial(const Polynomial& f, const GroebnerBasis& G, ReductionMode mode);

}  // namespace cadprep
