#pragma once

#include <optional>
#include <vector>

#include "cadprep/polynomial.hpp"

namespace cadprep {

/// Quotient p / q when q divides p exactly in Q[vars], otherwise nullopt.
std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q);
/// As try_divide but throws InexactDivision.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);

/// Greatest common divisor normalized by Polynomial::integer_primitive (gcd(0,0) = 0).
Polynomial gcd(const Polynomial& p, const Polynomial& q);
/// Gcd of the coefficients of p with respect to v, normalized.
Polynomial content(const Polynomial& p, Variable v);
Polynomial primitive_part(const Polynomial& p, Variable v);
/// Product of the distinct irreducible factors of p, normalized.
Polynomial squarefree_part(const Polynomial& p);

/// Pseudo-remainder of f by g in v with multiplier lc_v(g)^(deg f - deg g + 1).
Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g, Variable v);

/**
 * Resultant with respect to v, equal to the determinant of the Sylvester
 * matrix (rows of p first). Computed with the subresultant remainder sequence.
 */
Polynomial resultant(const Polynomial& p, const Polynomial& q, Variable v);

/**
 * (-1)^(d(d-1)/2) * res_v(p, dp/dv) / lc_v(p) for d = deg_v p >= 2. Only the
 * zero set matters for projection; the sign matches the textbook b^2 - 4ac.
 */
Polynomial discriminant(const Polynomial& p, Variable v);

/// j-th principal subresultant coefficient of p and q in v (psc_0 = resultant).
Polynomial principal_subresultant_coefficient(const Polynomial& p, const Polynomial& q, Variable v, unsigned j);

/// Determinant by fraction-free Gaussian elimination; entries are polynomials.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m, const ContextPtr& ctx);

}  // namespace cadprep
