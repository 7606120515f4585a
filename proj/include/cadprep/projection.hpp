#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cadprep/deadline.hpp"
#include "cadprep/monomial_order.hpp"
#include "cadprep/polynomial.hpp"

namespace cadprep {

enum class ProjectionOperator { McCallum, Collins };

std::string_view to_string(ProjectionOperator op);
std::optional<ProjectionOperator> parse_projection_operator(std::string_view text);

/**
 * The family {A_n, ..., A_1}. levels[0] is A_n (all n variables), the last
 * entry is A_1 (lowest variable only).
 */
struct ProjectionSet {
  MonomialOrder order;
  std::vector<std::vector<Polynomial>> levels;

  /// A_i for 1 <= i <= n.
  const std::vector<Polynomial>& level(std::size_t i) const { return levels.at(levels.size() - i); }
};

/**
 * Drops constants and replaces every polynomial by the squarefree part of its
 * primitive part, then refines the set to pairwise coprime factors with
 * duplicates (up to scalars) merged. Output is sorted.
 */
std::vector<Polynomial> prepare_level(std::span<const Polynomial> polys);
/// As above, and also splits off the content of each polynomial with respect to its main variable under ord.
std::vector<Polynomial> prepare_level(std::span<const Polynomial> polys, const MonomialOrder& ord);

/**
 * One projection step eliminating v. Polynomials free of v pass through.
 * McCallum: non-constant coefficients, discriminants and pairwise resultants.
 * Collins: coefficients plus principal subresultant coefficients of all
 * reducta and pairs of reducta.
 */
std::vector<Polynomial> project_once(std::span<const Polynomial> A, Variable v,
                                     ProjectionOperator op = ProjectionOperator::McCallum,
                                     const MonomialOrder* ord = nullptr, const Deadline& deadline = {});

ProjectionSet project_all(std::span<const Polynomial> polys, const MonomialOrder& ord,
                          ProjectionOperator op = ProjectionOperator::McCallum, const Deadline& deadline = {});

}  // namespace cadprep
