#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cadprep/deadline.hpp"
#include "cadprep/formula.hpp"
#include "cadprep/groebner.hpp"
#include "cadprep/metrics.hpp"

namespace cadprep {

enum class Quantifier { Exists, Forall };

struct QuantifiedVariable {
  Quantifier quantifier;
  Variable variable;

  friend bool operator==(const QuantifiedVariable&, const QuantifiedVariable&) = default;
};

/** e_1 = 0 and ... and e_k = 0 and B, possibly under a quantifier prefix. */
struct Problem {
  std::string id;
  ContextPtr context;
  std::vector<Polynomial> equations;
  Formula constraint;
  std::vector<QuantifiedVariable> prefix;
  MonomialOrder declared_order;
};

/**
 * Checks nonzero equations, distinct prefix variables, and that the declared
 * order keeps each quantifier block contiguous. Throws InvalidArgument.
 */
void validate_problem(const Problem& p);

/// Consecutive quantifiers of one kind form a block; the free variables form the last block.
OrderingBlocks quantifier_blocks(const Problem& p);

/// The whole problem as one formula: every equation = 0, and the constraint.
Formula problem_formula(const Problem& p);
Formula problem_formula(const std::vector<Polynomial>& equations, const Formula& constraint);

enum class Direction { Compatible, Reverse };

GroebnerBasis precondition_basis(const Problem& p, Direction d, const Deadline& deadline = {});
/// Reduced lex basis of the equations under the declared order or its reverse.
std::vector<Polynomial> precondition_equalities(const Problem& p, Direction d, const Deadline& deadline = {});

enum class FormulationLabel { Original, GrC, GrR, GrCMainVar, GrCSecondaryVars, GrCAllVars };

std::string_view to_string(FormulationLabel l);
std::optional<FormulationLabel> parse_formulation_label(std::string_view text);
const std::vector<FormulationLabel>& all_formulation_labels();

struct Formulation {
  FormulationLabel label = FormulationLabel::Original;
  std::vector<Polynomial> equations;
  Formula constraint;
  /// The order the CAD is built under (always the declared order).
  MonomialOrder order_used;
  /// Order of the Groebner basis in `equations`, for the Gr variants.
  std::optional<MonomialOrder> groebner_order;
  std::uint64_t tnoi = 0;
  double gb_ms = 0;
  double reduce_ms = 0;
  /// Set when the variant could not be computed.
  std::optional<std::string> error;
  bool timed_out = false;

  bool failed() const { return error.has_value(); }
  /// Equations followed by the distinct constraint polynomials.
  std::vector<Polynomial> polynomials() const;
  Formula formula() const { return problem_formula(equations, constraint); }
};

/// One formulation; errors (including timeouts) are captured in Formulation::error.
Formulation make_formulation(const Problem& p, FormulationLabel label, const Deadline& deadline = {});

/// Original, and when there are equations also GrC, GrR and the three GrC reduction variants.
std::vector<Formulation> enumerate_variants(const Problem& p, const Deadline& deadline = {});

/// Least tnoi among the successful variants; ties favour Original, then the most reduced form (GrC+AllVars first, GrR last).
const Formulation& recommend(const std::vector<Formulation>& variants);

}  // namespace cadprep
