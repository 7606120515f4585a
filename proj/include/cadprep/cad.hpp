#pragma once

#include <span>
#include <vector>

#include "cadprep/deadline.hpp"
#include "cadprep/formula.hpp"
#include "cadprep/projection.hpp"
#include "cadprep/sample_point.hpp"

namespace cadprep {

/** Real algebraic number: the only root of `defining` in (lo, hi), or the rational lo when lo == hi. */
struct AlgebraicNumber {
  Polynomial defining;
  Rational lo;
  Rational hi;

  bool is_rational() const { return lo == hi; }
};

/// Isolating intervals of the distinct real roots of a univariate polynomial, increasing.
std::vector<AlgebraicNumber> isolate_real_roots(const Polynomial& p);

struct Cell {
  /// Collins index: odd components are sectors, even components sections.
  std::vector<unsigned> index;
  /// Coordinates in lifting order, over CadTree::frame_context().
  SamplePoint sample;
  /// Signs at the sample of CadTree::stack_polynomials(index.size()).
  std::vector<int> signs;
  /// Leaves only: signs of CadTree::inputs() at the sample.
  std::vector<int> input_signs;
  std::vector<Cell> children;

  bool is_leaf() const { return children.empty(); }
  bool is_section() const { return index.back() % 2 == 0; }
  std::size_t dimension() const;
};

struct CadOptions {
  ProjectionOperator op = ProjectionOperator::McCallum;
  unsigned max_refine = 64;
  Deadline deadline;
};

/**
 * Full cylindrical algebraic decomposition, sign-invariant for the input
 * polynomials. Lifting starts at the lowest-precedence variable.
 */
class CadTree {
 public:
  const ProjectionSet& projection() const { return projection_; }
  const MonomialOrder& order() const { return projection_.order; }
  const std::vector<Polynomial>& inputs() const { return inputs_; }
  /// The stack over R^0, i.e. the decomposition of the lowest variable's line.
  const std::vector<Cell>& base() const { return base_; }
  std::size_t cell_count() const { return cell_count_; }
  std::size_t dimension() const { return frame_vars_.size(); }

  /// Context whose variable j is the j-th lifted variable (lowest precedence first).
  const ContextPtr& frame_context() const { return frame_; }
  /// Original variable of frame variable j.
  Variable lifting_variable(std::size_t j) const { return frame_vars_.at(j); }
  Polynomial to_frame(const Polynomial& p) const;
  /// Polynomials of A_k that involve the k-th lifted variable (1-based), in frame variables.
  const std::vector<Polynomial>& stack_polynomials(std::size_t k) const { return stack_polys_.at(k - 1); }

  std::vector<const Cell*> leaves() const;

 private:
  friend CadTree build_cad(std::span<const Polynomial>, const MonomialOrder&, const CadOptions&);

  ProjectionSet projection_;
  std::vector<Polynomial> inputs_;
  ContextPtr frame_;
  std::vector<Variable> frame_vars_;
  std::vector<Variable> to_frame_map_;
  std::vector<Polynomial> frame_inputs_;
  std::vector<std::vector<Polynomial>> stack_polys_;
  std::vector<Cell> base_;
  std::size_t cell_count_ = 0;
};

CadTree build_cad(std::span<const Polynomial> polys, const MonomialOrder& ord, const CadOptions& options = {});

struct FormulaEvaluation {
  std::vector<const Cell*> solution_cells;
  bool satisfiable = false;
  /// Set when a quantifier prefix was present: only the quantifier-free matrix was evaluated.
  bool prefix_unevaluated = false;
};

/**
 * Evaluates B on every leaf cell. Each polynomial of B must be a rational
 * multiple of one of the tree inputs.
 */
FormulaEvaluation evaluate_formula(const CadTree& tree, const Formula& B, bool has_quantifier_prefix = false);

}  // namespace cadprep
