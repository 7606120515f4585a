#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cadprep/deadline.hpp"
#include "cadprep/projection.hpp"

namespace cadprep {

std::uint64_t card_set(const ProjectionSet& A);
std::uint64_t td_set(const ProjectionSet& A);
std::uint64_t sotd_set(const ProjectionSet& A);

/// Sum of noi over the distinct polynomials of F.
std::uint64_t tnoi(std::span<const Polynomial> F);

struct LevelMetrics {
  std::size_t level = 0;
  std::uint64_t card = 0;
  std::uint64_t sotd = 0;
};

struct MetricsReport {
  std::uint64_t card = 0;
  std::uint64_t td = 0;
  std::uint64_t sotd = 0;
  std::uint64_t tnoi_input = 0;
  /// From A_n down to A_1.
  std::vector<LevelMetrics> per_level;
};

MetricsReport metrics_report(const ProjectionSet& A, std::span<const Polynomial> inputs);

/**
 * Admissible orderings: an ordered list of variable blocks, highest first.
 * A precedence list is admissible when it lists the first block (in any
 * order), then the second, and so on. An empty list means no constraint.
 */
using OrderingBlocks = std::vector<std::vector<Variable>>;

/// Quantifier-free blocks for a context: a single block of every variable.
OrderingBlocks unconstrained(const ContextPtr& ctx);
bool is_admissible(const MonomialOrder& ord, const OrderingBlocks& blocks);

/**
 * Picks projection variables one at a time, each minimizing the sotd of the
 * next projection level. Ties go to the lowest context index.
 */
MonomialOrder greedy_order(std::span<const Polynomial> polys, const ContextPtr& ctx, const OrderingBlocks& blocks = {},
                           ProjectionOperator op = ProjectionOperator::McCallum, const Deadline& deadline = {});

struct OrderScore {
  MonomialOrder order;
  std::uint64_t sotd = 0;
};

/**
 * Full projection under every admissible order; the minimal sotd wins, ties
 * going to the lexicographically smallest permutation of context indices.
 * More than 7 variables require allow_large.
 */
OrderScore best_order_exhaustive(std::span<const Polynomial> polys, const ContextPtr& ctx,
                                 const OrderingBlocks& blocks = {}, ProjectionOperator op = ProjectionOperator::McCallum,
                                 bool allow_large = false, const Deadline& deadline = {});

/// Sample correlation coefficient.
double pearson(std::span<const double> X, std::span<const double> Y);

}  // namespace cadprep
