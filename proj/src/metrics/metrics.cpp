#include "cadprep/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cadprep/errors.hpp"

namespace cadprep {

namespace {

std::uint64_t sotd_list(const std::vector<Polynomial>& ps) {
  std::uint64_t s = 0;
  for (const auto& p : ps) s += sotd(p);
  return s;
}

OrderingBlocks normalized_blocks(const ContextPtr& ctx, const OrderingBlocks& blocks) {
  if (blocks.empty()) return unconstrained(ctx);
  std::vector<bool> seen(ctx->size(), false);
  std::size_t count = 0;
  for (const auto& b : blocks) {
    for (Variable v : b) {
      require_variable(ctx, v);
      if (seen[v.index]) throw InvalidArgument("variable '" + ctx->name(v) + "' appears in two ordering blocks");
      seen[v.index] = true;
      ++count;
    }
  }
  if (count != ctx->size()) throw InvalidArgument("ordering blocks must cover every variable exactly once");
  return blocks;
}

std::vector<Variable> to_variables(const std::vector<std::uint32_t>& idx) {
  std::vector<Variable> out;
  for (auto i : idx) out.push_back(Variable{i});
  return out;
}

}  // namespace

std::uint64_t card_set(const ProjectionSet& A) {
  std::uint64_t c = 0;
  for (const auto& level : A.levels) c += level.size();
  return c;
}

std::uint64_t td_set(const ProjectionSet& A) {
  std::uint64_t s = 0;
  for (const auto& level : A.levels)
    for (const auto& p : level) s += total_degree(p);
  return s;
}

std::uint64_t sotd_set(const ProjectionSet& A) {
  std::uint64_t s = 0;
  for (const auto& level : A.levels) s += sotd_list(level);
  return s;
}

std::uint64_t tnoi(std::span<const Polynomial> F) {
  std::vector<Polynomial> distinct;
  std::uint64_t s = 0;
  for (const auto& f : F) {
    if (std::find(distinct.begin(), distinct.end(), f) != distinct.end()) continue;
    distinct.push_back(f);
    s += noi(f);
  }
  return s;
}

MetricsReport metrics_report(const ProjectionSet& A, std::span<const Polynomial> inputs) {
  MetricsReport r;
  r.card = card_set(A);
  r.td = td_set(A);
  r.sotd = sotd_set(A);
  r.tnoi_input = tnoi(inputs);
  for (std::size_t k = 0; k < A.levels.size(); ++k)
    r.per_level.push_back(LevelMetrics{A.levels.size() - k, A.levels[k].size(), sotd_list(A.levels[k])});
  return r;
}

OrderingBlocks unconstrained(const ContextPtr& ctx) {
  std::vector<Variable> all;
  for (std::uint32_t i = 0; i < ctx->size(); ++i) all.push_back(Variable{i});
  return {all};
}

bool is_admissible(const MonomialOrder& ord, const OrderingBlocks& blocks) {
  auto norm = normalized_blocks(ord.context(), blocks);
  std::size_t pos = 0;
  for (const auto& b : norm) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      Variable v = ord.precedence()[pos + k];
      if (std::find(b.begin(), b.end(), v) == b.end()) return false;
    }
    pos += b.size();
  }
  return true;
}

MonomialOrder greedy_order(std::span<const Polynomial> polys, const ContextPtr& ctx, const OrderingBlocks& blocks,
                           ProjectionOperator op, const Deadline& deadline) {
  if (polys.empty()) throw InvalidArgument("greedy ordering needs at least one polynomial");
  auto norm = normalized_blocks(ctx, blocks);
  std::vector<Polynomial> current = prepare_level(polys);
  std::vector<Variable> chosen;
  for (auto block : norm) {
    std::sort(block.begin(), block.end(), [](Variable a, Variable b) { return a.index < b.index; });
    while (!block.empty()) {
      if (chosen.size() + 1 == ctx->size()) {
        chosen.push_back(block.front());
        break;
      }
      std::size_t best = 0;
      std::uint64_t best_score = 0;
      std::vector<Polynomial> best_next;
      for (std::size_t c = 0; c < block.size(); ++c) {
        auto next = project_once(current, block[c], op, nullptr, deadline);
        std::uint64_t score = sotd_list(next);
        if (c == 0 || score < best_score) {
          best = c;
          best_score = score;
          best_next = std::move(next);
        }
      }
      chosen.push_back(block[best]);
      block.erase(block.begin() + static_cast<std::ptrdiff_t>(best));
      current = std::move(best_next);
    }
  }
  return MonomialOrder(ctx, chosen);
}

OrderScore best_order_exhaustive(std::span<const Polynomial> polys, const ContextPtr& ctx, const OrderingBlocks& blocks,
                                 ProjectionOperator op, bool allow_large, const Deadline& deadline) {
  if (polys.empty()) throw InvalidArgument("ordering search needs at least one polynomial");
  if (ctx->size() > 7 && !allow_large)
    throw InvalidArgument("exhaustive ordering search over more than 7 variables needs an explicit override");
  auto norm = normalized_blocks(ctx, blocks);

  std::vector<std::uint32_t> perm(ctx->size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::optional<OrderScore> best;
  do {
    MonomialOrder ord(ctx, to_variables(perm));
    if (!is_admissible(ord, norm)) continue;
    std::uint64_t s = sotd_set(project_all(polys, ord, op, deadline));
    if (!best || s < best->sotd) best = OrderScore{ord, s};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

double pearson(std::span<const double> X, std::span<const double> Y) {
  if (X.size() != Y.size()) throw InvalidArgument("correlation samples differ in length");
  if (X.size() < 2) throw InvalidArgument("correlation needs at least two samples");
  double n = static_cast<double>(X.size());
  double mx = std::accumulate(X.begin(), X.end(), 0.0) / n;
  double my = std::accumulate(Y.begin(), Y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    double dx = X[i] - mx, dy = Y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) throw UndefinedCorrelation("correlation undefined for a constant sample");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace cadprep
