#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "cadprep/cad.hpp"
#include "cadprep/poly_algorithms.hpp"
#include "support.hpp"

namespace testing {

using cadprep::CadTree;
using cadprep::Cell;
using cadprep::Interval;
using cadprep::SamplePoint;

inline Dense multiply(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Dense quotient(Dense a, const Dense& b) {
  if (a.size() < b.size()) return {};
  Dense q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

/// Squarefree part with its Sturm sequence, for root counting at arbitrary points.
struct SturmChain {
  Dense p;
  std::vector<Dense> seq;

  explicit SturmChain(const Dense& f) {
    auto full = sturm(f);
    p = full.back().size() > 1 ? quotient(f, full.back()) : f;
    seq = sturm(p);
  }
  int count(const Rational& lo, const Rational& hi) const { return variations(seq, lo) - variations(seq, hi); }
};

// A real root held either exactly or inside an open interval (a, b) whose
// endpoints are not roots.
struct Root {
  std::optional<Rational> exact;
  Rational a, b;
  Rational left() const { return exact ? *exact : a; }
  Rational right() const { return exact ? *exact : b; }
};

inline void bisect(const SturmChain& c, Root& r) {
  Rational mid = (r.a + r.b) / 2;
  if (eval(c.p, mid) == 0) {
    r.exact = mid;
  } else if (c.count(r.a, mid) == 1) {
    r.b = mid;
  } else {
    r.a = mid;
  }
}

inline std::vector<Root> oracle_roots(const Dense& f) {
  std::vector<Root> out;
  if (f.size() < 2) return out;
  SturmChain c(f);
  const Dense& p = c.p;
  Rational bound = 1;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational r = abs(p[i] / p.back());
    if (r + 1 > bound) bound = r + 1;
  }
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  std::vector<std::pair<Rational, Rational>> found;
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int n = c.count(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      found.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(found.begin(), found.end());
  for (auto& [lo, hi] : found) {
    Root r{std::nullopt, lo, hi};
    if (eval(p, hi) == 0) r.exact = hi;
    out.push_back(r);
  }
  // Separate neighbours so every gap between consecutive roots is open.
  for (std::size_t k = 0; k + 1 < out.size(); ++k) {
    while (!(out[k].right() < out[k + 1].left())) {
      if (!out[k].exact)
        bisect(c, out[k]);
      else
        bisect(c, out[k + 1]);
    }
  }
  return out;
}

inline Rational floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

/// A rational with small denominator strictly between lo and hi (lo < hi); no upper bound when hi is empty.
inline Rational simple_between(const Rational& lo, const std::optional<Rational>& hi) {
  Rational f = floor_of(lo);
  if (!hi || f + 1 < *hi) return f + 1;
  // lo and hi share the integer part f.
  std::optional<Rational> inv_hi;
  if (lo != f) inv_hi = 1 / (lo - f);
  return f + 1 / simple_between(1 / (*hi - f), inv_hi);
}

// Random point of (lo, hi) with a small denominator.
inline Rational random_between(const Rational& lo, const Rational& hi, Gen& g) {
  Rational w = (hi - lo) / 32;
  Rational centre = lo + (hi - lo) * Q(g.integer(2, 30), 32);
  return simple_between(centre - w, centre + w);
}

// Random rational in sector `idx` (odd, 1-based) or at section `idx` (even) of
// the roots; nullopt when the section is not known to be rational. Roots of
// linear factors, and rational coordinates proposed by the decomposition, are
// accepted once the oracle confirms them.
inline std::optional<Rational> pick(const Dense& p, std::vector<Root>& roots, const std::vector<Rational>& linear_roots,
                                    const Cell& cell, Gen& g) {
  unsigned idx = cell.index.back();
  if (idx % 2 == 0) {
    Root& r = roots.at(idx / 2 - 1);
    if (r.exact) return r.exact;
    for (const auto& q : linear_roots)
      if (r.a < q && q < r.b) return q;
    const auto& c = cell.sample.coordinate(cell.index.size() - 1);
    if (c.is_rational() && eval(p, *c.value) == 0 && r.a < *c.value && *c.value < r.b) return *c.value;
    return std::nullopt;
  }
  std::size_t k = idx / 2;
  if (roots.empty()) return g.rational();
  if (k == 0) return random_between(roots.front().left() - 4, roots.front().left(), g);
  if (k == roots.size()) return random_between(roots.back().right(), roots.back().right() + 4, g);
  return random_between(roots[k - 1].right(), roots[k].left(), g);
}

struct SignCheck {
  int points = 0;
  int skipped = 0;
  int root_count_mismatches = 0;
  int sign_mismatches = 0;

  bool passed() const { return root_count_mismatches == 0 && sign_mismatches == 0; }
};

// Draws `per_cell` random points in each leaf whose sections are rational and
// compares the input signs with the leaf's recorded signs. The roots of each
// stack come from Sturm sequences, independently of the library.
inline void check_sign_invariance(const CadTree& tree, Gen& g, int per_cell, SignCheck& out) {
  std::size_t n = tree.dimension();
  std::vector<const Cell*> path;
  std::vector<std::size_t> sizes;
  std::function<void(const std::vector<Cell>&)> walk = [&](const std::vector<Cell>& stack) {
    for (const auto& cell : stack) {
      path.push_back(&cell);
      sizes.push_back(stack.size());
      if (cell.is_leaf()) {
        for (int s = 0; s < per_cell; ++s) {
          std::map<Variable, Rational> frame_pt;
          bool ok = true;
          for (std::size_t k = 0; k < n; ++k) {
            Variable v{static_cast<std::uint32_t>(k)};
            Dense prod{Rational(1)};
            std::vector<Rational> linear_roots;
            for (const auto& q : tree.stack_polynomials(k + 1)) {
              Polynomial r = cadprep::substitute(q, frame_pt);
              if (r.is_zero()) continue;
              Dense d = dense(r, v);
              if (d.size() == 2) linear_roots.push_back(-d[0] / d[1]);
              prod = multiply(prod, d);
            }
            auto roots = oracle_roots(prod);
            if (2 * roots.size() + 1 != sizes[k]) ++out.root_count_mismatches;
            auto t = pick(prod, roots, linear_roots, *path[k], g);
            if (!t) {
              ok = false;
              break;
            }
            frame_pt[v] = *t;
          }
          if (!ok) {
            ++out.skipped;
            break;
          }
          std::map<Variable, Rational> pt;
          for (std::size_t k = 0; k < n; ++k) pt[tree.lifting_variable(k)] = frame_pt[Variable{static_cast<std::uint32_t>(k)}];
          for (std::size_t i = 0; i < tree.inputs().size(); ++i)
            if (sgn(tree.inputs()[i].evaluate(pt)) != cell.input_signs.at(i)) ++out.sign_mismatches;
          ++out.points;
        }
      } else {
        walk(cell.children);
      }
      path.pop_back();
      sizes.pop_back();
    }
  };
  walk(tree.base());
}

struct StructureCheck {
  std::size_t cells = 0;
  int violations = 0;
};

inline void check_structure(const std::vector<Cell>& stack, const std::vector<unsigned>& prefix, std::size_t depth,
                            std::size_t n, StructureCheck& out) {
  if (stack.size() % 2 == 0) ++out.violations;
  for (std::size_t i = 0; i < stack.size(); ++i) {
    const Cell& c = stack[i];
    if (c.is_leaf()) ++out.cells;
    if (c.index.size() != depth || !std::equal(prefix.begin(), prefix.end(), c.index.begin()) ||
        c.index.back() != i + 1 || c.sample.dimension() != depth || (depth < n) == c.is_leaf()) {
      ++out.violations;
      continue;
    }
    if (depth < n) check_structure(c.children, c.index, depth + 1, n, out);
  }
}

/// Counts leaves. Checks odd stacks, cylindrical indices, one sample coordinate per level, leaves at full depth.
inline StructureCheck check_structure(const CadTree& tree) {
  StructureCheck out;
  check_structure(tree.base(), {}, 1, tree.dimension(), out);
  if (out.cells != tree.cell_count()) ++out.violations;
  return out;
}

/// Number of adjacent section pairs whose coordinates could not be shown increasing.
inline int check_stack_order(const std::vector<Cell>& stack) {
  int bad = 0;
  for (std::size_t i = 1; i + 2 < stack.size(); i += 2) {
    SamplePoint a = stack[i].sample, b = stack[i + 2].sample;
    std::size_t j = a.dimension() - 1;
    bool separated = false;
    for (int step = 0; step < 200 && !separated; ++step) {
      Interval ia = a.coordinate(j).enclosure(), ib = b.coordinate(j).enclosure();
      if (ia.hi < ib.lo) {
        separated = true;
      } else {
        if (!a.coordinate(j).is_rational()) a.refine(j);
        if (!b.coordinate(j).is_rational()) b.refine(j);
      }
    }
    if (!separated) ++bad;
  }
  for (const auto& c : stack)
    if (!c.is_leaf()) bad += check_stack_order(c.children);
  return bad;
}

}  // namespace testing
