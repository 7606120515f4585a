#include "cadprep/cad.hpp"

#include <algorithm>

#include "cadprep/errors.hpp"
#include "cadprep/fiber.hpp"
#include "cadprep/poly_algorithms.hpp"

namespace cadprep {

namespace {

struct StackRoot {
  std::optional<Rational> exact;
  UPoly q;
  Rational lo, hi;
  int sign_lo = 0;
  std::vector<std::size_t> polys;
};

// Shrinks the isolating interval of r to one side of c, or pins r to c.
void cut(Fiber& f, StackRoot& r, const Rational& c) {
  if (r.exact || c <= r.lo || c >= r.hi) return;
  int s = f.sign_at(r.q, c);
  if (s == 0) {
    r.exact = c;
    r.lo = r.hi = c;
  } else if (s == r.sign_lo) {
    r.lo = c;
  } else {
    r.hi = c;
  }
}

void bisect(Fiber& f, StackRoot& r) {
  if (!r.exact) cut(f, r, (r.lo + r.hi) / 2);
}

enum class Cmp { Less, Equal, Greater };

Cmp compare(Fiber& f, StackRoot& a, StackRoot& b) {
  for (;;) {
    if (a.exact && b.exact) {
      if (*a.exact == *b.exact) return Cmp::Equal;
      return *a.exact < *b.exact ? Cmp::Less : Cmp::Greater;
    }
    if (a.exact) {
      if (*a.exact <= b.lo) return Cmp::Less;
      if (*a.exact >= b.hi) return Cmp::Greater;
      cut(f, b, *a.exact);
      continue;
    }
    if (b.exact) {
      if (*b.exact <= a.lo) return Cmp::Greater;
      if (*b.exact >= a.hi) return Cmp::Less;
      cut(f, a, *b.exact);
      continue;
    }
    if (a.hi <= b.lo) return Cmp::Less;
    if (b.hi <= a.lo) return Cmp::Greater;
    if (b.lo > a.lo) {
      cut(f, a, b.lo);
      continue;
    }
    if (a.lo > b.lo) {
      cut(f, b, a.lo);
      continue;
    }
    if (b.hi < a.hi) {
      cut(f, a, b.hi);
      continue;
    }
    if (a.hi < b.hi) {
      cut(f, b, a.hi);
      continue;
    }
    // Identical intervals: equal iff the common factor carries a root there.
    UPoly g = f.gcd(a.q, b.q);
    if (Fiber::degree(g) >= 1 && f.sign_at(g, a.lo) != f.sign_at(g, a.hi)) return Cmp::Equal;
    Rational mid = (a.lo + a.hi) / 2;
    cut(f, a, mid);
    cut(f, b, mid);
  }
}

void insert_root(Fiber& f, std::vector<StackRoot>& roots, StackRoot r) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Cmp c = compare(f, r, roots[i]);
    if (c == Cmp::Equal) {
      roots[i].polys.insert(roots[i].polys.end(), r.polys.begin(), r.polys.end());
      return;
    }
    if (c == Cmp::Less) {
      roots.insert(roots.begin() + static_cast<std::ptrdiff_t>(i), std::move(r));
      return;
    }
  }
  roots.push_back(std::move(r));
}

Rational upper(const StackRoot& r) { return r.exact ? *r.exact : r.hi; }
Rational lower(const StackRoot& r) { return r.exact ? *r.exact : r.lo; }

// Rational sample strictly between two consecutive roots.
Rational between(Fiber& f, StackRoot& a, StackRoot& b) {
  for (;;) {
    Rational x = upper(a), y = lower(b);
    if (x < y) return simplest_between(x, y);
    if (!a.exact && !b.exact) return x;
    bisect(f, a.exact ? b : a);
  }
}

std::string index_string(const std::vector<unsigned>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

class Lifter {
 public:
  Lifter(const std::vector<std::vector<Polynomial>>& stack_polys, const std::vector<Polynomial>& inputs,
         const CadOptions& opt)
      : stack_polys_(stack_polys), inputs_(inputs), opt_(opt) {}

  std::size_t leaves = 0;

  void build(std::size_t k, SamplePoint& pt, std::size_t parent_dim, const std::vector<unsigned>& prefix,
             std::vector<Cell>& out) {
    opt_.deadline.check("lifting");
    const auto& P = stack_polys_[k];
    Fiber f(pt, k);
    std::vector<StackRoot> roots;
    std::vector<bool> nullified(P.size(), false);
    for (std::size_t i = 0; i < P.size(); ++i) {
      UPoly F = f.from(P[i]);
      if (F.empty()) {
        if (opt_.op == ProjectionOperator::McCallum && parent_dim > 0)
          throw NotWellOriented("projection not well-oriented: '" + P[i].to_string() +
                                "' vanishes identically over cell " + index_string(prefix));
        nullified[i] = true;
        continue;
      }
      if (Fiber::degree(F) == 0) continue;
      UPoly Q = f.squarefree(F);
      for (const auto& r : f.isolate(Q)) {
        StackRoot sr{r.exact, Q, r.lo, r.hi, 0, {i}};
        if (!r.exact) sr.sign_lo = f.sign_at(Q, r.lo);
        insert_root(f, roots, std::move(sr));
      }
    }

    std::vector<Rational> sectors;
    if (roots.empty()) {
      sectors.push_back(0);
    } else {
      sectors.push_back(Rational(ceil(lower(roots.front())) - 1));
      for (std::size_t i = 0; i + 1 < roots.size(); ++i) sectors.push_back(between(f, roots[i], roots[i + 1]));
      sectors.push_back(Rational(floor(upper(roots.back())) + 1));
    }

    std::size_t count = 2 * roots.size() + 1;
    for (std::size_t c = 0; c < count; ++c) {
      bool section = c % 2 == 1;
      Coordinate coord;
      const StackRoot* root = section ? &roots[c / 2] : nullptr;
      if (!section) {
        coord = Coordinate::rational(sectors[c / 2]);
      } else if (root->exact) {
        coord = Coordinate::rational(*root->exact);
      } else {
        coord.defining = f.to_polynomial(root->q);
        coord.lo = root->lo;
        coord.hi = root->hi;
        coord.sign_lo = root->sign_lo;
      }

      Cell cell;
      cell.index = prefix;
      cell.index.push_back(static_cast<unsigned>(c + 1));
      cell.sample = pt.extended(std::move(coord));
      for (std::size_t i = 0; i < P.size(); ++i) {
        bool vanishes = nullified[i] ||
                        (root && std::find(root->polys.begin(), root->polys.end(), i) != root->polys.end());
        cell.signs.push_back(vanishes ? 0 : cell.sample.sign_nonzero(P[i]));
      }
      std::size_t dim = parent_dim + (section ? 0 : 1);
      if (k + 1 < stack_polys_.size()) {
        build(k + 1, cell.sample, dim, cell.index, cell.children);
      } else {
        for (const auto& p : inputs_) cell.input_signs.push_back(cell.sample.sign(p));
        ++leaves;
      }
      out.push_back(std::move(cell));
    }
  }

 private:
  const std::vector<std::vector<Polynomial>>& stack_polys_;
  const std::vector<Polynomial>& inputs_;
  const CadOptions& opt_;
};

void collect_leaves(const std::vector<Cell>& cells, std::vector<const Cell*>& out) {
  for (const auto& c : cells) {
    if (c.is_leaf()) {
      out.push_back(&c);
    } else {
      collect_leaves(c.children, out);
    }
  }
}

}  // namespace

std::size_t Cell::dimension() const {
  return static_cast<std::size_t>(std::count_if(index.begin(), index.end(), [](unsigned i) { return i % 2 == 1; }));
}

std::vector<AlgebraicNumber> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("cannot isolate the roots of the zero polynomial");
  auto vars = p.variables();
  if (vars.size() > 1) throw InvalidArgument("isolate_real_roots needs a univariate polynomial");
  if (vars.empty()) return {};
  Variable v = vars.front();
  auto line = VariableContext::create({p.context()->name(v)});
  std::vector<Variable> map(p.context()->size(), Variable{0});
  Polynomial sf = squarefree_part(p);
  SamplePoint origin(line);
  Fiber f(origin, 0);
  std::vector<AlgebraicNumber> out;
  for (const auto& r : f.isolate(f.from(sf.rename(line, map)))) {
    if (r.exact) {
      out.push_back(AlgebraicNumber{Polynomial::variable(p.context(), v) - Polynomial(p.context(), *r.exact), *r.exact,
                                    *r.exact});
    } else {
      out.push_back(AlgebraicNumber{sf, r.lo, r.hi});
    }
  }
  return out;
}

Polynomial CadTree::to_frame(const Polynomial& p) const { return p.rename(frame_, to_frame_map_); }

std::vector<const Cell*> CadTree::leaves() const {
  std::vector<const Cell*> out;
  collect_leaves(base_, out);
  return out;
}

CadTree build_cad(std::span<const Polynomial> polys, const MonomialOrder& ord, const CadOptions& options) {
  CadTree tree;
  std::size_t n = ord.size();
  if (n == 0) throw InvalidArgument("decomposition needs at least one variable");
  for (const auto& p : polys) {
    require_same_context(p.context() ? p.context() : ord.context(), ord.context());
    if (!p.is_zero() && std::find(tree.inputs_.begin(), tree.inputs_.end(), p) == tree.inputs_.end())
      tree.inputs_.push_back(p);
  }
  tree.projection_ = project_all(tree.inputs_, ord, options.op, options.deadline);

  std::vector<std::string> names;
  tree.to_frame_map_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Variable orig = ord.precedence()[n - 1 - j];
    tree.frame_vars_.push_back(orig);
    tree.to_frame_map_[orig.index] = Variable{static_cast<std::uint32_t>(j)};
    names.push_back(ord.context()->name(orig));
  }
  tree.frame_ = VariableContext::create(std::move(names));
  for (const auto& p : tree.inputs_) tree.frame_inputs_.push_back(tree.to_frame(p));

  tree.stack_polys_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& p : tree.projection_.level(k + 1)) {
      Polynomial fp = tree.to_frame(p);
      if (fp.contains(Variable{static_cast<std::uint32_t>(k)})) tree.stack_polys_[k].push_back(fp);
    }
  }

  SamplePoint origin(tree.frame_, options.max_refine);
  Lifter lifter(tree.stack_polys_, tree.frame_inputs_, options);
  lifter.build(0, origin, 0, {}, tree.base_);
  tree.cell_count_ = lifter.leaves;
  return tree;
}

FormulaEvaluation evaluate_formula(const CadTree& tree, const Formula& B, bool has_quantifier_prefix) {
  const auto& inputs = tree.inputs();
  struct Lookup {
    std::size_t input;
    int factor;
  };
  std::vector<std::pair<Polynomial, Lookup>> table;
  for (const auto& q : B.polynomials()) {
    Polynomial qp = q.integer_primitive();
    bool found = false;
    for (std::size_t i = 0; i < inputs.size() && !found; ++i) {
      if (inputs[i].integer_primitive() == qp) {
        int factor = sign(q.integer_content()) * sign(inputs[i].integer_content());
        table.push_back({q, Lookup{i, factor}});
        found = true;
      }
    }
    if (!found) throw InvalidArgument("polynomial '" + q.to_string() + "' does not occur in the decomposition");
  }

  FormulaEvaluation ev;
  ev.prefix_unevaluated = has_quantifier_prefix;
  for (const Cell* leaf : tree.leaves()) {
    auto sign_of = [&](const Polynomial& q) {
      for (const auto& [poly, lk] : table)
        if (poly == q) return lk.factor * leaf->input_signs[lk.input];
      throw InvalidArgument("polynomial '" + q.to_string() + "' does not occur in the decomposition");
    };
    if (B.evaluate(sign_of)) ev.solution_cells.push_back(leaf);
  }
  ev.satisfiable = !ev.solution_cells.empty();
  return ev;
}

}  // namespace cadprep
