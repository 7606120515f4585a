#include "cadprep/groebner.hpp"

#include <algorithm>

#include "cadprep/errors.hpp"

namespace cadprep {

namespace {

// Renames variables so that the built-in term order of Polynomial coincides
// with the lex order: precedence[i] becomes variable i.
struct LexFrame {
  ContextPtr original;
  ContextPtr permuted;
  std::vector<Variable> to_permuted;
  std::vector<Variable> to_original;
  bool identity = true;

  explicit LexFrame(const MonomialOrder& ord) : original(ord.context()) {
    const auto& prec = ord.precedence();
    to_permuted.resize(prec.size());
    to_original = prec;
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < prec.size(); ++i) {
      to_permuted[prec[i].index] = Variable{i};
      names.push_back(original->name(prec[i]));
      if (prec[i].index != i) identity = false;
    }
    permuted = identity ? original : VariableContext::create(std::move(names));
  }

  Polynomial in(const Polynomial& p) const {
    if (identity) return p.context() ? p : Polynomial(original);
    return p.rename(permuted, to_permuted);
  }
  Polynomial out(const Polynomial& p) const {
    if (identity) return p;
    return p.rename(original, to_original);
  }
};

const Monomial& lm(const Polynomial& p) { return p.leading_term().monomial; }

bool lm_greater(const Polynomial& a, const Polynomial& b) { return lm(a) > lm(b); }

Polynomial drop_leading(const Polynomial& p) {
  const Term& t = p.leading_term();
  return p - Polynomial::monomial(p.context(), t.monomial, t.coeff);
}

// Full reduction of f by `reducers` (already in the lex frame, sorted by
// leading monomial, largest first).
Polynomial reduce_full(Polynomial p, const std::vector<const Polynomial*>& reducers) {
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& t = p.leading_term();
    const Polynomial* red = nullptr;
    for (const auto* g : reducers) {
      if (lm(*g).divides(t.monomial)) {
        red = g;
        break;
      }
    }
    if (red) {
      const Term& lt = red->leading_term();
      p = p - red->times_term(t.monomial / lt.monomial, t.coeff / lt.coeff);
    } else {
      rem.push_back(t);
      p = drop_leading(p);
    }
  }
  return Polynomial::from_terms(p.context(), std::move(rem));
}

std::vector<const Polynomial*> sorted_view(const std::vector<Polynomial>& gens) {
  std::vector<const Polynomial*> v;
  for (const auto& g : gens) v.push_back(&g);
  std::stable_sort(v.begin(), v.end(), [](const Polynomial* a, const Polynomial* b) { return lm_greater(*a, *b); });
  return v;
}

Polynomial s_poly_frame(const Polynomial& f, const Polynomial& g) {
  const Term& a = f.leading_term();
  const Term& b = g.leading_term();
  Monomial l = Monomial::lcm(a.monomial, b.monomial);
  return f.times_term(l / a.monomial, Rational(1) / a.coeff) - g.times_term(l / b.monomial, Rational(1) / b.coeff);
}

void require_basis_context(const Polynomial& f, const GroebnerBasis& G) {
  if (f.context() && G.order().context() && !same_context(f.context(), G.order().context()))
    throw OrderMismatch("polynomial and Groebner basis live over different variable orders");
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<Polynomial> generators, bool reduced)
    : order_(std::move(order)), generators_(std::move(generators)), reduced_(reduced) {
  for (const auto& g : generators_) {
    if (g.is_zero()) throw ZeroPolynomialError("Groebner basis generators must be nonzero");
    require_same_context(g.context(), order_.context());
  }
  std::stable_sort(generators_.begin(), generators_.end(), [this](const Polynomial& a, const Polynomial& b) {
    return order_.compare(leading_monomial(a, order_).first, leading_monomial(b, order_).first) == Ordering::Greater;
  });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError("S-polynomial of the zero polynomial");
  require_same_context(f.context(), ord.context());
  require_same_context(g.context(), ord.context());
  LexFrame frame(ord);
  return frame.out(s_poly_frame(frame.in(f), frame.in(g)));
}

GroebnerBasis buchberger(std::span<const Polynomial> S, const MonomialOrder& ord, const Deadline& deadline) {
  LexFrame frame(ord);
  std::vector<Polynomial> G;
  for (const auto& s : S) {
    if (s.is_zero()) continue;
    require_same_context(s.context(), ord.context());
    G.push_back(frame.in(s).monic());
  }

  std::vector<Pair> pairs;
  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pairs.begin(), pairs.end(), [&](const Pair& p) { return p.i == a && p.j == b; });
  };
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pairs.push_back(Pair{i, j, Monomial::lcm(lm(G[i]), lm(G[j]))});
  };
  for (std::size_t j = 1; j < G.size(); ++j) add_pairs(j);

  while (!pairs.empty()) {
    deadline.check("Groebner basis computation");
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm != b.lcm) return a.lcm < b.lcm;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *best;
    pairs.erase(best);

    if (Monomial::coprime(lm(G[p.i]), lm(G[p.j]))) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (lm(G[k]).divides(p.lcm) && !pending(p.i, k) && !pending(p.j, k)) chain = true;
    }
    if (chain) continue;

    Polynomial r = reduce_full(s_poly_frame(G[p.i], G[p.j]), sorted_view(G));
    if (r.is_zero()) continue;
    G.push_back(r.monic());
    add_pairs(G.size() - 1);
  }

  // Minimal basis: drop generators whose leading monomial is a multiple of another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (lm(G[j]).divides(lm(G[i])) && (lm(G[j]) != lm(G[i]) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Polynomial*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    std::stable_sort(others.begin(), others.end(), [](const Polynomial* a, const Polynomial* b) { return lm_greater(*a, *b); });
    const Term& lt = minimal[i].leading_term();
    Polynomial tail = reduce_full(drop_leading(minimal[i]), others);
    reduced.push_back((tail + Polynomial::monomial(frame.permuted, lt.monomial, lt.coeff)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), lm_greater);

  std::vector<Polynomial> out;
  for (const auto& g : reduced) out.push_back(frame.out(g));
  return GroebnerBasis(ord, std::move(out), true);
}

Polynomial restricted_normal_form(const Polynomial& f, const GroebnerBasis& G,
                                  const std::function<bool(const Polynomial&)>& usable) {
  require_basis_context(f, G);
  if (G.empty()) return f;
  LexFrame frame(G.order());
  std::vector<Polynomial> gens;
  for (const auto& g : G.generators())
    if (usable(g)) gens.push_back(frame.in(g));
  if (gens.empty()) return f;
  return frame.out(reduce_full(frame.in(f), sorted_view(gens)));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  return restricted_normal_form(f, G, [](const Polynomial&) { return true; });
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, const MonomialOrder& ord) {
  if (!(ord == G.order())) throw OrderMismatch("reduction order " + ord.to_string() + " differs from basis order " + G.order().to_string());
  return normal_form(f, G);
}

bool is_member(const Polynomial& f, const GroebnerBasis& G) { return normal_form(f, G).is_zero(); }

}  // namespace cadprep
