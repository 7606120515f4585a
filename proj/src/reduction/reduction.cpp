#include "cadprep/reduction.hpp"

#include "cadprep/errors.hpp"
#include "cadprep/poly_algorithms.hpp"

namespace cadprep {

namespace {

void require_divisor(const Polynomial& g, Variable v) {
  if (g.is_zero() || g.degree(v) == 0) throw InvalidArgument("preconditioner: divisor must have positive degree in the variable");
}

unsigned round_up_even(unsigned n) { return n % 2 == 0 ? n : n + 1; }

// Division of c^m f by g in v, or nullopt if some step needs more factors of c.
std::optional<Polynomial> exact_steps(const Polynomial& f, const Polynomial& g, Variable v, unsigned m) {
  const auto& ctx = g.context();
  Polynomial c = g.leading_coefficient(v);
  unsigned e = g.degree(v);
  Polynomial r = f * c.pow(m);
  while (!r.is_zero() && r.degree(v) >= e) {
    unsigned k = r.degree(v) - e;
    auto q = try_divide(r.leading_coefficient(v), c);
    if (!q) return std::nullopt;
    r = r - *q * Polynomial::variable(ctx, v, k) * g;
  }
  return r;
}

}  // namespace

std::string_view to_string(ReductionMode m) {
  switch (m) {
    case ReductionMode::MainVar: return "MainVar";
    case ReductionMode::SecondaryVars: return "SecondaryVars";
    case ReductionMode::AllVars: return "AllVars";
  }
  return "?";
}

Polynomial prem(const Polynomial& f, const Polynomial& g, Variable v) {
  require_divisor(g, v);
  return pseudo_remainder(f, g, v);
}

SpremResult sprem(const Polynomial& f, const Polynomial& g, Variable v) {
  require_divisor(g, v);
  unsigned d = f.degree(v), e = g.degree(v);
  if (f.is_zero() || d < e) return {f, 0};
  for (unsigned m = 0; m <= d - e; ++m)
    if (auto r = exact_steps(f, g, v, m)) return {*r, m};
  return {pseudo_remainder(f, g, v), d - e + 1};
}

Polynomial pprecond(const Polynomial& f, const Polynomial& g, Variable v) {
  require_divisor(g, v);
  unsigned d = f.degree(v), e = g.degree(v);
  if (f.is_zero() || d < e) return f;
  unsigned n = d - e + 1;
  return pseudo_remainder(f, g, v) * g.leading_coefficient(v).pow(round_up_even(n) - n);
}

Polynomial sprecond(const Polynomial& f, const Polynomial& g, Variable v) {
  auto [r, m] = sprem(f, g, v);
  return r * g.leading_coefficient(v).pow(round_up_even(m) - m);
}

Polynomial reduce_polynomial(const Polynomial& f, const GroebnerBasis& G, ReductionMode mode) {
  if (f.context() && G.order().context() && !same_context(f.context(), G.order().context()))
    throw OrderMismatch("constraint and Groebner basis live over different variable orders");
  if (G.empty()) return f;
  Variable top = G.order().highest();
  const MonomialOrder& ord = G.order();
  switch (mode) {
    case ReductionMode::AllVars: return normal_form(f, G);
    case ReductionMode::MainVar:
      return restricted_normal_form(f, G, [&](const Polynomial& g) { return leading_monomial(g, ord).first[top.index] > 0; });
    case ReductionMode::SecondaryVars:
      return restricted_normal_form(f, G, [&](const Polynomial& g) { return leading_monomial(g, ord).first[top.index] == 0; });
  }
  throw InvalidArgument("unknown reduction mode");
}

std::vector<SignCondition> reduce_inequalities(std::span<const SignCondition> F, const GroebnerBasis& G,
                                               ReductionMode mode) {
  std::vector<SignCondition> out;
  out.reserve(F.size());
  for (const auto& c : F) out.push_back(SignCondition{reduce_polynomial(c.poly, G, mode), c.rel});
  return out;
}

}  // namespace cadprep
