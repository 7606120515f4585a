#include "cadprep/poly_algorithms.hpp"

#include <algorithm>

#include "cadprep/errors.hpp"

namespace cadprep {

namespace {

// Polynomial in v with coefficients free of v; back() is the nonzero leading coefficient.
using UPoly = std::vector<Polynomial>;

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly to_upoly(const Polynomial& p, Variable v) {
  if (p.is_zero()) return {};
  return p.coefficients(v);
}

Polynomial from_upoly(const ContextPtr& ctx, Variable v, const UPoly& a) { return Polynomial::from_coefficients(ctx, v, a); }

UPoly scale(const UPoly& a, const Polynomial& c) {
  UPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  trim(r);
  return r;
}

UPoly divide_coefficients(const UPoly& a, const Polynomial& c) {
  UPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(divide_exact(x, c));
  return r;
}

// lc(b)^(deg a - deg b + 1) * a rem b.
UPoly prem(UPoly a, const UPoly& b) {
  int da = degree(a), db = degree(b);
  if (da < db) return a;
  const Polynomial& lc = b.back();
  int steps_left = da - db + 1;
  while (!a.empty() && degree(a) >= db) {
    Polynomial c = a.back();
    int k = degree(a) - db;
    for (auto& x : a) x = x * lc;
    for (int i = 0; i <= db; ++i) a[k + i] = a[k + i] - c * b[i];
    trim(a);
    --steps_left;
  }
  if (steps_left > 0) a = scale(a, lc.pow(static_cast<unsigned>(steps_left)));
  return a;
}

struct PrsState {
  Polynomial g;
  Polynomial h;
};

// One step of the subresultant PRS: returns the next remainder (possibly empty).
UPoly subresultant_step(UPoly& a, UPoly& b, PrsState& st) {
  int delta = degree(a) - degree(b);
  UPoly r = prem(a, b);
  a = b;
  if (r.empty()) return r;
  Polynomial divisor = st.g * st.h.pow(static_cast<unsigned>(delta));
  b = divide_coefficients(r, divisor);
  st.g = a.back();
  if (delta == 0) {
    // h unchanged
  } else if (delta == 1) {
    st.h = st.g;
  } else {
    st.h = divide_exact(st.g.pow(static_cast<unsigned>(delta)), st.h.pow(static_cast<unsigned>(delta - 1)));
  }
  return b;
}

std::optional<Variable> first_variable(const Polynomial& p, const Polynomial& q) {
  const auto& ctx = p.context() ? p.context() : q.context();
  if (!ctx) return std::nullopt;
  for (std::uint32_t i = 0; i < ctx->size(); ++i)
    if (p.contains(Variable{i}) || q.contains(Variable{i})) return Variable{i};
  return std::nullopt;
}

}  // namespace

std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw ZeroPolynomialError("division by the zero polynomial");
  if (p.is_zero()) return Polynomial(p.context() ? p.context() : q.context());
  if (q.is_constant()) return p.scaled(Rational(1) / q.leading_term().coeff);
  const auto& ctx = p.context();
  require_same_context(ctx, q.context());
  for (std::uint32_t i = 0; i < ctx->size(); ++i)
    if (q.degree(Variable{i}) > p.degree(Variable{i})) return std::nullopt;

  const Term& lq = q.leading_term();
  std::vector<Term> quotient;
  Polynomial r = p;
  while (!r.is_zero()) {
    const Term& t = r.leading_term();
    if (!lq.monomial.divides(t.monomial)) return std::nullopt;
    Monomial m = t.monomial / lq.monomial;
    Rational c = t.coeff / lq.coeff;
    r = r - q.times_term(m, c);
    quotient.push_back(Term{std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(ctx, std::move(quotient));
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  auto r = try_divide(p, q);
  if (!r) throw InexactDivision("'" + q.to_string() + "' does not divide '" + p.to_string() + "'");
  return *r;
}

Polynomial content(const Polynomial& p, Variable v) {
  if (p.is_zero()) return p;
  auto coeffs = p.coefficients(v);
  Polynomial c(p.context());
  for (const auto& x : coeffs) {
    if (x.is_zero()) continue;
    c = gcd(c, x);
    if (c.is_constant()) return Polynomial(p.context(), Rational(1));
  }
  return c;
}

Polynomial primitive_part(const Polynomial& p, Variable v) {
  if (p.is_zero()) return p;
  return divide_exact(p, content(p, v));
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return q.integer_primitive();
  if (q.is_zero()) return p.integer_primitive();
  const auto& ctx = p.context();
  require_same_context(ctx, q.context());
  if (p.is_constant() || q.is_constant()) return Polynomial(ctx, Rational(1));
  if (p == q) return p.integer_primitive();

  Variable v = *first_variable(p, q);
  if (!p.contains(v)) return gcd(p, content(q, v));
  if (!q.contains(v)) return gcd(content(p, v), q);

  Polynomial cp = content(p, v), cq = content(q, v);
  Polynomial c = gcd(cp, cq);
  UPoly a = to_upoly(divide_exact(p, cp), v);
  UPoly b = to_upoly(divide_exact(q, cq), v);
  if (degree(a) < degree(b)) std::swap(a, b);

  PrsState st{Polynomial(ctx, Rational(1)), Polynomial(ctx, Rational(1))};
  for (;;) {
    if (degree(b) == 0) return c.integer_primitive();
    UPoly next = subresultant_step(a, b, st);
    if (next.empty()) break;
  }
  // a now holds the last nonzero remainder.
  Polynomial g = primitive_part(from_upoly(ctx, v, a), v);
  return (c * g).integer_primitive();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  if (p.is_constant()) return Polynomial(p.context(), Rational(1));
  Variable v = *first_variable(p, p);
  Polynomial c = content(p, v);
  Polynomial pp = divide_exact(p, c);
  Polynomial g = gcd(pp, pp.derivative(v));
  Polynomial s = divide_exact(pp, g);
  return (squarefree_part(c) * s).integer_primitive();
}

Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g, Variable v) {
  const auto& ctx = f.context() ? f.context() : g.context();
  require_variable(ctx, v);
  if (g.degree(v) == 0) throw InvalidArgument("pseudo-remainder: divisor is constant in the variable");
  UPoly a = to_upoly(f, v), b = to_upoly(g, v);
  return from_upoly(ctx, v, prem(std::move(a), b));
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, Variable v) {
  const auto& ctx = p.context() ? p.context() : q.context();
  require_variable(ctx, v);
  require_same_context(ctx, q.context() ? q.context() : ctx);
  UPoly a = to_upoly(p, v), b = to_upoly(q, v);
  if (a.empty() || b.empty()) return Polynomial(ctx);
  int m = degree(a), n = degree(b);
  if (m == 0 && n == 0) throw InvalidArgument("resultant: both polynomials are constant in the variable");
  if (n == 0) return b[0].pow(static_cast<unsigned>(m));
  if (m == 0) return a[0].pow(static_cast<unsigned>(n));

  int s = 1;
  if (m < n) {
    std::swap(a, b);
    if ((m & 1) && (n & 1)) s = -s;
  }
  PrsState st{Polynomial(ctx, Rational(1)), Polynomial(ctx, Rational(1))};
  for (;;) {
    if ((degree(a) & 1) && (degree(b) & 1)) s = -s;
    UPoly next = subresultant_step(a, b, st);
    if (next.empty()) return Polynomial(ctx);
    if (degree(b) == 0) break;
  }
  int da = degree(a);
  Polynomial h = divide_exact(b[0].pow(static_cast<unsigned>(da)), st.h.pow(static_cast<unsigned>(da - 1)));
  return s > 0 ? h : -h;
}

Polynomial discriminant(const Polynomial& p, Variable v) {
  const auto& ctx = p.context();
  require_variable(ctx, v);
  unsigned d = p.degree(v);
  if (d < 2) throw InvalidArgument("discriminant needs degree at least 2 in '" + ctx->name(v) + "'");
  Polynomial r = divide_exact(resultant(p, p.derivative(v), v), p.leading_coefficient(v));
  return ((d * (d - 1) / 2) % 2 == 1) ? -r : r;
}

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m, const ContextPtr& ctx) {
  std::size_t n = m.size();
  if (n == 0) return Polynomial(ctx, Rational(1));
  int sgn = 1;
  Polynomial prev(ctx, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(ctx);
      std::swap(m[k], m[r]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    }
    prev = m[k][k];
  }
  return sgn > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Polynomial principal_subresultant_coefficient(const Polynomial& p, const Polynomial& q, Variable v, unsigned j) {
  const auto& ctx = p.context() ? p.context() : q.context();
  require_variable(ctx, v);
  UPoly a = to_upoly(p, v), b = to_upoly(q, v);
  if (a.empty() || b.empty()) return Polynomial(ctx);
  unsigned m = static_cast<unsigned>(degree(a)), n = static_cast<unsigned>(degree(b));
  if (j > std::min(m, n)) throw InvalidArgument("subresultant index exceeds both degrees");
  if (j == std::min(m, n) && m == n) return Polynomial(ctx, Rational(1));
  unsigned cols = m + n - j;
  unsigned size = m + n - 2 * j;
  std::vector<std::vector<Polynomial>> rows;
  auto add_rows = [&](const UPoly& c, unsigned deg, unsigned count) {
    for (unsigned i = 0; i < count; ++i) {
      std::vector<Polynomial> row(cols, Polynomial(ctx));
      for (unsigned k = 0; k <= deg; ++k) row[i + k] = c[deg - k];
      row.resize(size, Polynomial(ctx));
      rows.push_back(std::move(row));
    }
  };
  add_rows(a, m, n - j);
  add_rows(b, n, m - j);
  return bareiss_determinant(std::move(rows), ctx);
}

}  // namespace cadprep
