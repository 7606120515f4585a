#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cadprep/poly_text.hpp"
#include "cadprep/polynomial.hpp"

namespace testing {

using cadprep::ContextPtr;
using cadprep::Integer;
using cadprep::Polynomial;
using cadprep::Rational;
using cadprep::Variable;

inline ContextPtr ctx(std::vector<std::string> names) { return cadprep::VariableContext::create(std::move(names)); }

inline Polynomial P(const ContextPtr& c, const std::string& text) { return cadprep::parse_polynomial(c, text); }

inline Rational Q(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long range = 5, long max_den = 4) {
    long num = integer(-range * max_den, range * max_den);
    long den = integer(1, max_den);
    return Q(num, den);
  }

  Rational nonzero_rational(long range = 5, long max_den = 4) {
    for (;;) {
      Rational q = rational(range, max_den);
      if (q != 0) return q;
    }
  }

  /// Random polynomial in the first `nvars` variables of c.
  Polynomial polynomial(const ContextPtr& c, std::size_t nvars, unsigned max_deg, std::size_t max_terms,
                        long coeff_range = 5) {
    std::vector<cadprep::Term> terms;
    std::size_t count = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < count; ++t) {
      cadprep::Monomial m(c->size());
      unsigned budget = static_cast<unsigned>(integer(0, max_deg));
      for (unsigned k = 0; k < budget; ++k) m[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))] += 1;
      terms.push_back({m, Rational(integer(-coeff_range, coeff_range))});
    }
    return Polynomial::from_terms(c, std::move(terms));
  }

  Polynomial nonzero_polynomial(const ContextPtr& c, std::size_t nvars, unsigned max_deg, std::size_t max_terms) {
    for (;;) {
      Polynomial p = polynomial(c, nvars, max_deg, max_terms);
      if (!p.is_zero()) return p;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Determinant of the Sylvester matrix of p and q in v, by memoized Laplace expansion.
inline Polynomial sylvester_laplace(const Polynomial& p, const Polynomial& q, Variable v) {
  const ContextPtr& c = p.context();
  auto a = p.coefficients(v);
  auto b = q.coefficients(v);
  std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  std::vector<std::vector<Polynomial>> M(size, std::vector<Polynomial>(size, Polynomial(c)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) M[i][i + k] = a[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) M[n + i][i + k] = b[n - k];

  std::map<std::pair<std::size_t, unsigned>, Polynomial> memo;
  std::function<Polynomial(std::size_t, unsigned)> det = [&](std::size_t row, unsigned used) -> Polynomial {
    if (row == size) return Polynomial(c, Rational(1));
    auto key = std::make_pair(row, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Polynomial acc(c);
    int sign = 1;
    for (std::size_t j = 0; j < size; ++j) {
      if (used & (1u << j)) continue;
      if (!M[row][j].is_zero()) {
        Polynomial term = M[row][j] * det(row + 1, used | (1u << j));
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo.emplace(key, acc);
    return acc;
  };
  return det(0, 0);
}

// Dense univariate polynomials over Q, lowest degree first; used as an
// independent root-counting oracle.
using Dense = std::vector<Rational>;

inline void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Dense dense(const Polynomial& p, Variable v) {
  Dense out;
  for (const auto& c : p.coefficients(v)) out.push_back(c.constant_coefficient());
  trim(out);
  return out;
}

inline Rational eval(const Dense& a, const Rational& x) {
  Rational acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

inline Dense rem(Dense a, const Dense& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline std::vector<Dense> sturm(const Dense& p) {
  std::vector<Dense> seq{p};
  Dense d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  if (d.empty()) return seq;
  seq.push_back(d);
  for (;;) {
    Dense r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    seq.push_back(r);
  }
  return seq;
}

inline int variations(const std::vector<Dense>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& s : seq) {
    int g = sgn(eval(s, x));
    if (g == 0) continue;
    if (last != 0 && g != last) ++count;
    last = g;
  }
  return count;
}

/// Number of distinct real roots of p in the half-open interval (lo, hi].
inline int count_roots(const Dense& p, const Rational& lo, const Rational& hi) {
  auto seq = sturm(p);
  return variations(seq, lo) - variations(seq, hi);
}

}  // namespace testing
