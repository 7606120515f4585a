#include "cadprep/sample_point.hpp"

#include <algorithm>

#include "cadprep/errors.hpp"
#include "cadprep/fiber.hpp"
#include "cadprep/poly_algorithms.hpp"

namespace cadprep {

Coordinate Coordinate::rational(const Rational& q) {
  Coordinate c;
  c.value = q;
  c.lo = q;
  c.hi = q;
  return c;
}

SamplePoint SamplePoint::extended(Coordinate c) const {
  SamplePoint p = *this;
  p.coords_.push_back(std::move(c));
  return p;
}

Polynomial SamplePoint::reduce(const Polynomial& p, std::size_t limit) const {
  Polynomial r = p;
  std::size_t top = std::min(limit, coords_.size());
  for (std::size_t j = top; j-- > 0;) {
    Variable v{static_cast<std::uint32_t>(j)};
    if (!r.contains(v)) continue;
    const Coordinate& c = coords_[j];
    if (c.value) {
      r = r.substitute(v, *c.value);
    } else if (r.degree(v) >= c.defining.degree(v)) {
      r = pseudo_remainder(r, c.defining, v);
    }
  }
  return r;
}

Interval SamplePoint::enclosure(const Polynomial& p) const {
  Interval sum = Interval::point(0);
  for (const auto& t : p.terms()) {
    Interval acc = Interval::point(t.coeff);
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (i >= coords_.size()) throw InvalidArgument("polynomial involves a variable beyond the sample point");
      acc = acc * pow(coords_[i].enclosure(), e);
    }
    sum = sum + acc;
  }
  return sum;
}

std::optional<std::size_t> SamplePoint::top_variable(const Polynomial& r) const {
  for (std::size_t j = coords_.size(); j-- > 0;)
    if (r.contains(Variable{static_cast<std::uint32_t>(j)})) return j;
  return std::nullopt;
}

void SamplePoint::set_defining(std::size_t j, const Polynomial& defining) {
  Variable v{static_cast<std::uint32_t>(j)};
  if (defining.degree(v) == 1) {
    Polynomial c0 = reduce(defining.coefficients(v)[0], j);
    if (c0.is_constant()) {
      coords_[j] = Coordinate::rational(-c0.constant_coefficient());
      return;
    }
  }
  coords_[j].defining = defining;
  int s = sign(defining.substitute(v, coords_[j].lo));
  coords_[j].sign_lo = s;
}

void SamplePoint::refine(std::size_t j) {
  if (coords_.at(j).value) return;
  Variable v{static_cast<std::uint32_t>(j)};
  Rational mid = (coords_[j].lo + coords_[j].hi) / 2;
  int s = sign(coords_[j].defining.substitute(v, mid));
  if (s == 0) {
    coords_[j] = Coordinate::rational(mid);
  } else if (s == coords_[j].sign_lo) {
    coords_[j].lo = mid;
  } else {
    coords_[j].hi = mid;
  }
}

bool SamplePoint::is_zero_reduced(const Polynomial& r0) {
  Polynomial r = r0;
  if (r.is_constant()) return r.is_zero();
  for (int round = 0; round < 2; ++round) {
    if (!enclosure(r).contains_zero()) return false;
    if (round == 0) {
      for (std::size_t j = 0; j < coords_.size(); ++j)
        if (!coords_[j].value && r.contains(Variable{static_cast<std::uint32_t>(j)})) refine(j);
      r = reduce(r);
      if (r.is_constant()) return r.is_zero();
    }
  }

  std::size_t j = *top_variable(r);
  Fiber f(*this, j);
  UPoly R = f.from(r);
  if (R.empty()) return true;
  if (Fiber::degree(R) == 0) return false;
  if (coords_[j].value) return is_zero(r);
  UPoly M = f.from(coords_[j].defining);
  UPoly G = f.gcd(R, M);
  if (Fiber::degree(G) <= 0) return false;
  if (Fiber::degree(G) == Fiber::degree(M)) return true;
  bool carries = f.sign_at(G, coords_[j].lo) != f.sign_at(G, coords_[j].hi);
  if (carries) {
    set_defining(j, f.to_polynomial(G));
    return true;
  }
  set_defining(j, f.to_polynomial(f.divmod(M, G).first));
  return false;
}

bool SamplePoint::is_zero(const Polynomial& p) { return is_zero_reduced(reduce(p)); }

int SamplePoint::sign_reduced_nonzero(const Polynomial& r0) {
  Polynomial r = r0;
  for (unsigned round = 0;; ++round) {
    r = reduce(r);
    if (r.is_constant()) {
      if (r.is_zero()) throw Error("internal: polynomial assumed nonzero vanishes at the sample point");
      return cadprep::sign(r.constant_coefficient());
    }
    auto s = enclosure(r).sign();
    if (s && *s != 0) return *s;
    if (round >= max_refine_)
      throw PrecisionExhausted("sign of '" + r.to_string() + "' undecided after " + std::to_string(max_refine_) +
                               " refinements");
    for (std::size_t j = 0; j < coords_.size(); ++j)
      if (!coords_[j].value && r.contains(Variable{static_cast<std::uint32_t>(j)})) refine(j);
  }
}

int SamplePoint::sign_nonzero(const Polynomial& p) { return sign_reduced_nonzero(reduce(p)); }

int SamplePoint::sign(const Polynomial& p) {
  Polynomial r = reduce(p);
  if (r.is_constant()) return cadprep::sign(r.constant_coefficient());
  if (auto s = enclosure(r).sign(); s && *s != 0) return *s;
  if (is_zero_reduced(r)) return 0;
  return sign_reduced_nonzero(r);
}

std::optional<Polynomial> SamplePoint::inverse(const Polynomial& p) {
  Polynomial r = reduce(p);
  if (r.is_constant()) {
    if (r.is_zero()) return std::nullopt;
    return Polynomial(ctx_, Rational(1) / r.constant_coefficient());
  }
  if (is_zero_reduced(r)) return std::nullopt;
  for (;;) {
    r = reduce(r);
    if (r.is_constant()) return Polynomial(ctx_, Rational(1) / r.constant_coefficient());
    std::size_t j = *top_variable(r);
    Fiber f(*this, j);
    UPoly A = f.from(r);
    if (Fiber::degree(A) == 0) return inverse(A[0]);
    UPoly M = f.from(coords_[j].defining);
    UPoly r0 = M, r1 = A, s0, s1{Polynomial(ctx_, Rational(1))};
    while (!r1.empty()) {
      auto [q, rr] = f.divmod(r0, r1);
      UPoly next = f.sub(s0, f.mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(rr);
      s0 = std::move(s1);
      s1 = std::move(next);
    }
    if (Fiber::degree(r0) == 0) {
      auto c = inverse(r0[0]);
      if (!c) throw Error("internal: gcd with a vanishing constant");
      return reduce(f.to_polynomial(s0) * *c);
    }
    set_defining(j, f.to_polynomial(f.divmod(M, f.monic(r0)).first));
  }
}

}  // namespace cadprep
