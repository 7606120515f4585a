#include "cadprep/fiber.hpp"

#include "cadprep/errors.hpp"

namespace cadprep {

Fiber::Fiber(SamplePoint& point, std::size_t level) : point_(point), level_(level) {
  require_variable(point.context(), variable());
}

UPoly Fiber::from(const Polynomial& p) {
  if (p.is_zero()) return {};
  Polynomial r = point_.reduce(p, level_);
  if (r.is_zero()) return {};
  UPoly a = r.coefficients(variable());
  trim(a);
  return a;
}

Polynomial Fiber::to_polynomial(const UPoly& a) const {
  return Polynomial::from_coefficients(point_.context(), variable(), a);
}

void Fiber::trim(UPoly& a) {
  while (!a.empty() && point_.is_zero(a.back())) a.pop_back();
}

Polynomial Fiber::mul(const Polynomial& a, const Polynomial& b) { return point_.reduce(a * b, level_); }

UPoly Fiber::add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Polynomial(point_.context()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  trim(r);
  return r;
}

UPoly Fiber::sub(const UPoly& a, const UPoly& b) {
  UPoly nb;
  for (const auto& x : b) nb.push_back(-x);
  return add(a, nb);
}

UPoly Fiber::mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Polynomial(point_.context()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  for (auto& x : r) x = point_.reduce(x, level_);
  trim(r);
  return r;
}

UPoly Fiber::scale(const UPoly& a, const Polynomial& c) {
  UPoly r;
  for (const auto& x : a) r.push_back(mul(x, c));
  trim(r);
  return r;
}

UPoly Fiber::monic(const UPoly& a) {
  if (a.empty()) return a;
  auto inv = point_.inverse(a.back());
  if (!inv) throw Error("internal: leading coefficient vanishes at the sample point");
  UPoly r;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) r.push_back(mul(a[i], *inv));
  r.push_back(Polynomial(point_.context(), Rational(1)));
  return r;
}

std::pair<UPoly, UPoly> Fiber::divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw ZeroPolynomialError("fiber division by zero");
  int db = degree(b);
  if (degree(a) < db) return {UPoly{}, a};
  auto inv = point_.inverse(b.back());
  if (!inv) throw Error("internal: divisor leading coefficient vanishes at the sample point");
  UPoly q(degree(a) - db + 1, Polynomial(point_.context()));
  UPoly r = a;
  while (!r.empty() && degree(r) >= db) {
    int k = degree(r) - db;
    Polynomial c = mul(r.back(), *inv);
    q[k] = c;
    for (int i = 0; i < db; ++i) r[k + i] = point_.reduce(r[k + i] - c * b[i], level_);
    r.pop_back();
    trim(r);
  }
  trim(q);
  return {q, r};
}

UPoly Fiber::gcd(const UPoly& a0, const UPoly& b0) {
  UPoly a = a0, b = b0;
  trim(a);
  trim(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly Fiber::derivative(const UPoly& a) const {
  UPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i].scaled(Rational(static_cast<unsigned long>(i))));
  return r;
}

UPoly Fiber::squarefree(const UPoly& a) {
  if (degree(a) <= 0) return monic(a);
  UPoly g = gcd(a, derivative(a));
  if (degree(g) <= 0) return monic(a);
  return monic(divmod(a, g).first);
}

Polynomial Fiber::eval(const UPoly& a, const Rational& t) {
  Polynomial acc(point_.context());
  for (std::size_t i = a.size(); i-- > 0;) acc = acc.scaled(t) + a[i];
  return acc;
}

int Fiber::sign_at(const UPoly& a, const Rational& t) { return point_.sign(eval(a, t)); }

std::vector<UPoly> Fiber::sturm_sequence(const UPoly& q) {
  std::vector<UPoly> seq{q, derivative(q)};
  trim(seq.back());
  while (!seq.back().empty() && degree(seq.back()) > 0) {
    UPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

int Fiber::variations(const std::vector<UPoly>& seq, const Rational& t) {
  int count = 0, last = 0;
  for (const auto& s : seq) {
    int v = sign_at(s, t);
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

namespace {

struct Isolator {
  Fiber& f;
  const UPoly& q;
  const std::vector<UPoly>& seq;
  std::vector<IsolatedRoot>& out;

  // Roots in the open interval (a, b); b_root tells whether b itself is a root.
  void run(const Rational& a, const Rational& b, int va, int vb, bool a_root, bool b_root) {
    int n = va - vb - (b_root ? 1 : 0);
    if (n <= 0) return;
    if (n == 1 && !a_root && !b_root) {
      Rational s = simplest_between(a, b);
      if (f.sign_at(q, s) == 0) {
        out.push_back(IsolatedRoot{s, s, s});
      } else {
        out.push_back(IsolatedRoot{std::nullopt, a, b});
      }
      return;
    }
    Rational m = (a + b) / 2;
    bool m_root = f.sign_at(q, m) == 0;
    int vm = f.variations(seq, m);
    run(a, m, va, vm, a_root, m_root);
    if (m_root) out.push_back(IsolatedRoot{m, m, m});
    run(m, b, vm, vb, m_root, b_root);
  }
};

}  // namespace

std::vector<IsolatedRoot> Fiber::isolate(const UPoly& q0) {
  UPoly q = q0;
  trim(q);
  if (degree(q) < 1) return {};
  q = monic(q);
  Rational bound = 1;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) bound = std::max(bound, point_.enclosure(q[i]).magnitude());
  bound += 1;
  Rational limit = 1;
  while (limit < bound) limit *= 2;
  auto seq = sturm_sequence(q);
  std::vector<IsolatedRoot> out;
  Isolator iso{*this, q, seq, out};
  iso.run(-limit, limit, variations(seq, -limit), variations(seq, limit), false, false);
  return out;
}

}  // namespace cadprep
