#include "cadprep/interval.hpp"

#include <algorithm>

#include "cadprep/errors.hpp"

namespace cadprep {

std::optional<int> Interval::sign() const {
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  if (lo == 0 && hi == 0) return 0;
  return std::nullopt;
}

Rational Interval::magnitude() const { return std::max(Rational(abs(lo)), Rational(abs(hi))); }

Rational Interval::mignitude() const {
  if (contains_zero()) return 0;
  return std::min(Rational(abs(lo)), Rational(abs(hi)));
}

Interval operator+(const Interval& a, const Interval& b) { return Interval{a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a) { return Interval{-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo == a.hi) return a.lo * b;
  if (b.lo == b.hi) return b.lo * a;
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return Interval{*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator*(const Rational& c, const Interval& a) {
  if (c >= 0) return Interval{c * a.lo, c * a.hi};
  return Interval{c * a.hi, c * a.lo};
}

Interval pow(const Interval& a, unsigned e) {
  if (e == 0) return Interval::point(1);
  Rational l = pow(a.lo, e), h = pow(a.hi, e);
  if (e % 2 == 1) return Interval{l, h};
  if (a.lo >= 0) return Interval{l, h};
  if (a.hi <= 0) return Interval{h, l};
  return Interval{0, std::max(l, h)};
}

Rational simplest_between(const Rational& a, const Rational& b) {
  if (!(a < b)) throw InvalidArgument("simplest_between needs a < b");
  if (a < 0 && b > 0) return 0;
  if (b <= 0) return -simplest_between(-b, -a);
  Integer fl = floor(a);
  Rational next(fl + 1);
  if (next < b) return next;
  Rational x = a - fl, y = b - fl;
  if (x == 0) {
    Integer n = floor(Rational(1) / y) + 1;
    return Rational(fl) + Rational(1, n);
  }
  Rational inner = simplest_between(Rational(1) / y, Rational(1) / x);
  Rational r = Rational(fl) + Rational(1) / inner;
  r.canonicalize();
  return r;
}

}  // namespace cadprep
