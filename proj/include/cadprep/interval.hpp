#pragma once

#include <optional>

#include "cadprep/polynomial.hpp"

namespace cadprep {

/** Closed interval [lo, hi] with rational endpoints. */
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& q) { return Interval{q, q}; }

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  /// Sign shared by every point of the interval, if there is one.
  std::optional<int> sign() const;
  /// max |x| over the interval.
  Rational magnitude() const;
  /// min |x| over the interval.
  Rational mignitude() const;
  Rational width() const { return hi - lo; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& c, const Interval& a);
Interval pow(const Interval& a, unsigned e);

/**
 * Simplest rational (smallest denominator, then smallest magnitude) strictly
 * between a and b; requires a < b.
 */
Rational simplest_between(const Rational& a, const Rational& b);

}  // namespace cadprep
