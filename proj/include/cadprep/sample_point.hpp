#pragma once

#include <optional>
#include <vector>

#include "cadprep/interval.hpp"
#include "cadprep/polynomial.hpp"

namespace cadprep {

/**
 * One coordinate of a sample point. Either an exact rational, or the unique
 * root in the open interval (lo, hi) of `defining`, a polynomial that is monic
 * and squarefree in the coordinate's own variable and whose other
 * coefficients involve only the lower coordinates.
 */
struct Coordinate {
  std::optional<Rational> value;
  Polynomial defining;
  Rational lo;
  Rational hi;
  int sign_lo = 0;  // sign of defining at lo (over the lower coordinates)

  bool is_rational() const { return value.has_value(); }
  Interval enclosure() const { return value ? Interval::point(*value) : Interval{lo, hi}; }
  static Coordinate rational(const Rational& q);
};

/**
 * A point (a_0, ..., a_{k-1}) whose coordinate j belongs to variable j of a
 * fixed context. Signs of polynomials at the point are decided exactly:
 * interval enclosures first, then a gcd test against the defining polynomial
 * of the top coordinate. A gcd test that finds a proper factor replaces the
 * defining polynomial by the factor that carries the root, and refinement may
 * discover that a coordinate is rational; the point itself never changes.
 */
class SamplePoint {
 public:
  SamplePoint() = default;
  explicit SamplePoint(ContextPtr ctx, unsigned max_refine = 64) : ctx_(std::move(ctx)), max_refine_(max_refine) {}

  const ContextPtr& context() const { return ctx_; }
  std::size_t dimension() const { return coords_.size(); }
  const Coordinate& coordinate(std::size_t j) const { return coords_.at(j); }
  const std::vector<Coordinate>& coordinates() const { return coords_; }
  unsigned max_refine() const { return max_refine_; }

  SamplePoint extended(Coordinate c) const;

  /// Equivalent polynomial at the point: rational coordinates substituted and
  /// algebraic ones reduced modulo their defining polynomials. Only
  /// coordinates below `limit` are touched.
  Polynomial reduce(const Polynomial& p, std::size_t limit = static_cast<std::size_t>(-1)) const;
  Interval enclosure(const Polynomial& p) const;

  bool is_zero(const Polynomial& p);
  int sign(const Polynomial& p);
  /// Sign of a polynomial known not to vanish at the point.
  int sign_nonzero(const Polynomial& p);
  /// Reduced inverse at the point, or nullopt when p vanishes there.
  std::optional<Polynomial> inverse(const Polynomial& p);

  /// Halves the isolating interval of coordinate j (no-op for rationals).
  void refine(std::size_t j);

 private:
  void set_defining(std::size_t j, const Polynomial& defining);
  int sign_reduced_nonzero(const Polynomial& r);
  bool is_zero_reduced(const Polynomial& r);
  std::optional<std::size_t> top_variable(const Polynomial& r) const;

  ContextPtr ctx_;
  std::vector<Coordinate> coords_;
  unsigned max_refine_ = 64;
};

}  // namespace cadprep
