#pragma once

#include <utility>
#include <vector>

#include "cadprep/sample_point.hpp"

namespace cadprep {

/// Polynomial in one variable over the coordinates of a sample point; back() is the leading coefficient.
using UPoly = std::vector<Polynomial>;

struct IsolatedRoot {
  std::optional<Rational> exact;
  Rational lo;
  Rational hi;
};

/**
 * Arithmetic on polynomials in variable `level` whose coefficients are
 * evaluated at the first `level` coordinates of a sample point.
 */
class Fiber {
 public:
  Fiber(SamplePoint& point, std::size_t level);

  Variable variable() const { return Variable{static_cast<std::uint32_t>(level_)}; }
  SamplePoint& point() { return point_; }

  /// Coefficients of p in the fiber variable, reduced, with vanishing leading coefficients removed.
  UPoly from(const Polynomial& p);
  Polynomial to_polynomial(const UPoly& a) const;

  void trim(UPoly& a);
  static int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

  Polynomial mul(const Polynomial& a, const Polynomial& b);
  UPoly add(const UPoly& a, const UPoly& b);
  UPoly sub(const UPoly& a, const UPoly& b);
  UPoly mul(const UPoly& a, const UPoly& b);
  UPoly scale(const UPoly& a, const Polynomial& c);
  UPoly monic(const UPoly& a);
  std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  UPoly rem(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  UPoly gcd(const UPoly& a, const UPoly& b);
  UPoly derivative(const UPoly& a) const;
  UPoly squarefree(const UPoly& a);

  /// Value at t, an element over the lower coordinates.
  Polynomial eval(const UPoly& a, const Rational& t);
  int sign_at(const UPoly& a, const Rational& t);

  std::vector<UPoly> sturm_sequence(const UPoly& q);
  int variations(const std::vector<UPoly>& seq, const Rational& t);
  /// Real roots of a squarefree polynomial of positive degree, increasing.
  std::vector<IsolatedRoot> isolate(const UPoly& q);

 private:
  SamplePoint& point_;
  std::size_t level_;
};

}  // namespace cadprep
