#include <doctest.h>

#include "cadprep/errors.hpp"
#include "cadprep/monomial_order.hpp"
#include "cadprep/poly_algorithms.hpp"
#include "support.hpp"

using namespace cadprep;
using testing::P;
using testing::Q;

namespace {

const char* kS1 = "(x-1)^2 + y^2 + z^2 - 3";
const char* kS2 = "(x+1)^2 + y^2 + z^2 - 3";
const char* kS4 = "(x+1)^2 + (y+2/3)^2 + (z+3/4)^2 - 3";

}  // namespace

TEST_CASE("variables and contexts") {
  CHECK_THROWS_AS(VariableContext::create({"x", "x"}), InvalidArgument);
  CHECK_THROWS_AS(VariableContext::create({"1x"}), InvalidArgument);
  auto c = testing::ctx({"x", "y"});
  CHECK(c->find("y")->index == 1);
  CHECK_FALSE(c->find("z"));
  auto other = testing::ctx({"x", "w"});
  CHECK_THROWS_AS(P(c, "x") + P(other, "x"), ContextMismatch);
}

TEST_CASE("compare_monomials under lex") {
  auto c = testing::ctx({"x", "y"});
  MonomialOrder xy = MonomialOrder::parse(c, "x > y");
  auto lm = [&](const char* t) { return P(c, t).leading_term().monomial; };
  CHECK(compare_monomials(lm("x"), lm("y"), xy) == Ordering::Greater);
  CHECK(compare_monomials(lm("x*y^2"), lm("x^2"), xy) == Ordering::Less);
  CHECK(compare_monomials(lm("x*y"), lm("x*y"), xy) == Ordering::Equal);
  MonomialOrder yx = MonomialOrder::parse(c, "y > x");
  CHECK(compare_monomials(lm("x"), lm("y"), yx) == Ordering::Less);
  auto d = testing::ctx({"x", "y", "z"});
  CHECK_THROWS_AS(compare_monomials(P(d, "z").leading_term().monomial, lm("x"), xy), ContextMismatch);
}

TEST_CASE("arith") {
  auto c = testing::ctx({"x", "y", "z"});
  CHECK((P(c, "x-1") + P(c, "1-x")).is_zero());
  CHECK(P(c, kS1) - P(c, kS2) == P(c, "-4*x"));
  CHECK(arith(P(c, kS1), P(c, kS2), ArithOp::Sub) == P(c, "-4*x"));
  CHECK(P(c, kS4) * P(c, "1") == P(c, kS4));
  CHECK(arith(P(c, "x+1"), P(c, "x-1"), ArithOp::Mul) == P(c, "x^2-1"));
}

TEST_CASE("leading_monomial") {
  auto c = testing::ctx({"x", "y", "z"});
  MonomialOrder ord = MonomialOrder::context_order(c);
  auto [m, k] = leading_monomial(P(c, "x^2+y^2-1"), ord);
  CHECK(m == P(c, "x^2").leading_term().monomial);
  CHECK(k == 1);
  auto [m5, k5] = leading_monomial(P(c, "5"), ord);
  CHECK(m5.is_one());
  CHECK(k5 == 5);
  CHECK(leading_monomial(P(c, kS1), ord).first == P(c, "x^2").leading_term().monomial);
  CHECK_THROWS_AS(leading_monomial(Polynomial(c), ord), ZeroPolynomialError);
  MonomialOrder zyx = MonomialOrder::parse(c, "z > y > x");
  CHECK(leading_monomial(P(c, "x^3 + z"), zyx).first == P(c, "z").leading_term().monomial);
}

TEST_CASE("degrees, sotd and noi") {
  auto c = testing::ctx({"x", "y", "z"});
  CHECK(total_degree(P(c, "x^2*y + z")) == 3);
  CHECK(total_degree(P(c, "7")) == 0);
  CHECK(total_degree(P(c, "x^2+y^2-1")) == 2);
  CHECK_THROWS_AS(total_degree(Polynomial(c)), ZeroPolynomialError);
  CHECK(sotd(P(c, "x^2*y + z")) == 4);
  CHECK(sotd(P(c, "x^2+y^2-1")) == 4);
  CHECK(sotd(Polynomial(c)) == 0);
  CHECK(noi(P(c, "x^2+y^2-1")) == 2);
  CHECK(noi(P(c, kS4)) == 3);
  CHECK(noi(P(c, "7")) == 0);
}

TEST_CASE("derivative and substitute") {
  auto c = testing::ctx({"x", "y", "z"});
  Variable x{0}, z{2};
  CHECK(derivative(P(c, "x^2+y^2-1"), x) == P(c, "2*x"));
  CHECK(derivative(P(c, "y^2"), x).is_zero());
  CHECK(derivative(P(c, kS1), z) == P(c, "2*z"));
  CHECK(substitute(P(c, "x^2+y^2-1"), {{x, Q(0)}}) == P(c, "y^2-1"));
  CHECK(substitute(P(c, kS1), {{x, Q(0)}}) == P(c, "y^2+z^2-2"));
  CHECK(substitute(P(c, kS1), {}) == P(c, kS1));
  CHECK(P(c, "x*y + 1/2").evaluate({{x, Q(2)}, {Variable{1}, Q(3, 4)}}) == Q(2));
}

TEST_CASE("parser errors carry positions") {
  auto c = testing::ctx({"x", "y"});
  try {
    parse_polynomial(c, "x + 2 w");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_polynomial(c, "x^y"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(c, "x + q"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(c, "(x + 1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(c, "x / y"), ParseError);
  CHECK(parse_polynomial(c, "3/6*x") == P(c, "1/2*x"));
}

TEST_CASE("resultant examples") {
  auto c = testing::ctx({"x", "y"});
  Variable x{0};
  CHECK(resultant(P(c, "x^2-2"), P(c, "x-y"), x) == P(c, "y^2-2"));
  CHECK(resultant(P(c, "x^3+y*x+1"), P(c, "5"), x) == P(c, "125"));
  CHECK(resultant(P(c, "x-1"), P(c, "x+1"), x) == P(c, "2"));
  CHECK_THROWS_AS(resultant(P(c, "y"), P(c, "y+1"), x), InvalidArgument);
}

TEST_CASE("discriminant examples") {
  auto c = testing::ctx({"x", "y", "b", "cc"});
  Variable x{0}, y{1};
  CHECK(discriminant(P(c, "x^2+b*x+cc"), x) == P(c, "b^2-4*cc"));
  CHECK(discriminant(P(c, "x^2+y^2-1"), y) == P(c, "-4*x^2+4"));
  CHECK(discriminant(P(c, "(x-1)^2"), x).is_zero());
  CHECK_THROWS_AS(discriminant(P(c, "x*y+1"), x), InvalidArgument);
}

TEST_CASE("gcd and squarefree part") {
  auto c = testing::ctx({"x", "y"});
  CHECK(gcd(P(c, "x^2-y^2"), P(c, "x^2+2*x*y+y^2")) == P(c, "x+y"));
  CHECK(gcd(P(c, "2*x+2"), P(c, "3*x+3")) == P(c, "x+1"));
  CHECK(squarefree_part(P(c, "(x-1)^2*(y+1)^3*4")) == P(c, "(x-1)*(y+1)"));
  CHECK(try_divide(P(c, "x^2-1"), P(c, "x+1")) == P(c, "x-1"));
  CHECK_FALSE(try_divide(P(c, "x^2+1"), P(c, "x+1")));
}

TEST_CASE("property: canonical form and ring laws") {
  auto c = testing::ctx({"x", "y", "z"});
  testing::Gen g(11);
  for (int i = 0; i < 120; ++i) {
    Polynomial p = g.polynomial(c, 3, 4, 5), q = g.polynomial(c, 3, 4, 5), r = g.polynomial(c, 3, 4, 5);
    CHECK(parse_polynomial(c, format_polynomial(p)) == p);
    CHECK(p + q == q + p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    if (!p.is_zero()) {
      CHECK(sotd(p) >= total_degree(p));
      CHECK(noi(p) <= c->size());
    }
  }
}

TEST_CASE("property: resultant equals the Sylvester determinant") {
  auto c = testing::ctx({"x", "y", "z"});
  Variable x{0};
  testing::Gen g(12);
  int checked = 0;
  while (checked < 60) {
    Polynomial p = g.polynomial(c, 3, 4, 4), q = g.polynomial(c, 3, 3, 4);
    if (p.degree(x) == 0 || q.degree(x) == 0 || p.degree(x) + q.degree(x) > 8) continue;
    CHECK(resultant(p, q, x) == testing::sylvester_laplace(p, q, x));
    CHECK(principal_subresultant_coefficient(p, q, x, 0) == resultant(p, q, x));
    ++checked;
  }
}

TEST_CASE("property: resultant specializes") {
  auto c = testing::ctx({"x", "y"});
  Variable x{0}, y{1};
  testing::Gen g(13);
  int checked = 0;
  while (checked < 60) {
    Polynomial p = g.polynomial(c, 2, 4, 4), q = g.polynomial(c, 2, 3, 4);
    if (p.degree(x) == 0 || q.degree(x) == 0) continue;
    Rational a = g.rational();
    Polynomial pa = p.substitute(y, a), qa = q.substitute(y, a);
    if (pa.degree(x) != p.degree(x) || qa.degree(x) != q.degree(x)) continue;
    CHECK(resultant(p, q, x).substitute(y, a) == resultant(pa, qa, x));
    ++checked;
  }
}

TEST_CASE("property: resultant vanishes iff there is a common factor") {
  auto c = testing::ctx({"x", "y"});
  Variable x{0};
  testing::Gen g(14);
  int checked = 0;
  while (checked < 40) {
    Polynomial h = g.polynomial(c, 2, 2, 3);
    Polynomial p = g.polynomial(c, 2, 2, 3), q = g.polynomial(c, 2, 2, 3);
    if (h.degree(x) == 0 || p.is_zero() || q.is_zero()) continue;
    CHECK(resultant(p * h, q * h, x).is_zero());
    if (p.degree(x) > 0 && q.degree(x) > 0 && gcd(p, q).degree(x) == 0) CHECK_FALSE(resultant(p, q, x).is_zero());
    ++checked;
  }
}
