#include <doctest.h>

#include <algorithm>

#include "cadprep/errors.hpp"
#include "cadprep/groebner.hpp"
#include "support.hpp"

using namespace cadprep;
using testing::P;

namespace {

const char* kS1 = "(x-1)^2 + y^2 + z^2 - 3";
const char* kS2 = "(x+1)^2 + y^2 + z^2 - 3";

bool closed_under_s_polynomials(const GroebnerBasis& G) {
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!normal_form(s_polynomial(gens[i], gens[j], G.order()), G).is_zero()) return false;
  return true;
}

bool is_reduced(const GroebnerBasis& G) {
  const auto& ord = G.order();
  for (const auto& g : G.generators()) {
    if (leading_monomial(g, ord).second != 1) return false;
    for (const auto& h : G.generators()) {
      if (&g == &h) continue;
      auto lm = leading_monomial(h, ord).first;
      for (const auto& t : g.terms())
        if (lm.divides(t.monomial)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("s_polynomial examples") {
  auto c = testing::ctx({"x", "y"});
  auto ord = MonomialOrder::context_order(c);
  CHECK(s_polynomial(P(c, "x*y-1"), P(c, "y^2-1"), ord) == P(c, "x-y"));
  CHECK(s_polynomial(P(c, "x*y-1"), P(c, "x*y-1"), ord).is_zero());
  CHECK(s_polynomial(P(c, "x"), P(c, "y"), ord).is_zero());
  CHECK_THROWS_AS(s_polynomial(Polynomial(c), P(c, "y"), ord), ZeroPolynomialError);
}

TEST_CASE("buchberger examples") {
  auto c = testing::ctx({"x", "y", "z"});
  auto ord = MonomialOrder::context_order(c);
  std::vector<Polynomial> spheres{P(c, kS1), P(c, kS2)};
  auto G = buchberger(spheres, ord);
  CHECK(G.generators() == std::vector<Polynomial>{P(c, "x"), P(c, "y^2+z^2-2")});
  CHECK(G.reduced());

  std::vector<Polynomial> single{P(c, "2*x-2")};
  CHECK(buchberger(single, MonomialOrder::parse(c, "z > y > x")).generators() == std::vector<Polynomial>{P(c, "x-1")});

  auto d = testing::ctx({"x", "y"});
  std::vector<Polynomial> pair{P(d, "x*y-1"), P(d, "y^2-1")};
  CHECK(buchberger(pair, MonomialOrder::context_order(d)).generators() ==
        std::vector<Polynomial>{P(d, "x-y"), P(d, "y^2-1")});

  std::vector<Polynomial> zeros{Polynomial(c)};
  CHECK(buchberger(zeros, ord).empty());
  CHECK(buchberger(std::vector<Polynomial>{}, ord).empty());

  std::vector<Polynomial> inconsistent{P(c, "x"), P(c, "x-1")};
  CHECK(buchberger(inconsistent, ord).generators() == std::vector<Polynomial>{P(c, "1")});
}

TEST_CASE("normal_form and membership") {
  auto c = testing::ctx({"x", "y", "z"});
  auto ord = MonomialOrder::context_order(c);
  GroebnerBasis G(ord, {P(c, "x"), P(c, "y^2+z^2-2")}, true);
  CHECK(normal_form(P(c, kS1), G).is_zero());
  CHECK(normal_form(P(c, "x^2+y^2-1"), G) == P(c, "1-z^2"));
  CHECK(normal_form(P(c, "x^2+y"), GroebnerBasis(ord, {}, true)) == P(c, "x^2+y"));
  CHECK(is_member(P(c, kS2), G));
  CHECK_FALSE(is_member(P(c, "1"), GroebnerBasis(ord, {P(c, "x-1")}, true)));
  CHECK(is_member(Polynomial(c), G));
}

TEST_CASE("order mismatch is an error") {
  auto c = testing::ctx({"x", "y", "z"});
  auto ord = MonomialOrder::context_order(c);
  GroebnerBasis G(ord, {P(c, "x"), P(c, "y^2+z^2-2")}, true);
  CHECK_THROWS_AS(normal_form(P(c, "x"), G, ord.reversed()), OrderMismatch);
  CHECK_NOTHROW(normal_form(P(c, "x"), G, ord));
  auto other = testing::ctx({"x", "y", "w"});
  CHECK_THROWS_AS(normal_form(P(other, "x"), G), OrderMismatch);
}

TEST_CASE("property: random systems give reduced bases closed under S-polynomials") {
  auto c = testing::ctx({"x", "y", "z"});
  testing::Gen g(21);
  std::vector<MonomialOrder> orders{MonomialOrder::context_order(c), MonomialOrder::parse(c, "z > x > y")};
  for (int i = 0; i < 25; ++i) {
    std::vector<Polynomial> S;
    for (int k = 0; k < 3; ++k) S.push_back(g.nonzero_polynomial(c, 3, 2, 3));
    const auto& ord = orders[i % 2];
    auto G = buchberger(S, ord);
    CHECK(closed_under_s_polynomials(G));
    CHECK(is_reduced(G));
    for (const auto& s : S) CHECK(normal_form(s, G).is_zero());

    std::vector<Polynomial> perm = S;
    std::reverse(perm.begin(), perm.end());
    CHECK(buchberger(perm, ord) == G);
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    CHECK(buchberger(perm, ord) == G);

    for (int k = 0; k < 4; ++k) {
      Polynomial f = g.polynomial(c, 3, 3, 4), h = g.polynomial(c, 3, 3, 4);
      Polynomial nf = normal_form(f, G);
      CHECK(normal_form(nf, G) == nf);
      CHECK(normal_form(f + h, G) == nf + normal_form(h, G));
    }
  }
}

TEST_CASE("property: basis elements vanish at common zeros") {
  // Triangular systems with a planted rational zero.
  auto c = testing::ctx({"x", "y", "z"});
  auto ord = MonomialOrder::context_order(c);
  testing::Gen g(22);
  for (int i = 0; i < 50; ++i) {
    std::map<Variable, Rational> pt{{Variable{0}, g.rational()}, {Variable{1}, g.rational()}, {Variable{2}, g.rational()}};
    std::vector<Polynomial> S;
    for (int k = 0; k < 2; ++k) {
      Polynomial p = g.nonzero_polynomial(c, 3, 2, 3);
      S.push_back(p - Polynomial(c, p.evaluate(pt)));
    }
    auto G = buchberger(S, ord);
    for (const auto& b : G.generators()) CHECK(b.evaluate(pt) == 0);
  }
}
