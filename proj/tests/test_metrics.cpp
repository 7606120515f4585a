#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cadprep/errors.hpp"
#include "cadprep/metrics.hpp"
#include "cadprep/poly_algorithms.hpp"
#include "support.hpp"

using namespace cadprep;
using testing::P;

namespace {

// Pearson via the textbook single-pass sums, as an independent oracle.
double pearson_sums(const std::vector<double>& X, const std::vector<double>& Y) {
  long double n = static_cast<long double>(X.size()), sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    sx += X[i];
    sy += Y[i];
    sxx += static_cast<long double>(X[i]) * X[i];
    syy += static_cast<long double>(Y[i]) * Y[i];
    sxy += static_cast<long double>(X[i]) * Y[i];
  }
  return static_cast<double>((n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy)));
}

std::uint64_t full_sotd(std::span<const Polynomial> polys, const MonomialOrder& ord) {
  return sotd_set(project_all(polys, ord));
}

}  // namespace

TEST_CASE("set metrics on the circle") {
  auto c = testing::ctx({"x", "y"});
  std::vector<Polynomial> in{P(c, "x^2+y^2-1")};
  auto A = project_all(in, MonomialOrder::context_order(c));
  CHECK(card_set(A) == 2);
  CHECK(td_set(A) == 4);
  CHECK(sotd_set(A) == 6);
  auto report = metrics_report(A, in);
  CHECK(report.card == 2);
  CHECK(report.td == 4);
  CHECK(report.sotd == 6);
  CHECK(report.tnoi_input == 2);
  REQUIRE(report.per_level.size() == 2);
  CHECK(report.per_level[0].level == 2);
  CHECK(report.per_level[0].sotd == 4);
  CHECK(report.per_level[1].level == 1);
  CHECK(report.per_level[1].card == 1);
}

TEST_CASE("tnoi") {
  auto c = testing::ctx({"x", "y", "z"});
  std::vector<Polynomial> F{P(c, "x^2+y^2-1"), P(c, "y*z"), P(c, "x^2+y^2-1"), P(c, "3")};
  CHECK(tnoi(F) == 4);
  CHECK(tnoi(std::vector<Polynomial>{}) == 0);
  std::vector<Polynomial> grc{P(c, "x"), P(c, "y^2+z^2-2"), P(c, "z^2-1")};
  CHECK(tnoi(grc) == 4);
}

TEST_CASE("admissible orderings") {
  auto c = testing::ctx({"x", "y", "z"});
  Variable x{0}, y{1}, z{2};
  OrderingBlocks blocks{{y}, {x, z}};
  CHECK(is_admissible(MonomialOrder::parse(c, "y > x > z"), blocks));
  CHECK(is_admissible(MonomialOrder::parse(c, "y > z > x"), blocks));
  CHECK_FALSE(is_admissible(MonomialOrder::parse(c, "x > y > z"), blocks));
  CHECK(is_admissible(MonomialOrder::parse(c, "z > x > y"), {}));
  CHECK(unconstrained(c).size() == 1);
  CHECK(is_admissible(MonomialOrder::parse(c, "z > x > y"), unconstrained(c)));
}

TEST_CASE("greedy first step matches a brute-force choice") {
  auto c = testing::ctx({"x", "y"});
  std::vector<Polynomial> in{P(c, "x^4+y")};
  auto base = prepare_level(in);
  std::uint64_t best = UINT64_MAX;
  Variable pick{0};
  for (std::uint32_t v = 0; v < 2; ++v) {
    std::vector<Polynomial> next = project_once(base, Variable{v});
    std::uint64_t s = 0;
    for (const auto& p : next) s += sotd(p);
    if (s < best) {
      best = s;
      pick = Variable{v};
    }
  }
  CHECK(greedy_order(in, c).highest() == pick);

  auto d = testing::ctx({"x", "y", "z"});
  std::vector<Polynomial> spheres{P(d, "(x-1)^2+y^2+z^2-3"), P(d, "(x+1)^2+y^2+z^2-3"), P(d, "x^2+y^2-1")};
  CHECK(greedy_order(spheres, d).to_string() == "z > x > y");
  auto ex = best_order_exhaustive(spheres, d);
  CHECK(ex.order.to_string() == "z > x > y");
  CHECK(ex.sotd == 41);
}

TEST_CASE("exhaustive search limits") {
  std::vector<std::string> names;
  for (int i = 0; i < 8; ++i) names.push_back("v" + std::to_string(i));
  auto c = testing::ctx(names);
  std::vector<Polynomial> in{P(c, "v0+v7")};
  CHECK_THROWS_AS(best_order_exhaustive(in, c), InvalidArgument);
}

TEST_CASE("property: greedy never beats exhaustive and both respect blocks") {
  auto c = testing::ctx({"x", "y", "z"});
  testing::Gen g(51);
  std::vector<std::vector<std::uint32_t>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int i = 0; i < 15; ++i) {
    std::vector<Polynomial> in;
    for (int k = 0; k < 2; ++k) in.push_back(g.nonzero_polynomial(c, 3, 2, 3));
    std::uint64_t oracle = UINT64_MAX;
    for (const auto& perm : perms) {
      std::vector<Variable> prec;
      for (auto v : perm) prec.push_back(Variable{v});
      oracle = std::min(oracle, full_sotd(in, MonomialOrder(c, prec)));
    }
    auto ex = best_order_exhaustive(in, c);
    CHECK(ex.sotd == oracle);
    CHECK(full_sotd(in, ex.order) == ex.sotd);
    CHECK(full_sotd(in, greedy_order(in, c)) >= ex.sotd);

    OrderingBlocks blocks{{Variable{2}}, {Variable{0}, Variable{1}}};
    auto gb = greedy_order(in, c, blocks);
    auto eb = best_order_exhaustive(in, c, blocks);
    CHECK(is_admissible(gb, blocks));
    CHECK(is_admissible(eb.order, blocks));
    CHECK(eb.sotd >= ex.sotd);
  }
}

TEST_CASE("pearson examples") {
  std::vector<double> x{1, 2, 3, 4}, y{2, 4, 6, 8}, r{8, 6, 4, 2};
  CHECK(pearson(x, y) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pearson(x, r) == doctest::Approx(-1.0).epsilon(1e-12));
  std::vector<double> a{1, 2, 3}, b{1, 3, 2};
  CHECK(pearson(a, b) == doctest::Approx(0.5).epsilon(1e-12));
  std::vector<double> shorter{1, 2, 3};
  CHECK_THROWS_AS(pearson(x, shorter), InvalidArgument);
  std::vector<double> one{1};
  CHECK_THROWS_AS(pearson(one, one), InvalidArgument);
  std::vector<double> flat{3, 3, 3, 3};
  CHECK_THROWS_AS(pearson(x, flat), UndefinedCorrelation);
}

TEST_CASE("property: pearson symmetry, affine invariance and oracle agreement") {
  std::mt19937_64 rng(52);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 2 + i % 20;
    std::vector<double> X(n), Y(n);
    for (std::size_t k = 0; k < n; ++k) {
      X[k] = normal(rng);
      Y[k] = 0.5 * X[k] + normal(rng);
    }
    double r = pearson(X, Y);
    CHECK(r >= -1.0);
    CHECK(r <= 1.0);
    CHECK(pearson(Y, X) == doctest::Approx(r).epsilon(1e-12));
    CHECK(r == doctest::Approx(pearson_sums(X, Y)).epsilon(1e-9));
    double a = scale(rng), b = normal(rng);
    std::vector<double> AX(n), NX(n);
    std::transform(X.begin(), X.end(), AX.begin(), [&](double v) { return a * v + b; });
    std::transform(X.begin(), X.end(), NX.begin(), [&](double v) { return -a * v + b; });
    CHECK(pearson(AX, Y) == doctest::Approx(r).epsilon(1e-9));
    CHECK(pearson(NX, Y) == doctest::Approx(-r).epsilon(1e-9));
  }
}
