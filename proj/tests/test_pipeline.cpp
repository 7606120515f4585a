#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <map>

#include "cadprep/cad.hpp"
#include "cadprep/errors.hpp"
#include "cadprep/pipeline.hpp"
#include "cadprep/problem_file.hpp"
#include "support.hpp"

using namespace cadprep;
using testing::P;

namespace {

Problem spheres_lt() {
  Problem p;
  p.id = "spheres-12-lt";
  p.context = testing::ctx({"x", "y", "z"});
  p.equations = {P(p.context, "(x-1)^2+y^2+z^2-3"), P(p.context, "(x+1)^2+y^2+z^2-3")};
  p.constraint = Formula::atom({P(p.context, "x^2+y^2-1"), Relation::Lt});
  p.declared_order = MonomialOrder::context_order(p.context);
  return p;
}

const Formulation& find(const std::vector<Formulation>& vs, FormulationLabel l) {
  auto it = std::find_if(vs.begin(), vs.end(), [&](const Formulation& f) { return f.label == l; });
  REQUIRE(it != vs.end());
  return *it;
}

CadTree decompose(const Formulation& f) {
  auto polys = f.polynomials();
  try {
    return build_cad(polys, f.order_used);
  } catch (const NotWellOriented&) {
    CadOptions o;
    o.op = ProjectionOperator::Collins;
    return build_cad(polys, f.order_used, o);
  }
}

// Truth of F at the sample of a cell, computed from exact signs at the sample.
bool holds_at(const CadTree& tree, const Cell& cell, const Formula& F) {
  SamplePoint s = cell.sample;
  return F.evaluate([&](const Polynomial& q) { return s.sign(tree.to_frame(q)); });
}

std::vector<std::filesystem::path> sphere_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(std::filesystem::path(CORPUS_DIR) / "spheres"))
    out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("variants of the spheres problem") {
  Problem p = spheres_lt();
  auto vs = enumerate_variants(p);
  REQUIRE(vs.size() == 6);
  CHECK(find(vs, FormulationLabel::Original).tnoi == 8);
  CHECK(find(vs, FormulationLabel::GrC).tnoi == 5);
  CHECK(find(vs, FormulationLabel::GrR).tnoi == 5);
  CHECK(find(vs, FormulationLabel::GrCMainVar).tnoi == 4);
  CHECK(find(vs, FormulationLabel::GrCSecondaryVars).tnoi == 5);
  CHECK(find(vs, FormulationLabel::GrCAllVars).tnoi == 4);

  const auto& grc = find(vs, FormulationLabel::GrC);
  CHECK(grc.equations == std::vector<Polynomial>{P(p.context, "x"), P(p.context, "y^2+z^2-2")});
  CHECK(grc.groebner_order == p.declared_order);
  CHECK(find(vs, FormulationLabel::GrR).groebner_order == p.declared_order.reversed());
  CHECK(find(vs, FormulationLabel::GrCAllVars).constraint ==
        Formula::atom({P(p.context, "1-z^2"), Relation::Lt}));
  CHECK(find(vs, FormulationLabel::Original).equations == p.equations);
  for (const auto& f : vs) {
    CHECK_FALSE(f.failed());
    CHECK(f.order_used == p.declared_order);
    CHECK(f.tnoi == tnoi(f.polynomials()));
  }
  CHECK(recommend(vs).label == FormulationLabel::GrCAllVars);
}

TEST_CASE("labels") {
  for (auto l : all_formulation_labels()) CHECK(parse_formulation_label(to_string(l)) == l);
  CHECK(parse_formulation_label("grc+allvars") == FormulationLabel::GrCAllVars);
  CHECK_FALSE(parse_formulation_label("GrX"));
  CHECK(all_formulation_labels().size() == 6);
}

TEST_CASE("recommend tie-breaks and failures") {
  Problem p = spheres_lt();
  auto vs = enumerate_variants(p);
  std::vector<Formulation> tied{find(vs, FormulationLabel::GrC), find(vs, FormulationLabel::Original)};
  tied[0].tnoi = tied[1].tnoi;
  CHECK(recommend(tied).label == FormulationLabel::Original);
  std::vector<Formulation> broken{find(vs, FormulationLabel::GrCAllVars), find(vs, FormulationLabel::Original)};
  broken[0].error = "boom";
  CHECK(recommend(broken).label == FormulationLabel::Original);
  broken[1].error = "boom";
  CHECK(&recommend(broken) == &broken.front());
  CHECK_THROWS_AS(recommend({}), InvalidArgument);
}

TEST_CASE("problem validation and blocks") {
  Problem p = spheres_lt();
  CHECK_NOTHROW(validate_problem(p));
  Problem zero = p;
  zero.equations.push_back(Polynomial(p.context));
  CHECK_THROWS_AS(validate_problem(zero), InvalidArgument);

  Problem q = p;
  q.prefix = {{Quantifier::Exists, Variable{0}}, {Quantifier::Exists, Variable{2}}};
  CHECK_THROWS_AS(validate_problem(q), InvalidArgument);
  q.declared_order = MonomialOrder::parse(p.context, "x > z > y");
  CHECK_NOTHROW(validate_problem(q));
  auto blocks = quantifier_blocks(q);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[1] == std::vector<Variable>{Variable{1}});
  q.prefix = {{Quantifier::Exists, Variable{0}}, {Quantifier::Forall, Variable{2}}};
  CHECK(quantifier_blocks(q).size() == 3);

  Problem none = p;
  none.equations.clear();
  CHECK_THROWS_AS(precondition_equalities(none, Direction::Compatible), InvalidArgument);
  CHECK(enumerate_variants(none).size() == 1);
}

TEST_CASE("problem formula") {
  Problem p = spheres_lt();
  Formula F = problem_formula(p);
  CHECK(F.atoms().size() == 3);
  CHECK(F.polynomials().size() == 3);
  std::map<Variable, Rational> on{{Variable{0}, 0}, {Variable{1}, 0}, {Variable{2}, 1}};
  CHECK_FALSE(F.evaluate([&](const Polynomial& q) { return testing::sgn(q.evaluate(on)); }));
}

TEST_CASE("expired deadlines are recorded") {
  Problem p = spheres_lt();
  auto f = make_formulation(p, FormulationLabel::GrCAllVars, Deadline::after(std::chrono::milliseconds(0)));
  CHECK(f.failed());
  CHECK(f.timed_out);
}

TEST_CASE("property: every variant is equisatisfiable on the sphere corpus") {
  auto files = sphere_files();
  REQUIRE(files.size() == 18);
  // The six relations of one sphere pair share their polynomials, hence their decompositions.
  std::map<std::string, CadTree> trees;
  auto tree_for = [&](const Problem& p, const Formulation& f) -> const CadTree& {
    std::string key = p.id.substr(0, p.id.rfind('-')) + " " + std::string(to_string(f.label));
    auto it = trees.find(key);
    if (it == trees.end()) it = trees.emplace(key, decompose(f)).first;
    return it->second;
  };
  int compared = 0;
  for (const auto& path : files) {
    Problem p = load_problem(path);
    auto vs = enumerate_variants(p);
    const auto& orig = find(vs, FormulationLabel::Original);
    const CadTree& base = tree_for(p, orig);
    auto base_eval = evaluate_formula(base, orig.formula());
    Formula original = problem_formula(p);
    for (const Cell* c : base_eval.solution_cells) CHECK(holds_at(base, *c, original));
    for (const auto& f : vs) {
      if (f.label == FormulationLabel::Original) continue;
      INFO(p.id << " " << to_string(f.label));
      REQUIRE_FALSE(f.failed());
      const CadTree& tree = tree_for(p, f);
      auto eval = evaluate_formula(tree, f.formula());
      CHECK(eval.satisfiable == base_eval.satisfiable);
      // Solutions of the variant satisfy the original problem and vice versa.
      for (const Cell* c : eval.solution_cells) CHECK(holds_at(tree, *c, original));
      for (const Cell* c : base_eval.solution_cells) CHECK(holds_at(base, *c, f.formula()));
      ++compared;
    }
  }
  CHECK(compared == 18 * 5);
  CHECK(trees.size() == 3 * 6);
}
