#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cadprep/cad.hpp"
#include "cadprep/errors.hpp"
#include "cadprep/experiment.hpp"
#include "cadprep/metrics.hpp"
#include "cadprep/poly_text.hpp"
#include "cadprep/problem_file.hpp"
#include "cadprep/reduction.hpp"
#include "cadprep/report.hpp"

using namespace cadprep;

namespace {

constexpr int kUsage = 1;
constexpr int kFailure = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string file;
  std::vector<std::string> files;
  std::string order;
  std::string variant;
  std::vector<std::string> variants;
  std::string op = "mccallum";
  std::string csv;
  std::string mode = "all";
  std::string search = "none";
  std::string direction = "compatible";
  std::string treatment = "GrC";
  long budget_ms = 600000;
  unsigned max_refine = 64;
  bool cells = false;
  bool fallback = false;
};

Problem load(const std::string& path) {
  try {
    return load_problem(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

MonomialOrder order_for(const Problem& p, const Settings& s) {
  if (s.order.empty()) return p.declared_order;
  try {
    return MonomialOrder::parse(p.context, s.order);
  } catch (const Error& e) {
    throw UsageError(std::string("--order: ") + e.what());
  }
}

Problem with_order(Problem p, const Settings& s) {
  p.declared_order = order_for(p, s);
  try {
    validate_problem(p);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("--order: ") + e.what());
  }
  return p;
}

ProjectionOperator operator_for(const Settings& s) {
  auto op = parse_projection_operator(s.op);
  if (!op) throw UsageError("--operator must be mccallum or collins");
  return *op;
}

FormulationLabel label_for(const std::string& text) {
  auto l = parse_formulation_label(text);
  if (!l) throw UsageError("unknown variant '" + text + "'");
  return *l;
}

ReductionMode mode_for(const Settings& s) {
  if (s.mode == "main") return ReductionMode::MainVar;
  if (s.mode == "secondary") return ReductionMode::SecondaryVars;
  if (s.mode == "all") return ReductionMode::AllVars;
  throw UsageError("--mode must be main, secondary or all");
}

Direction direction_for(const Settings& s) {
  if (s.direction == "compatible") return Direction::Compatible;
  if (s.direction == "reverse") return Direction::Reverse;
  throw UsageError("--direction must be compatible or reverse");
}

Deadline deadline_for(const Settings& s) {
  if (s.budget_ms <= 0) throw UsageError("--budget-ms must be positive");
  return Deadline::after(std::chrono::milliseconds(s.budget_ms));
}

Formulation formulation_for(const Problem& p, const Settings& s, const Deadline& d) {
  Formulation f = make_formulation(p, label_for(s.variant.empty() ? "Original" : s.variant), d);
  if (f.failed()) {
    if (f.timed_out) throw TimeoutError(*f.error);
    throw InvalidArgument(*f.error);
  }
  return f;
}

std::string describe(const Coordinate& c) {
  if (c.value) return c.value->get_str();
  Rational m = (c.lo + c.hi) / 2;
  double mid = m.get_d();
  std::ostringstream out;
  out << "root of " << format_polynomial(c.defining) << " in (" << c.lo.get_str() << ", " << c.hi.get_str()
      << ") ~ " << std::setprecision(8) << mid;
  return out.str();
}

int cmd_groebner(const Settings& s) {
  Problem p = with_order(load(s.file), s);
  auto G = precondition_basis(p, direction_for(s), deadline_for(s));
  std::cout << "# order " << G.order().to_string() << "\n";
  for (const auto& g : G.generators()) std::cout << format_polynomial(g) << "\n";
  return 0;
}

int cmd_normalform(const Settings& s) {
  Problem p = with_order(load(s.file), s);
  auto G = precondition_basis(p, Direction::Compatible, deadline_for(s));
  ReductionMode mode = mode_for(s);
  for (const auto& c : p.constraint.atoms())
    std::cout << c.to_string() << "  ->  " << SignCondition{reduce_polynomial(c.poly, G, mode), c.rel}.to_string()
              << "\n";
  return 0;
}

int cmd_precondition(const Settings& s) {
  Problem p = with_order(load(s.file), s);
  Settings t = s;
  if (t.variant.empty()) t.variant = "GrC+AllVars";
  Formulation f = formulation_for(p, t, deadline_for(s));
  Problem out = p;
  out.id = p.id + "-" + std::string(to_string(f.label));
  out.equations = f.equations;
  out.constraint = f.constraint;
  std::cout << format_problem(out);
  return 0;
}

int cmd_metrics(const Settings& s) {
  Problem p = with_order(load(s.file), s);
  Formulation f = formulation_for(p, s, deadline_for(s));
  auto polys = f.polynomials();
  ProjectionOperator op = operator_for(s);
  MonomialOrder ord = p.declared_order;
  if (s.search == "greedy") {
    ord = greedy_order(polys, p.context, quantifier_blocks(p), op, deadline_for(s));
  } else if (s.search == "exhaustive") {
    ord = best_order_exhaustive(polys, p.context, quantifier_blocks(p), op, false, deadline_for(s)).order;
  } else if (s.search != "none") {
    throw UsageError("--search must be none, greedy or exhaustive");
  }
  auto report = metrics_report(project_all(polys, ord, op, deadline_for(s)), polys);
  std::cout << "order: " << ord.to_string() << "\n"
            << "card: " << report.card << "\n"
            << "td: " << report.td << "\n"
            << "sotd: " << report.sotd << "\n"
            << "tnoi: " << report.tnoi_input << "\n";
  for (const auto& l : report.per_level)
    std::cout << "  A_" << l.level << ": card " << l.card << ", sotd " << l.sotd << "\n";
  return 0;
}

void print_variant_row(const Formulation& f) {
  std::cout << std::left << std::setw(20) << to_string(f.label) << std::setw(6) << f.tnoi << std::setw(6)
            << f.equations.size() << std::setw(6) << f.constraint.polynomials().size();
  if (f.failed()) std::cout << "failed: " << *f.error;
  std::cout << "\n";
}

int cmd_variants(const Settings& s) {
  Problem p = with_order(load(s.file), s);
  auto vs = enumerate_variants(p, deadline_for(s));
  std::cout << std::left << std::setw(20) << "label" << std::setw(6) << "tnoi" << std::setw(6) << "eqs" << std::setw(6)
            << "cons" << "\n";
  for (const auto& f : vs) print_variant_row(f);
  return 0;
}

int cmd_recommend(const Settings& s) {
  Problem p = with_order(load(s.file), s);
  auto vs = enumerate_variants(p, deadline_for(s));
  const auto& best = recommend(vs);
  std::cout << to_string(best.label) << " (tnoi " << best.tnoi << ")\n";
  return 0;
}

void print_cells(const CadTree& tree, const std::vector<Cell>& cells) {
  for (const auto& c : cells) {
    if (!c.is_leaf()) {
      print_cells(tree, c.children);
      continue;
    }
    std::cout << "(";
    for (std::size_t i = 0; i < c.index.size(); ++i) std::cout << (i ? "," : "") << c.index[i];
    std::cout << ")";
    for (std::size_t j = 0; j < c.sample.dimension(); ++j)
      std::cout << "  " << tree.frame_context()->name(Variable{static_cast<std::uint32_t>(j)}) << " = "
                << describe(c.sample.coordinate(j));
    std::cout << "\n";
  }
}

int cmd_cad(const Settings& s) {
  Problem p = with_order(load(s.file), s);
  Deadline d = deadline_for(s);
  Formulation f = formulation_for(p, s, d);
  auto polys = f.polynomials();
  CadOptions options{operator_for(s), s.max_refine, d};
  CadTree tree = build_cad(polys, f.order_used, options);
  auto eval = evaluate_formula(tree, f.formula(), !p.prefix.empty());
  std::cout << "variant: " << to_string(f.label) << "\n"
            << "order: " << f.order_used.to_string() << "\n"
            << "operator: " << to_string(options.op) << "\n"
            << "cells: " << tree.cell_count() << "\n"
            << "solution cells: " << eval.solution_cells.size() << "\n"
            << "satisfiable: " << (eval.satisfiable ? "yes" : "no")
            << (eval.prefix_unevaluated ? " (quantifier-free matrix)" : "") << "\n";
  if (s.cells) print_cells(tree, tree.base());
  return 0;
}

int cmd_bench(const Settings& s) {
  ExperimentOptions options;
  for (const auto& v : s.variants) options.variants.push_back(label_for(v));
  if (s.budget_ms <= 0) throw UsageError("--budget-ms must be positive");
  options.budget = std::chrono::milliseconds(s.budget_ms);
  options.op = operator_for(s);
  options.collins_fallback = s.fallback;
  options.max_refine = s.max_refine;
  std::vector<ExperimentRecord> records;
  for (const auto& file : s.files) {
    Problem p = load(file);
    if (!s.order.empty()) options.order = order_for(p, s);
    auto rs = run_experiment(p, options);
    for (const auto& r : rs)
      if (!r.message.empty()) std::cerr << r.problem << " " << to_string(r.label) << ": " << r.message << "\n";
    records.insert(records.end(), rs.begin(), rs.end());
  }
  if (s.csv.empty()) {
    emit_csv(records, std::cout);
  } else {
    emit_csv(records, std::filesystem::path(s.csv));
  }
  return 0;
}

int cmd_correlate(const Settings& s) {
  std::ifstream in(s.file);
  if (!in) throw UsageError("cannot open " + s.file);
  std::vector<ExperimentRecord> records;
  try {
    records = parse_csv(in);
  } catch (const ParseError& e) {
    throw UsageError(s.file + ": " + e.what());
  }
  auto report = correlation_analysis(records, FormulationLabel::Original, label_for(s.treatment));
  std::cout << format_report(report);
  if (!s.csv.empty()) {
    std::ofstream out(s.csv);
    if (!out) throw UsageError("cannot write " + s.csv);
    emit_csv(report, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner preconditioning and cylindrical algebraic decomposition"};
  app.require_subcommand(1);
  Settings s;

  auto add_file = [&](CLI::App* c) { c->add_option("file", s.file, "problem file")->required(); };
  auto add_order = [&](CLI::App* c) { c->add_option("--order", s.order, "variable precedence, e.g. \"x > y > z\""); };
  auto add_budget = [&](CLI::App* c) { c->add_option("--budget-ms", s.budget_ms, "time budget in milliseconds"); };
  auto add_variant = [&](CLI::App* c) { c->add_option("--variant", s.variant, "formulation label"); };
  auto add_operator = [&](CLI::App* c) { c->add_option("--operator", s.op, "projection operator: mccallum or collins"); };

  auto* groebner = app.add_subcommand("groebner", "reduced lex Groebner basis of the equations");
  add_file(groebner);
  add_order(groebner);
  add_budget(groebner);
  groebner->add_option("--direction", s.direction, "compatible or reverse");

  auto* normalform = app.add_subcommand("normalform", "reduce the constraint polynomials by the basis");
  add_file(normalform);
  add_order(normalform);
  add_budget(normalform);
  normalform->add_option("--mode", s.mode, "main, secondary or all");

  auto* precondition = app.add_subcommand("precondition", "print a preconditioned formulation as a problem file");
  add_file(precondition);
  add_order(precondition);
  add_budget(precondition);
  add_variant(precondition);

  auto* metrics = app.add_subcommand("metrics", "projection-set measures");
  add_file(metrics);
  add_order(metrics);
  add_budget(metrics);
  add_variant(metrics);
  add_operator(metrics);
  metrics->add_option("--search", s.search, "none, greedy or exhaustive");

  auto* variants = app.add_subcommand("variants", "list every formulation with its tnoi");
  add_file(variants);
  add_order(variants);
  add_budget(variants);

  auto* recommend_cmd = app.add_subcommand("recommend", "formulation with the least tnoi");
  add_file(recommend_cmd);
  add_order(recommend_cmd);
  add_budget(recommend_cmd);

  auto* cad = app.add_subcommand("cad", "build a full CAD and evaluate the formula");
  add_file(cad);
  add_order(cad);
  add_budget(cad);
  add_variant(cad);
  add_operator(cad);
  cad->add_option("--max-refine", s.max_refine, "refinement steps per sign decision");
  cad->add_flag("--cells", s.cells, "list the leaf cells");

  auto* bench = app.add_subcommand("bench", "time every variant and write CSV records");
  bench->add_option("files", s.files, "problem files")->required();
  add_order(bench);
  add_budget(bench);
  add_operator(bench);
  bench->add_option("--variant", s.variants, "formulation labels (repeatable)");
  bench->add_option("--csv", s.csv, "output path (default stdout)");
  bench->add_option("--max-refine", s.max_refine, "refinement steps per sign decision");
  bench->add_flag("--fallback", s.fallback, "rebuild with Collins when McCallum is not well-oriented");

  auto* correlate = app.add_subcommand("correlate", "correlate tnoi ratios with time and cell ratios");
  correlate->add_option("file", s.file, "CSV produced by bench")->required();
  correlate->add_option("--variant", s.treatment, "preconditioned label compared against Original");
  correlate->add_option("--csv", s.csv, "write the per-problem pairs here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*groebner) return cmd_groebner(s);
    if (*normalform) return cmd_normalform(s);
    if (*precondition) return cmd_precondition(s);
    if (*metrics) return cmd_metrics(s);
    if (*variants) return cmd_variants(s);
    if (*recommend_cmd) return cmd_recommend(s);
    if (*cad) return cmd_cad(s);
    if (*bench) return cmd_bench(s);
    if (*correlate) return cmd_correlate(s);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
