#include "cadprep/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>

#include "cadprep/errors.hpp"
#include "cadprep/reduction.hpp"

namespace cadprep {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct TimedBasis {
  GroebnerBasis basis;
  double ms = 0;
};

TimedBasis timed_basis(const Problem& p, Direction d, const Deadline& deadline) {
  auto start = Clock::now();
  GroebnerBasis G = precondition_basis(p, d, deadline);
  return {std::move(G), ms_since(start)};
}

Formulation build(const Problem& p, FormulationLabel label, const Deadline& deadline,
                  std::optional<TimedBasis>& compatible) {
  Formulation f;
  f.label = label;
  f.order_used = p.declared_order;
  f.constraint = p.constraint;
  double* phase = nullptr;
  auto phase_start = Clock::now();
  auto enter = [&](double* ms) {
    phase = ms;
    phase_start = Clock::now();
  };
  try {
    switch (label) {
      case FormulationLabel::Original:
        f.equations = p.equations;
        break;
      case FormulationLabel::GrR: {
        enter(&f.gb_ms);
        auto tb = timed_basis(p, Direction::Reverse, deadline);
        f.equations = tb.basis.generators();
        f.groebner_order = tb.basis.order();
        f.gb_ms = tb.ms;
        break;
      }
      default: {
        enter(&f.gb_ms);
        if (!compatible) compatible = timed_basis(p, Direction::Compatible, deadline);
        const GroebnerBasis& G = compatible->basis;
        f.equations = G.generators();
        f.groebner_order = G.order();
        f.gb_ms = compatible->ms;
        if (label == FormulationLabel::GrC) break;
        ReductionMode mode = label == FormulationLabel::GrCMainVar         ? ReductionMode::MainVar
                             : label == FormulationLabel::GrCSecondaryVars ? ReductionMode::SecondaryVars
                                                                           : ReductionMode::AllVars;
        enter(&f.reduce_ms);
        f.constraint = p.constraint.map([&](const Polynomial& q) {
          deadline.check("constraint reduction");
          return reduce_polynomial(q, G, mode);
        });
        f.reduce_ms = ms_since(phase_start);
        break;
      }
    }
    phase = nullptr;
    auto polys = f.polynomials();
    f.tnoi = tnoi(polys);
  } catch (const Error& e) {
    if (phase) *phase = ms_since(phase_start);
    f.error = e.what();
    f.timed_out = dynamic_cast<const TimeoutError*>(&e) != nullptr;
  }
  return f;
}

}  // namespace

void validate_problem(const Problem& p) {
  if (!p.context) throw InvalidArgument("problem has no variables");
  require_same_context(p.declared_order.context(), p.context);
  for (const auto& e : p.equations) {
    if (e.is_zero()) throw InvalidArgument("equation is the zero polynomial");
    if (e.context()) require_same_context(e.context(), p.context);
  }
  std::vector<bool> seen(p.context->size(), false);
  for (const auto& q : p.prefix) {
    require_variable(p.context, q.variable);
    if (seen[q.variable.index])
      throw InvalidArgument("variable '" + p.context->name(q.variable) + "' is quantified twice");
    seen[q.variable.index] = true;
  }
  if (!is_admissible(p.declared_order, quantifier_blocks(p)))
    throw InvalidArgument("order " + p.declared_order.to_string() + " splits a quantifier block");
}

OrderingBlocks quantifier_blocks(const Problem& p) {
  OrderingBlocks blocks;
  std::vector<bool> bound(p.context->size(), false);
  for (std::size_t i = 0; i < p.prefix.size(); ++i) {
    if (i == 0 || p.prefix[i].quantifier != p.prefix[i - 1].quantifier) blocks.emplace_back();
    blocks.back().push_back(p.prefix[i].variable);
    bound[p.prefix[i].variable.index] = true;
  }
  std::vector<Variable> free;
  for (std::uint32_t i = 0; i < p.context->size(); ++i)
    if (!bound[i]) free.push_back(Variable{i});
  if (!free.empty()) blocks.push_back(std::move(free));
  return blocks;
}

Formula problem_formula(const std::vector<Polynomial>& equations, const Formula& constraint) {
  std::vector<Formula> parts;
  for (const auto& e : equations) parts.push_back(Formula::atom(SignCondition{e, Relation::Eq}));
  parts.push_back(constraint);
  return Formula::conjunction(std::move(parts));
}

Formula problem_formula(const Problem& p) { return problem_formula(p.equations, p.constraint); }

GroebnerBasis precondition_basis(const Problem& p, Direction d, const Deadline& deadline) {
  if (p.equations.empty()) throw InvalidArgument("no equations to precondition");
  MonomialOrder ord = d == Direction::Compatible ? p.declared_order : p.declared_order.reversed();
  return buchberger(p.equations, ord, deadline);
}

std::vector<Polynomial> precondition_equalities(const Problem& p, Direction d, const Deadline& deadline) {
  return precondition_basis(p, d, deadline).generators();
}

std::string_view to_string(FormulationLabel l) {
  switch (l) {
    case FormulationLabel::Original: return "Original";
    case FormulationLabel::GrC: return "GrC";
    case FormulationLabel::GrR: return "GrR";
    case FormulationLabel::GrCMainVar: return "GrC+MainVar";
    case FormulationLabel::GrCSecondaryVars: return "GrC+SecondaryVars";
    case FormulationLabel::GrCAllVars: return "GrC+AllVars";
  }
  return "?";
}

const std::vector<FormulationLabel>& all_formulation_labels() {
  static const std::vector<FormulationLabel> labels{FormulationLabel::Original,   FormulationLabel::GrC,
                                                    FormulationLabel::GrR,        FormulationLabel::GrCMainVar,
                                                    FormulationLabel::GrCSecondaryVars, FormulationLabel::GrCAllVars};
  return labels;
}

std::optional<FormulationLabel> parse_formulation_label(std::string_view text) {
  for (auto l : all_formulation_labels()) {
    std::string_view name = to_string(l);
    if (name.size() != text.size()) continue;
    if (std::equal(name.begin(), name.end(), text.begin(),
                   [](char a, char b) { return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b)); }))
      return l;
  }
  return std::nullopt;
}

std::vector<Polynomial> Formulation::polynomials() const {
  std::vector<Polynomial> out = equations;
  for (auto& q : constraint.polynomials())
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  return out;
}

Formulation make_formulation(const Problem& p, FormulationLabel label, const Deadline& deadline) {
  std::optional<TimedBasis> compatible;
  return build(p, label, deadline, compatible);
}

std::vector<Formulation> enumerate_variants(const Problem& p, const Deadline& deadline) {
  std::optional<TimedBasis> compatible;
  std::vector<Formulation> out;
  for (auto l : all_formulation_labels()) {
    if (l != FormulationLabel::Original && p.equations.empty()) break;
    out.push_back(build(p, l, deadline, compatible));
  }
  return out;
}

const Formulation& recommend(const std::vector<Formulation>& variants) {
  if (variants.empty()) throw InvalidArgument("no formulations to choose from");
  std::vector<FormulationLabel> preference{FormulationLabel::Original};
  const auto& labels = all_formulation_labels();
  preference.insert(preference.end(), labels.rbegin(), labels.rend() - 1);
  const Formulation* best = nullptr;
  for (auto l : preference) {
    for (const auto& f : variants) {
      if (f.label != l || f.failed()) continue;
      if (!best || f.tnoi < best->tnoi) best = &f;
    }
  }
  return best ? *best : variants.front();
}

}  // namespace cadprep
