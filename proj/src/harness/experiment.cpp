#include "cadprep/experiment.hpp"

#include <chrono>

#include "cadprep/errors.hpp"

namespace cadprep {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

RunStatus status_of(const std::exception& e) {
  if (dynamic_cast<const TimeoutError*>(&e)) return RunStatus::Timeout;
  if (dynamic_cast<const PrecisionExhausted*>(&e)) return RunStatus::PrecisionExhausted;
  if (dynamic_cast<const NotWellOriented*>(&e)) return RunStatus::NotWellOriented;
  return RunStatus::Error;
}

CadTree build(const Formulation& f, const ExperimentOptions& options, const Deadline& deadline, std::string& note) {
  CadOptions cad{options.op, options.max_refine, deadline};
  auto polys = f.polynomials();
  try {
    return build_cad(polys, f.order_used, cad);
  } catch (const NotWellOriented& e) {
    if (!options.collins_fallback || options.op == ProjectionOperator::Collins) throw;
    note = std::string("McCallum projection not well-oriented, rebuilt with Collins: ") + e.what();
  }
  cad.op = ProjectionOperator::Collins;
  return build_cad(polys, f.order_used, cad);
}

}  // namespace

std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::Timeout: return "timeout";
    case RunStatus::PrecisionExhausted: return "precision_exhausted";
    case RunStatus::NotWellOriented: return "not_well_oriented";
    case RunStatus::Error: return "error";
  }
  return "?";
}

std::optional<RunStatus> parse_run_status(std::string_view text) {
  for (auto s : {RunStatus::Ok, RunStatus::Timeout, RunStatus::PrecisionExhausted, RunStatus::NotWellOriented,
                 RunStatus::Error})
    if (to_string(s) == text) return s;
  return std::nullopt;
}

std::vector<ExperimentRecord> run_experiment(const Problem& problem, const ExperimentOptions& options) {
  if (options.budget.count() <= 0) throw InvalidArgument("time budget must be positive");
  Problem p = problem;
  if (options.order) {
    p.declared_order = *options.order;
    validate_problem(p);
  }

  std::vector<FormulationLabel> labels = options.variants;
  if (labels.empty()) {
    labels.push_back(FormulationLabel::Original);
    if (!p.equations.empty())
      labels.assign(all_formulation_labels().begin(), all_formulation_labels().end());
  }

  std::vector<ExperimentRecord> out;
  for (auto label : labels) {
    Deadline deadline = Deadline::after(options.budget);
    Formulation f = make_formulation(p, label, deadline);
    ExperimentRecord r;
    r.problem = p.id;
    r.label = label;
    r.order = p.declared_order.to_string();
    r.gb_ms = f.gb_ms;
    r.reduce_ms = f.reduce_ms;
    r.tnoi = f.tnoi;
    if (f.failed()) {
      r.status = f.timed_out ? RunStatus::Timeout : RunStatus::Error;
      r.message = *f.error;
      out.push_back(std::move(r));
      continue;
    }
    auto start = Clock::now();
    try {
      CadTree tree = build(f, options, deadline, r.message);
      r.cells = tree.cell_count();
    } catch (const Error& e) {
      r.status = status_of(e);
      r.message = e.what();
    }
    r.cad_ms = ms_since(start);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cadprep
