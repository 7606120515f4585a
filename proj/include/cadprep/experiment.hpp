#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cadprep/cad.hpp"
#include "cadprep/pipeline.hpp"

namespace cadprep {

enum class RunStatus { Ok, Timeout, PrecisionExhausted, NotWellOriented, Error };

std::string_view to_string(RunStatus s);
std::optional<RunStatus> parse_run_status(std::string_view text);

struct ExperimentRecord {
  std::string problem;
  FormulationLabel label = FormulationLabel::Original;
  std::string order;
  RunStatus status = RunStatus::Ok;
  double gb_ms = 0;
  double reduce_ms = 0;
  double cad_ms = 0;
  /// Empty when the CAD was not completed.
  std::optional<std::uint64_t> cells;
  std::uint64_t tnoi = 0;
  /// Failure text or notes; not part of the CSV.
  std::string message;

  double total_ms() const { return gb_ms + reduce_ms + cad_ms; }
};

struct ExperimentOptions {
  /// Empty selects every variant enumerate_variants would produce.
  std::vector<FormulationLabel> variants;
  /// Per variant, covering all three phases.
  std::chrono::milliseconds budget{600000};
  ProjectionOperator op = ProjectionOperator::McCallum;
  /// Rebuild with the Collins operator when the McCallum projection is not well-oriented.
  bool collins_fallback = false;
  unsigned max_refine = 64;
  /// Replaces the problem's declared order.
  std::optional<MonomialOrder> order;
};

/// One record per selected variant; failures become statuses.
std::vector<ExperimentRecord> run_experiment(const Problem& p, const ExperimentOptions& options = {});

}  // namespace cadprep
