#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cadprep/experiment.hpp"

namespace cadprep {

inline constexpr const char* kCsvHeader = "problem,label,order,status,gb_ms,reduce_ms,cad_ms,total_ms,cells,tnoi";

/// Rows sorted by problem id, then label; times with 6 significant digits.
void emit_csv(std::vector<ExperimentRecord> records, std::ostream& out);
void emit_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path);
std::vector<ExperimentRecord> parse_csv(std::istream& in);

/// Censoring applied before taking logarithms, in milliseconds and cells.
inline constexpr double kTimeCutoffMs = 1'000'000;
inline constexpr double kCensoredTimeMs = 10'000'000;
inline constexpr std::uint64_t kCensoredCells = 100'000;

struct CorrelationPair {
  std::string problem;
  double x = 0;       // log tnoi(S) - log tnoi(G)
  double y_time = 0;  // log t_S - log t_G
  double y_cells = 0;
};

struct CorrelationReport {
  std::size_t pairs = 0;
  double r_time = 0;
  double r_cells = 0;
  std::string baseline;
  std::string treatment;
  std::vector<CorrelationPair> data;
  /// One entry per substituted value.
  std::vector<std::string> substitutions;
  /// Problems left out, with the reason.
  std::vector<std::string> skipped;

  static std::string censoring_rules();
};

/**
 * Pairs the baseline and treatment records of every problem and correlates
 * the tnoi log-ratio with the time and cell log-ratios. Throws
 * InvalidArgument for fewer than two usable pairs and UndefinedCorrelation
 * for a constant sample.
 */
CorrelationReport correlation_analysis(const std::vector<ExperimentRecord>& records,
                                       FormulationLabel baseline = FormulationLabel::Original,
                                       FormulationLabel treatment = FormulationLabel::GrC);

/// One row per pair, with header `problem,x,y_time,y_cells`.
void emit_csv(const CorrelationReport& report, std::ostream& out);
std::string format_report(const CorrelationReport& report);

}  // namespace cadprep
