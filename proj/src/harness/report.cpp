#include "cadprep/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "cadprep/errors.hpp"
#include "cadprep/metrics.hpp"

namespace cadprep {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double to_double(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad number '" + s + "'", line, 1);
}

std::uint64_t to_count(const std::string& s, std::size_t line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("bad count '" + s + "'", line, 1);
  return std::stoull(s);
}

const ExperimentRecord* find(const std::vector<ExperimentRecord>& rs, const std::string& problem, FormulationLabel l) {
  for (const auto& r : rs)
    if (r.problem == problem && r.label == l) return &r;
  return nullptr;
}

}  // namespace

void emit_csv(std::vector<ExperimentRecord> records, std::ostream& out) {
  std::stable_sort(records.begin(), records.end(), [](const ExperimentRecord& a, const ExperimentRecord& b) {
    if (a.problem != b.problem) return a.problem < b.problem;
    return a.label < b.label;
  });
  out << kCsvHeader << "\n";
  for (const auto& r : records) {
    out << r.problem << "," << to_string(r.label) << "," << r.order << "," << to_string(r.status) << ","
        << num(r.gb_ms) << "," << num(r.reduce_ms) << "," << num(r.cad_ms) << "," << num(r.total_ms()) << ",";
    if (r.cells) out << *r.cells;
    out << "," << r.tnoi << "\n";
  }
}

void emit_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  emit_csv(records, out);
  if (!out) throw InvalidArgument("write to " + path.string() + " failed");
}

std::vector<ExperimentRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ParseError("missing CSV header", 1, 1);
  std::vector<ExperimentRecord> out;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    auto f = split(line);
    if (f.size() != 10) throw ParseError("expected 10 fields", number, 1);
    ExperimentRecord r;
    r.problem = f[0];
    auto label = parse_formulation_label(f[1]);
    if (!label) throw ParseError("unknown label '" + f[1] + "'", number, 1);
    r.label = *label;
    r.order = f[2];
    auto status = parse_run_status(f[3]);
    if (!status) throw ParseError("unknown status '" + f[3] + "'", number, 1);
    r.status = *status;
    r.gb_ms = to_double(f[4], number);
    r.reduce_ms = to_double(f[5], number);
    r.cad_ms = to_double(f[6], number);
    if (!f[8].empty()) r.cells = to_count(f[8], number);
    r.tnoi = to_count(f[9], number);
    out.push_back(std::move(r));
  }
  return out;
}

std::string CorrelationReport::censoring_rules() {
  return "times of runs that did not finish, or took more than " + num(kTimeCutoffMs) + " ms, are replaced by " +
         num(kCensoredTimeMs) + " ms; unknown cell counts are replaced by " + std::to_string(kCensoredCells);
}

CorrelationReport correlation_analysis(const std::vector<ExperimentRecord>& records, FormulationLabel baseline,
                                       FormulationLabel treatment) {
  CorrelationReport rep;
  rep.baseline = to_string(baseline);
  rep.treatment = to_string(treatment);

  std::vector<std::string> problems;
  for (const auto& r : records)
    if (std::find(problems.begin(), problems.end(), r.problem) == problems.end()) problems.push_back(r.problem);
  std::sort(problems.begin(), problems.end());

  auto time_of = [&](const ExperimentRecord& r) {
    if (r.status != RunStatus::Ok || r.total_ms() > kTimeCutoffMs) {
      rep.substitutions.push_back(r.problem + " " + std::string(to_string(r.label)) + ": time " +
                                  (r.status == RunStatus::Ok ? num(r.total_ms()) + " ms" : std::string(to_string(r.status))) +
                                  " -> " + num(kCensoredTimeMs) + " ms");
      return kCensoredTimeMs;
    }
    return r.total_ms();
  };
  auto cells_of = [&](const ExperimentRecord& r) {
    if (!r.cells) {
      rep.substitutions.push_back(r.problem + " " + std::string(to_string(r.label)) + ": cells unknown -> " +
                                  std::to_string(kCensoredCells));
      return static_cast<double>(kCensoredCells);
    }
    return static_cast<double>(*r.cells);
  };

  for (const auto& id : problems) {
    const ExperimentRecord* s = find(records, id, baseline);
    const ExperimentRecord* g = find(records, id, treatment);
    if (!s || !g) {
      rep.skipped.push_back(id + ": missing " + (s ? rep.treatment : rep.baseline) + " record");
      continue;
    }
    if (s->tnoi == 0 || g->tnoi == 0) {
      rep.skipped.push_back(id + ": tnoi is 0");
      continue;
    }
    double ts = time_of(*s), tg = time_of(*g);
    if (ts <= 0 || tg <= 0) {
      rep.skipped.push_back(id + ": zero time");
      continue;
    }
    double cs = cells_of(*s), cg = cells_of(*g);
    rep.data.push_back(CorrelationPair{id, std::log(double(s->tnoi)) - std::log(double(g->tnoi)),
                                       std::log(ts) - std::log(tg), std::log(cs) - std::log(cg)});
  }
  rep.pairs = rep.data.size();
  if (rep.pairs < 2) throw InvalidArgument("correlation needs at least two problems with both records");

  std::vector<double> X, Yt, Yc;
  for (const auto& d : rep.data) {
    X.push_back(d.x);
    Yt.push_back(d.y_time);
    Yc.push_back(d.y_cells);
  }
  rep.r_time = pearson(X, Yt);
  rep.r_cells = pearson(X, Yc);
  return rep;
}

void emit_csv(const CorrelationReport& report, std::ostream& out) {
  out << "problem,x,y_time,y_cells\n";
  for (const auto& d : report.data) out << d.problem << "," << num(d.x) << "," << num(d.y_time) << "," << num(d.y_cells) << "\n";
}

std::string format_report(const CorrelationReport& report) {
  std::ostringstream out;
  out << "pairs: " << report.pairs << " (" << report.baseline << " vs " << report.treatment << ")\n";
  out << "r_time: " << num(report.r_time) << "\n";
  out << "r_cells: " << num(report.r_cells) << "\n";
  out << "censoring: " << CorrelationReport::censoring_rules() << "\n";
  for (const auto& s : report.substitutions) out << "  substituted " << s << "\n";
  for (const auto& s : report.skipped) out << "  skipped " << s << "\n";
  return out.str();
}

}  // namespace cadprep
