#include "mixcut/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "mixcut/errors.hpp"
#include "mixcut/hull.hpp"

namespace mixcut {
namespace {

constexpr std::array<int, 10> kSequenceL = {20, 18, 14, 11, 6, 5, 4, 3, 2, 1};
constexpr std::array<int, 10> kSequenceK = {40, 38, 34, 31, 26, 16, 8, 4, 2, 1};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct RefCell {
  int m;
  int p;
  double zhao;
  double uniform;
  double generic;
};

// Non-trivial published cells; every other 2 <= p <= m - 1 cell with m <= 10
// and p in {2, m - 1} is 100 / 100 / 100.
const std::vector<RefCell>& reference_cells(Example e) {
  static const std::vector<RefCell> l = {
      {5, 3, 84.62, 92.31, 100.0}, {6, 3, 72.73, 86.36, 100.0},
      {6, 4, 76.32, 86.84, 100.0}, {7, 3, 64.71, 82.35, 100.0},
      {7, 4, 59.3, 76.74, 100.0},  {7, 5, 63.0, 75.0, 100.0},
      {8, 3, 59.18, 79.59, 100.0}, {8, 4, 48.81, 70.24, 100.0},
      {8, 5, 41.95, 60.4, 100.0},  {8, 6, 61.43, 71.43, 100.0},
      {9, 3, 55.22, 77.61, 100.0}, {9, 4, 41.98, 65.87, 100.0},
      {9, 5, 31.95, 53.39, 100.0}, {9, 6, 37.78, 54.07, 100.0},
      {9, 7, 60.81, 70.95, 99.77}, {10, 3, 52.27, 76.14, 100.0},
      {10, 4, 37.23, 62.77, 100.0},
  };
  static const std::vector<RefCell> k = {
      {5, 3, 84.62, 92.31, 100.0}, {6, 3, 72.73, 86.36, 100.0},
      {6, 4, 76.32, 86.84, 100.0}, {7, 3, 64.71, 82.35, 100.0},
      {7, 4, 59.3, 76.74, 100.0},  {7, 5, 70.87, 80.58, 97.09},
      {8, 3, 59.18, 79.59, 100.0}, {8, 4, 48.81, 70.24, 100.0},
      {8, 5, 48.97, 64.01, 92.92}, {8, 6, 62.8, 70.4, 96.0},
      {9, 3, 55.22, 77.61, 100.0}, {9, 4, 41.98, 65.87, 100.0},
      {9, 5, 37.51, 54.83, 91.34}, {9, 6, 35.88, 48.6, 90.92},
      {9, 7, 53.59, 61.27, 95.66}, {10, 3, 52.27, 76.14, 100.0},
      {10, 4, 37.23, 62.77, 100.0},
  };
  return e == Example::L ? l : k;
}

std::string percent_cell(const CoverageReport& r, Family f) {
  const auto v = r.percent(f);
  return v ? render_percent(*v) : std::string("-");
}

// Exact difference of two family percentages, "-" when zero or unknown.
std::string improvement_cell(const CoverageReport& r, Family hi, Family lo) {
  const auto a = r.percent(hi);
  const auto b = r.percent(lo);
  if (!a || !b || *a == *b) return "-";
  return render_percent(*a - *b);
}

std::string family_key(Family f) { return family_name(f); }

}  // namespace

std::string example_name(Example e) { return e == Example::L ? "L" : "K"; }

Example parse_example(const std::string& name) {
  if (name == "L" || name == "l") return Example::L;
  if (name == "K" || name == "k") return Example::K;
  throw ValidationError("unknown example '" + name + "' (expected L or K)");
}

MixingInstance benchmark_instance(Example example, int m, int p) {
  if (m < 1 || m > 10) throw ValidationError("m must lie in 1..10");
  if (p < 1 || p > m) throw ValidationError("p must lie in 1..m");
  const auto& seq = example == Example::L ? kSequenceL : kSequenceK;
  std::vector<Rational> h;
  for (int i = 0; i < m; ++i) h.emplace_back(seq[i]);
  return build_instance(m, std::move(h), std::nullopt, ratio(p, m));
}

std::optional<Rational> CoverageReport::percent(Family f) const {
  if (!complete) return std::nullopt;
  for (const auto& fc : families) {
    if (fc.family == f) return fc.percent;
  }
  return std::nullopt;
}

bool CoverageReport::operator==(const CoverageReport& other) const {
  // Wall time is not part of the identity of a report.
  return std::tie(example, m, p, complete, trivial, facet_total, families, note) ==
         std::tie(other.example, other.m, other.p, other.complete, other.trivial,
                  other.facet_total, other.families, other.note);
}

CoverageReport coverage(const MixingInstance& inst, const std::string& label,
                        const CoverageOptions& options) {
  const auto start = Clock::now();
  CoverageReport rep;
  rep.example = label;
  rep.m = inst.m();
  rep.p = inst.p();
  rep.trivial = rep.p <= 1 || rep.p >= rep.m;
  if (rep.m == 10 && rep.p >= 5 && !options.allow_large) {
    rep.note = "m = 10 with p >= 5 is excluded by default";
    return rep;
  }
  try {
    HullOptions hopt;
    hopt.budget_seconds = options.budget_seconds;
    const FacetSet fs = enumerate_facets(inst, hopt);
    rep.facet_total = static_cast<int>(fs.nonvertical.size());
    for (Family f : options.families) {
      FamilyCoverage fc;
      fc.family = f;
      for (const auto& facet : fs.nonvertical) {
        if (options.budget_seconds > 0 && seconds_since(start) > options.budget_seconds) {
          throw ResourceLimitError("coverage budget exhausted");
        }
        fc.covered += member_of(inst, facet, f).member ? 1 : 0;
      }
      fc.percent = rep.facet_total == 0 ? Rational(0)
                                        : ratio(100L * fc.covered, rep.facet_total);
      rep.families.push_back(fc);
    }
    rep.complete = true;
  } catch (const ResourceLimitError& e) {
    rep.families.clear();
    rep.facet_total = 0;
    rep.note = std::string("incomplete: ") + e.what();
  }
  rep.seconds = seconds_since(start);
  return rep;
}

CoverageReport coverage(Example example, int m, int p, const CoverageOptions& options) {
  return coverage(benchmark_instance(example, m, p), example_name(example), options);
}

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "md" || name == "markdown") return ReportFormat::Markdown;
  if (name == "json") return ReportFormat::Json;
  throw ValidationError("unknown format '" + name + "' (expected csv, md or json)");
}

std::string render_percent(const Rational& percent) {
  std::string s = to_decimal(percent, 2);
  // "100.00" -> "100.0", "60.40" -> "60.4", "84.62" stays.
  if (s.size() >= 2 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  return s;
}

std::string emit_report(const std::vector<CoverageReport>& reports, ReportFormat format) {
  static const std::vector<std::string> header = {
      "m", "p", "Zhao (%)", "BL&P uniform (%)", "Imp. uniform",
      "BL&P generic (%)", "Imp. generic", "Total Imp."};
  if (format == ReportFormat::Json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) {
      nlohmann::json j;
      j["example"] = r.example;
      j["m"] = r.m;
      j["p"] = r.p;
      j["complete"] = r.complete;
      j["trivial"] = r.trivial;
      j["facet_total"] = r.facet_total;
      j["seconds"] = r.seconds;
      j["note"] = r.note;
      nlohmann::json fams = nlohmann::json::array();
      for (const auto& fc : r.families) {
        fams.push_back({{"family", family_key(fc.family)},
                        {"covered", fc.covered},
                        {"percent", to_string(fc.percent)},
                        {"rendered", render_percent(fc.percent)}});
      }
      j["families"] = fams;
      out.push_back(j);
    }
    return out.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    rows.push_back({std::to_string(r.m), std::to_string(r.p),
                    percent_cell(r, Family::Zhao), percent_cell(r, Family::BlpUniform),
                    improvement_cell(r, Family::BlpUniform, Family::Zhao),
                    percent_cell(r, Family::BlpGeneric),
                    improvement_cell(r, Family::BlpGeneric, Family::BlpUniform),
                    improvement_cell(r, Family::BlpGeneric, Family::Zhao)});
  }
  std::ostringstream os;
  if (format == ReportFormat::Csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (size_t k = 0; k < cells.size(); ++k) {
        const bool quote = cells[k].find_first_of(",\"") != std::string::npos;
        os << (k ? "," : "") << (quote ? "\"" + cells[k] + "\"" : cells[k]);
      }
      os << "\n";
    };
    line(header);
    for (const auto& row : rows) line(row);
    return os.str();
  }
  auto line = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (const auto& c : cells) os << " " << c << " |";
    os << "\n";
  };
  line(header);
  os << "|";
  for (size_t k = 0; k < header.size(); ++k) os << "---|";
  os << "\n";
  for (const auto& row : rows) line(row);
  return os.str();
}

std::vector<CoverageReport> parse_report_json(const std::string& text) {
  std::vector<CoverageReport> out;
  try {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw ValidationError("report JSON must be an array");
    for (const auto& j : doc) {
      CoverageReport r;
      r.example = j.at("example").get<std::string>();
      r.m = j.at("m").get<int>();
      r.p = j.at("p").get<int>();
      r.complete = j.at("complete").get<bool>();
      r.trivial = j.at("trivial").get<bool>();
      r.facet_total = j.at("facet_total").get<int>();
      r.seconds = j.value("seconds", 0.0);
      r.note = j.value("note", std::string());
      for (const auto& f : j.at("families")) {
        FamilyCoverage fc;
        fc.family = parse_family(f.at("family").get<std::string>());
        fc.covered = f.at("covered").get<int>();
        fc.percent = parse_rational(f.at("percent").get<std::string>());
        r.families.push_back(fc);
      }
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed report JSON: ") + e.what());
  }
  return out;
}

std::optional<ReferenceRow> reference_coverage(Example example, int m, int p) {
  if (m < 3 || m > 10 || p < 2 || p > m - 1) return std::nullopt;
  for (const auto& c : reference_cells(example)) {
    if (c.m == m && c.p == p) return ReferenceRow{c.zhao, c.uniform, c.generic};
  }
  if (p == 2 || p == m - 1) return ReferenceRow{100.0, 100.0, 100.0};
  return std::nullopt;
}

}  // namespace mixcut
