#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixcut/families.hpp"
#include "mixcut/instance.hpp"

namespace mixcut {

enum class Example { L, K };

std::string example_name(Example e);
Example parse_example(const std::string& name);

// Uniform instance over the first m entries of the example sequence with
// epsilon = p / m.
MixingInstance benchmark_instance(Example example, int m, int p);

struct FamilyCoverage {
  Family family = Family::Zhao;
  int covered = 0;
  Rational percent;

  bool operator==(const FamilyCoverage& other) const = default;
};

struct CoverageReport {
  std::string example;
  int m = 0;
  int p = 0;
  bool complete = false;
  bool trivial = false;  // p == 1 or p == m
  int facet_total = 0;
  std::vector<FamilyCoverage> families;
  double seconds = 0;
  std::string note;

  std::optional<Rational> percent(Family f) const;
  bool operator==(const CoverageReport& other) const;
};

struct CoverageOptions {
  std::vector<Family> families = {Family::Zhao, Family::BlpUniform,
                                  Family::BlpGeneric};
  double budget_seconds = 3600;
  // Instances with m = 10 and p >= 5 are refused unless this is set.
  bool allow_large = false;
};

// Never throws ResourceLimitError: a blown budget comes back as an
// incomplete report without percentages.
CoverageReport coverage(const MixingInstance& inst, const std::string& label,
                        const CoverageOptions& options = {});
CoverageReport coverage(Example example, int m, int p,
                        const CoverageOptions& options = {});

enum class ReportFormat { Csv, Markdown, Json };
ReportFormat parse_format(const std::string& name);

std::string emit_report(const std::vector<CoverageReport>& reports,
                        ReportFormat format);
std::vector<CoverageReport> parse_report_json(const std::string& text);

// Round-half-up to two decimals; a trailing zero in the second place is
// dropped ("60.4", "100.0", "84.62").
std::string render_percent(const Rational& percent);

// Published coverage figures for the benchmark catalog, used by the
// acceptance checks. nullopt when the cell is not listed.
struct ReferenceRow {
  double zhao;
  double blp_uniform;
  double blp_generic;
};
std::optional<ReferenceRow> reference_coverage(Example example, int m, int p);

}  // namespace mixcut
