#include <gtest/gtest.h>

#include "mixcut/bench.hpp"
#include "mixcut/errors.hpp"
#include "mixcut/hull.hpp"

using namespace mixcut;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start < text.size()) {
    const size_t end = text.find('\n', start);
    out.push_back(text.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

TEST(Catalog, BenchmarkInstances) {
  const auto l = benchmark_instance(Example::L, 10, 4);
  EXPECT_EQ(l.h(1), 20);
  EXPECT_EQ(l.h(10), 1);
  EXPECT_EQ(l.epsilon(), ratio(2, 5));
  EXPECT_EQ(l.p(), 4);
  const auto k = benchmark_instance(Example::K, 6, 3);
  EXPECT_EQ(k.h(1), 40);
  EXPECT_EQ(k.h(6), 16);
  EXPECT_EQ(k.p(), 3);
  EXPECT_THROW(benchmark_instance(Example::L, 11, 2), ValidationError);
  EXPECT_THROW(benchmark_instance(Example::L, 4, 5), ValidationError);
  EXPECT_EQ(parse_example("K"), Example::K);
  EXPECT_THROW(parse_example("Q"), ValidationError);
}

TEST(Render, RoundingAndTrailingZero) {
  EXPECT_EQ(render_percent(ratio(1100, 13)), "84.62");
  EXPECT_EQ(render_percent(Rational(100)), "100.0");
  EXPECT_EQ(render_percent(ratio(302, 5)), "60.4");
  EXPECT_EQ(render_percent(ratio(1201, 100)), "12.01");
  EXPECT_EQ(render_percent(ratio(12005, 1000)), "12.01");
  EXPECT_EQ(render_percent(Rational(0)), "0.0");
}

TEST(Coverage, SmallCellMatchesHandCount) {
  // m = 5, p = 3 has 13 nonvertical facets: 11 Zhao, 12 uniform, 13 generic.
  const auto r = coverage(Example::L, 5, 3);
  EXPECT_TRUE(r.complete);
  EXPECT_FALSE(r.trivial);
  EXPECT_EQ(r.facet_total, 13);
  ASSERT_EQ(r.families.size(), 3u);
  EXPECT_EQ(r.families[0].covered, 11);
  EXPECT_EQ(r.families[1].covered, 12);
  EXPECT_EQ(r.families[2].covered, 13);
  EXPECT_EQ(render_percent(*r.percent(Family::Zhao)), "84.62");
  EXPECT_EQ(render_percent(*r.percent(Family::BlpUniform)), "92.31");
  EXPECT_EQ(render_percent(*r.percent(Family::BlpGeneric)), "100.0");
  EXPECT_FALSE(r.percent(Family::Star));
}

TEST(Coverage, TrivialCellsAreFlagged) {
  EXPECT_TRUE(coverage(Example::K, 5, 1).trivial);
  EXPECT_TRUE(coverage(Example::K, 5, 5).trivial);
  EXPECT_FALSE(coverage(Example::K, 5, 2).trivial);
}

TEST(Coverage, LargeCellsNeedOptIn) {
  const auto r = coverage(Example::L, 10, 5);
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.note.empty());
  EXPECT_TRUE(r.families.empty() || !r.percent(Family::Zhao));
}

TEST(Coverage, BudgetExhaustionIsIncomplete) {
  CoverageOptions opt;
  opt.budget_seconds = 1e-9;
  const auto r = coverage(Example::K, 8, 5, opt);
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.note.empty());
  EXPECT_FALSE(r.percent(Family::Zhao));
}

TEST(Coverage, Deterministic) {
  EXPECT_EQ(coverage(Example::K, 7, 4), coverage(Example::K, 7, 4));
}

TEST(Coverage, DenominatorIsNonverticalCount) {
  for (int p = 2; p <= 5; ++p) {
    const auto r = coverage(Example::K, 6, p);
    EXPECT_EQ(r.facet_total,
              static_cast<int>(enumerate_facets(benchmark_instance(Example::K, 6, p)).nonvertical.size()));
    for (const auto& f : r.families) {
      EXPECT_EQ(f.percent, Rational(100 * f.covered) / r.facet_total);
    }
  }
}

TEST(Report, EmptyListIsHeaderOnly) {
  const auto md = lines(emit_report({}, ReportFormat::Markdown));
  ASSERT_EQ(md.size(), 2u);
  EXPECT_EQ(md[0],
            "| m | p | Zhao (%) | BL&P uniform (%) | Imp. uniform | BL&P generic (%) | "
            "Imp. generic | Total Imp. |");
  const auto csv = lines(emit_report({}, ReportFormat::Csv));
  ASSERT_EQ(csv.size(), 1u);
  EXPECT_EQ(emit_report({}, ReportFormat::Json), "[]\n");
}

TEST(Report, DashesForFullRows) {
  const auto r = coverage(Example::L, 4, 2);
  const auto md = lines(emit_report({r}, ReportFormat::Markdown));
  ASSERT_EQ(md.size(), 3u);
  EXPECT_EQ(md[2], "| 4 | 2 | 100.0 | 100.0 | - | 100.0 | - | - |");
}

TEST(Report, ImprovementColumnsAreExactDifferences) {
  const auto r = coverage(Example::L, 5, 3);
  const auto csv = lines(emit_report({r}, ReportFormat::Csv));
  ASSERT_EQ(csv.size(), 2u);
  // 12/13 - 11/13 = 7.69..., 13/13 - 12/13 = 7.69..., 2/13 = 15.38...
  EXPECT_EQ(csv[1], "5,3,84.62,92.31,7.69,100.0,7.69,15.38");
}

TEST(Report, JsonRoundTrip) {
  std::vector<CoverageReport> reports = {coverage(Example::L, 5, 3), coverage(Example::K, 6, 1)};
  CoverageOptions opt;
  opt.budget_seconds = 1e-9;
  reports.push_back(coverage(Example::K, 7, 3, opt));
  const auto back = parse_report_json(emit_report(reports, ReportFormat::Json));
  EXPECT_EQ(back, reports);
}

TEST(Report, ParseRejectsGarbage) {
  EXPECT_THROW(parse_report_json("{"), ValidationError);
  EXPECT_THROW(parse_report_json("{}"), ValidationError);
  EXPECT_THROW(parse_report_json("[{\"m\": 3}]"), ValidationError);
  EXPECT_THROW(parse_format("xml"), ValidationError);
  EXPECT_EQ(parse_format("md"), ReportFormat::Markdown);
}

TEST(Reference, PublishedCells) {
  const auto a = reference_coverage(Example::L, 5, 3);
  ASSERT_TRUE(a);
  EXPECT_DOUBLE_EQ(a->zhao, 84.62);
  EXPECT_DOUBLE_EQ(a->blp_uniform, 92.31);
  EXPECT_DOUBLE_EQ(a->blp_generic, 100.0);
  const auto b = reference_coverage(Example::K, 7, 5);
  ASSERT_TRUE(b);
  EXPECT_DOUBLE_EQ(b->zhao, 70.87);
  EXPECT_DOUBLE_EQ(b->blp_generic, 97.09);
  EXPECT_FALSE(reference_coverage(Example::L, 5, 1));
  EXPECT_FALSE(reference_coverage(Example::L, 11, 3));
  const auto c = reference_coverage(Example::K, 8, 2);
  ASSERT_TRUE(c);
  EXPECT_DOUBLE_EQ(c->zhao, 100.0);
}
