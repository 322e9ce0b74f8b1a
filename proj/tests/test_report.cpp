#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qpb/errors.hpp"
#include "qpb/report.hpp"
#include "qpb/suites.hpp"

using namespace qpb;

TEST(EmitReport, EmptyJson) {
  EXPECT_EQ(emit_report({}, ReportFormat::json), "[]");
}

TEST(EmitReport, SinglePassingObject) {
  const CheckReport r = CheckReport::evaluate("weyl_xp_commutator", 0.0, 0.0, {{"cases", std::int64_t{1}}});
  const std::string json = emit_report({r}, ReportFormat::json);
  EXPECT_NE(json.find("\"pass\": true"), std::string::npos);
  EXPECT_NE(json.find("\"check_id\": \"weyl_xp_commutator\""), std::string::npos);
  EXPECT_NE(json.find("\"paper_ref\": \"" + paper_ref_for("weyl_xp_commutator") + "\""), std::string::npos);
  // Field order is fixed.
  const auto pos = [&](const char* key) { return json.find(key); };
  EXPECT_LT(pos("\"check_id\""), pos("\"paper_ref\""));
  EXPECT_LT(pos("\"paper_ref\""), pos("\"residual\""));
  EXPECT_LT(pos("\"residual\""), pos("\"tolerance\""));
  EXPECT_LT(pos("\"tolerance\""), pos("\"pass\""));
  EXPECT_LT(pos("\"pass\""), pos("\"context\""));
  EXPECT_EQ(json, emit_report({r}, ReportFormat::json));
}

TEST(EmitReport, TableHasOneRowPerReport) {
  const std::vector<CheckReport> rs{CheckReport::evaluate("kk_residual", 1e-7, 1e-5),
                                    CheckReport::evaluate("kk_wrong_half_plane", 0.5, 1e-2, {}, Criterion::at_least)};
  const std::string table = emit_report(rs, ReportFormat::table);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 3);
  EXPECT_NE(table.find("PASS"), std::string::npos);
}

TEST(CheckReport, CriteriaAndRetolerance) {
  CheckReport r = CheckReport::evaluate("poisson_residual", 1e-9, 1e-6);
  EXPECT_TRUE(r.pass);
  r.retolerance(1e-15);
  EXPECT_FALSE(r.pass);
  CheckReport lower = CheckReport::evaluate("kk_wrong_half_plane", 1e-3, 1e-2, {}, Criterion::at_least);
  EXPECT_FALSE(lower.pass);
  lower.retolerance(1e-4);
  EXPECT_TRUE(lower.pass);
  EXPECT_THROW(CheckReport::evaluate("no_such_check", 0.0, 1.0), std::out_of_range);
}

TEST(Catalog, SortedAndUnique) {
  const auto ids = known_check_ids();
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
  for (const auto& id : ids) EXPECT_FALSE(paper_ref_for(id).empty()) << id;
}

TEST(SuiteConfig, Validation) {
  EXPECT_EQ(parse_suite("kk"), Suite::kk);
  EXPECT_THROW(parse_suite("everything"), ConfigurationError);
  SuiteConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.tolerance_overrides["not_a_check"] = 1.0;
  EXPECT_THROW(cfg.validate(), ConfigurationError);
  cfg = SuiteConfig{};
  cfg.n_points = 100;
  EXPECT_THROW(cfg.validate(), ConfigurationError);
  cfg = SuiteConfig{};
  cfg.hbar = 0.0;
  EXPECT_THROW(cfg.validate(), ConfigurationError);
  cfg = SuiteConfig{};
  cfg.tolerance_overrides["kk_residual"] = -1.0;
  EXPECT_THROW(cfg.validate(), ConfigurationError);
}

TEST(RunSuite, EveryCheckOnceAndSorted) {
  for (Suite s : {Suite::fourier, Suite::poisson, Suite::weyl, Suite::uncertainty, Suite::ladder}) {
    SuiteConfig cfg;
    cfg.suite = s;
    const auto reports = run_suite(cfg);
    std::vector<std::string> ids;
    for (const auto& r : reports) {
      ids.push_back(r.check_id);
      EXPECT_TRUE(r.pass) << r.check_id << " residual " << r.residual;
      EXPECT_EQ(r.paper_ref, paper_ref_for(r.check_id));
    }
    EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
    auto expected = suite_check_ids(s);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(ids, expected) << to_string(s);
  }
}

TEST(RunSuite, WeylResidualsAreExact) {
  SuiteConfig cfg;
  cfg.suite = Suite::weyl;
  for (const auto& r : run_suite(cfg)) {
    if (r.check_id != "weyl_matrix_oracle") {
      EXPECT_EQ(r.residual, 0.0) << r.check_id;
    }
  }
}

TEST(RunSuite, UnreachableOverrideFails) {
  SuiteConfig cfg;
  cfg.suite = Suite::poisson;
  cfg.tolerance_overrides["poisson_residual"] = 1e-15;
  const auto reports = run_suite(cfg);
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [](const CheckReport& r) { return r.check_id == "poisson_residual"; });
  ASSERT_NE(it, reports.end());
  EXPECT_FALSE(it->pass);
  EXPECT_EQ(it->tolerance, 1e-15);
  EXPECT_EQ(std::get<bool>(it->context.at("tolerance_overridden")), true);
}

TEST(RunSuite, DeterministicBytes) {
  SuiteConfig cfg;
  cfg.suite = Suite::uncertainty;
  cfg.seed = 7;
  EXPECT_EQ(emit_report(run_suite(cfg), ReportFormat::json), emit_report(run_suite(cfg), ReportFormat::json));
  SuiteConfig other = cfg;
  other.seed = 8;
  EXPECT_NE(emit_report(run_suite(cfg), ReportFormat::json), emit_report(run_suite(other), ReportFormat::json));
}
