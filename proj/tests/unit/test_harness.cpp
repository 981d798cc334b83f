#include <gtest/gtest.h>

#include "ptlab/errors.hpp"
#include "ptlab/harness.hpp"

using namespace ptlab;
using nlohmann::json;

TEST(Spec, RoundTrip) {
  ExperimentSpec s;
  s.name = "x";
  s.pipeline = "easy";
  s.params = {{"n", 20}};
  s.seed = 7;
  s.out = "dir";
  EXPECT_EQ(ExperimentSpec::from_json(s.to_json()), s);
  EXPECT_THROW(ExperimentSpec::from_json(json{{"pipeline", 3}}), ParseError);
  const ExperimentSpec d = with_defaults(s);
  EXPECT_EQ(d.params.at("n"), 20);
  EXPECT_TRUE(d.params.contains("ts"));
}

TEST(Packing, JsonDropsVerification) {
  const GadgetBundle rs = rs_graph(4, ap3_free_set(4, ApMode::Exact));
  ASSERT_TRUE(rs.certificate.verified);
  const json j = to_json(rs.certificate);
  WitnessPacking back = packing_from_json(j);
  EXPECT_FALSE(back.verified);
  EXPECT_EQ(back.tuples, rs.certificate.tuples);
  EXPECT_TRUE(verify_packing(rs.undirected(), back));

  const json c = certificate_json(rs, 5);
  for (const char* key : {"construction", "params", "seed", "packing", "farness"}) EXPECT_TRUE(c.contains(key)) << key;
  EXPECT_EQ(c.at("seed"), 5);
}

TEST(Csv, Formatting) {
  CsvTable t{{"a", "b"}, {{"1", "x"}, {"2", "y"}}};
  EXPECT_EQ(t.str(), "a,b\n1,x\n2,y\n");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1.0 / 3), "0.3333333333333333");
}

TEST(Pipelines, EasyIsDeterministic) {
  ExperimentSpec s;
  s.pipeline = "easy";
  s.seed = 3;
  s.params = {{"n", 16}, {"flips", {0, 10}}, {"ts", {1, 4}}, {"trials", 200}};
  const PipelineResult a = run_pipeline(s, 1);
  const PipelineResult b = run_pipeline(s, 2);
  EXPECT_EQ(a.results.dump(), b.results.dump());
  EXPECT_EQ(a.table.str(), b.table.str());
  EXPECT_TRUE(a.violations.empty());
  EXPECT_EQ(a.table.rows.size(), 4u);
  for (const auto& row : a.table.rows)
    if (row[1] == "0") EXPECT_EQ(row[5], "0");  // unperturbed cographs never reject
}

TEST(Pipelines, SmallHardnessRun) {
  ExperimentSpec s;
  s.pipeline = "hardness";
  s.seed = 1;
  s.params = {{"ks", {3}}, {"ds", {0, 8}}, {"trials", 30}, {"retries", 4}, {"control_attempts", 5000}};
  const PipelineResult r = run_pipeline(s, 1);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.table.rows.size(), 8u);
  const json inst = r.results.at("instances").at(0);
  EXPECT_EQ(inst.at("k"), 3);
  EXPECT_EQ(inst.at("gadget_n"), 5 * 18);
  const json report = make_report({"ptlab", "pipeline-hardness"}, s.to_json(), r.graphs, r.results, json::object());
  EXPECT_EQ(report.at("schema_version"), kReportSchemaVersion);
}

TEST(Pipelines, UnknownPipelineRejected) {
  ExperimentSpec s;
  s.pipeline = "nope";
  EXPECT_THROW(run_pipeline(s), InvalidArgument);
}

TEST(MatchedControl, ReachesTarget) {
  const MatchedControl c = matched_gnp(30, PackingKind::Triangle, 10, RngStream(1));
  EXPECT_GE(c.packing.size(), 10u);
  EXPECT_TRUE(c.packing.verified);
  EXPECT_GT(c.p, 0.0);
}
