#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "fixtures.hpp"

using namespace rmideal;
using namespace rmideal::cli;

namespace {

template <class Cfg, class Fn>
std::string run(const Cfg& cfg, Fn fn) {
    std::ostringstream os;
    fn(cfg, os);
    return os.str();
}

}  // namespace

TEST(CliSample, EmptyAndComplete) {
    SampleConfig c;
    c.n = 5;
    c.p = 0;
    c.seed = 1;
    EXPECT_EQ(run(c, cmd_sample), "5 0\n");
    c.n = 3;
    c.p = 1;
    c.seed = 7;
    EXPECT_EQ(run(c, cmd_sample), "3 3\n0 1\n0 2\n1 2\n");
}

TEST(CliSample, RepeatableWithIdeals) {
    SampleConfig c;
    c.n = 5;
    c.p = 0.5;
    c.seed = 42;
    c.count = 2;
    EXPECT_EQ(run(c, cmd_sample), run(c, cmd_sample));
    c.ideals = true;
    const auto j = json::parse(run(c, cmd_sample));
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), 2u);
    EXPECT_TRUE(j[0].contains("cover_ideal"));
    const auto g = graph_from_json(j[1]["graph"]);
    EXPECT_EQ(ideal_from_json(j[1]["edge_ideal"]), edge_ideal(g));
}

TEST(CliAnalyze, FiveCycleWithChords) {
    const auto r = analyze_graph(fixtures::five_cycle_chords(), {});
    EXPECT_EQ(r["dim"], 2);
    EXPECT_EQ(r["height"], 3);
    EXPECT_EQ(r["edge_ideal_normal"], true);
    EXPECT_EQ(r["cover_ideal"]["generators"],
              json::parse("[[0,1,2,3],[0,2,4],[1,2,4],[1,3,4]]"));
}

TEST(CliAnalyze, JoinedTrianglesReportWitness) {
    const auto r = analyze_graph(fixtures::joined_triangles(), {"edge_ideal_normal", "hochster"});
    EXPECT_EQ(r["edge_ideal_normal"], false);
    EXPECT_EQ(r["hochster"]["c1"], json::parse("[0,1,2]"));
    EXPECT_FALSE(r.contains("dim"));
}

TEST(CliAnalyze, EmptyGraph) {
    const auto r = analyze_graph(Graph(6), {});
    EXPECT_EQ(r["dim"], 6);
    EXPECT_EQ(r["edge_ideal_normal"], true);
    EXPECT_THROW(analyze_graph(Graph(3), {"nonsense"}), ParameterError);
}

TEST(CliMc, CsvOutput) {
    McConfig c;
    c.n = 3;
    c.p = 0.5;
    c.event = "always_true";
    c.trials = 1000;
    c.timing = false;
    EXPECT_EQ(run(c, cmd_mc), std::string(mc_csv_header()) + "\n3,0.5,always_true,1000,1000,1,0.996173241514445,1,0.95,0\n");
}

TEST(CliMc, ParameterErrors) {
    McConfig c;
    c.n = 3;
    c.p = 2;
    c.event = "has_cycle";
    EXPECT_THROW(run(c, cmd_mc), ParameterError);
    c.p = 0.5;
    c.event = "nope";
    EXPECT_THROW(run(c, cmd_mc), ParameterError);
}

TEST(CliSweep, ScheduleParsing) {
    const auto s = parse_schedule("q=1*n^-0.5");
    EXPECT_EQ(s.kind, ScheduleKind::Q);
    EXPECT_EQ(s.c, 1.0);
    EXPECT_EQ(s.alpha, 0.5);
    const auto t = parse_schedule("p=2.5n^-1.5");
    EXPECT_EQ(t.c, 2.5);
    EXPECT_EQ(t.alpha, 1.5);
    EXPECT_EQ(parse_schedule("p=0.3").alpha, 0.0);
    EXPECT_THROW(parse_schedule("r=1"), ParameterError);
    EXPECT_THROW(parse_schedule("p=1*n^2"), ParameterError);
    EXPECT_THROW(parse_schedule("p=x"), ParameterError);
}

TEST(CliSweep, WarnsOnClamp) {
    SweepConfig c;
    c.event = "has_cycle";
    c.schedule = "p=4*n^-1";
    c.ns = {2, 8};
    c.trials = 10;
    c.timing = false;
    std::ostringstream out, err;
    cmd_sweep(c, out, err);
    EXPECT_NE(err.str().find("clamped at n=2"), std::string::npos);
    EXPECT_EQ(err.str().find("n=8"), std::string::npos);
}

TEST(CliOracle, HasCycleAtThree) {
    OracleConfig c;
    c.n = 3;
    c.event = "has_cycle";
    const auto j = json::parse(run(c, cmd_oracle));
    EXPECT_EQ(j["polynomial"]["coeffs"], json::parse(R"(["0","0","0","1"])"));
}

TEST(CliOracle, EmptyPatternComparison) {
    OracleConfig c;
    c.n = 5;
    c.pattern = "E3";
    c.expectation = true;
    c.compare = true;
    c.p_grid = {"0.5"};
    const auto j = json::parse(run(c, cmd_oracle));
    EXPECT_EQ(j["comparison"][0]["oracle"], "1.25");
    EXPECT_EQ(j["comparison"][0]["formula"], "1.25");
    EXPECT_EQ(j["comparison"][0]["match"], true);
}

TEST(CliOracle, TwoTriangleCoefficientReported) {
    OracleConfig c;
    c.n = 6;
    c.pattern = "T";
    c.expectation = true;
    c.compare = true;
    const auto j = json::parse(run(c, cmd_oracle));
    EXPECT_EQ(j["kappa_oracle"], 10);
    EXPECT_EQ(j["kappa_formula"], 20);
    EXPECT_EQ(j["formula_matches_oracle"], false);
}

TEST(CliOracle, BoundsConsistent) {
    OracleConfig c;
    c.n = 6;
    c.event = "dim_ge:3";
    c.compare = true;
    std::ostringstream os;
    EXPECT_EQ(cmd_oracle(c, os), kOk);
    EXPECT_EQ(json::parse(os.str())["bounds_consistent"], true);
}

TEST(CliOracle, Limits) {
    OracleConfig c;
    c.n = 8;
    c.event = "has_cycle";
    EXPECT_THROW(run(c, cmd_oracle), ResourceError);
    c.n = 5;
    c.pattern = "T";
    EXPECT_THROW(run(c, cmd_oracle), ParameterError);
}
