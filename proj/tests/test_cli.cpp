#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "conecurve/cli.hpp"
#include "test_util.hpp"

using namespace conecurve;

namespace {
struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "conecurve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}
}  // namespace

TEST(Cli, EvalWritesFrameCsvWithPinnedCurvature) {
  const auto dir = testutil::temp_dir("eval");
  const Outcome r = run({"eval", "--range", "-2:2", "--n", "401", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto frame = lines(testutil::slurp(dir / "frame.csv"));
  ASSERT_EQ(frame.size(), 402u);
  EXPECT_EQ(frame[0], "s,kappa,x1,x2,x3,a1,a2,a3,y1,y2,y3");
  for (std::size_t i = 1; i < frame.size(); ++i) {
    double s, k;
    ASSERT_EQ(std::sscanf(frame[i].c_str(), "%lf,%lf", &s, &k), 2);
    const double sech = 1 / std::cosh(s);
    EXPECT_NEAR(k, 0.5 - 1.5 * sech * sech, 1e-9);
  }
  EXPECT_EQ(lines(testutil::slurp(dir / "curve.csv")).size(), 402u);
  for (const char* k : {"xa", "xy", "ay", "xay"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / (std::string("partner_") + k + ".csv"))) << k;
  }
}

TEST(Cli, MinimalGridGivesTwoRows) {
  const auto dir = testutil::temp_dir("n2");
  const Outcome r = run({"eval", "--n", "2", "--kind", "xy", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(testutil::slurp(dir / "frame.csv")).size(), 3u);
  EXPECT_EQ(lines(testutil::slurp(dir / "partner_xy.csv")).size(), 3u);
}

TEST(Cli, NonUniformCsvIsAUsageError) {
  const auto dir = testutil::temp_dir("csv");
  {
    std::ofstream f(dir / "bad.csv");
    f << "s,x1,x2,x3\n";
    const double s[] = {0, 0.1, 0.2, 0.3, 0.45, 0.5, 0.6, 0.7};
    for (double v : s) {
      const auto p = example1_curve(v).p;
      f << v << "," << format_number(p.x1) << "," << format_number(p.x2) << "," << format_number(p.x3) << "\n";
    }
  }
  const Outcome r = run({"eval", "--curve", "csv:" + (dir / "bad.csv").string(), "--out", dir.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("row 6"), std::string::npos) << r.err;
}

TEST(Cli, SampledCurveRunsEndToEnd) {
  const auto dir = testutil::temp_dir("csvok");
  {
    std::ofstream f(dir / "curve.csv");
    f << "s,x1,x2,x3\n";
    for (int i = 0; i <= 200; ++i) {
      const double s = -1.0 + 0.01 * i;
      const auto p = example1_curve(s).p;
      f << format_number(s) << "," << format_number(p.x1) << "," << format_number(p.x2) << ","
        << format_number(p.x3) << "\n";
    }
  }
  const Outcome r = run({"eval", "--curve", "csv:" + (dir / "curve.csv").string(), "--kind", "xy", "--range", "-1:1",
                     "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(testutil::slurp(dir / "frame.csv")).size(), 202u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"eval", "--kind", "yx"}).code, 2);
  EXPECT_EQ(run({"eval", "--range", "2:-2"}).code, 2);
  EXPECT_EQ(run({"eval", "--range", "abc"}).code, 2);
  EXPECT_EQ(run({"eval", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--b", "-1"}).code, 2);
  EXPECT_EQ(run({"eval", "--tol", "confirm=0"}).code, 2);
  EXPECT_EQ(run({"assess", "--tol", "nonsense=1"}).code, 2);
  EXPECT_EQ(run({"figure", "--panel", "Z"}).code, 2);
  EXPECT_EQ(run({"eval", "--curve", "f:nope"}).code, 2);
  EXPECT_EQ(run({"eval", "--curve", "csv:/nonexistent.csv"}).code, 2);
  EXPECT_EQ(run({"eval", "--config", "/nonexistent.json"}).code, 2);
  const Outcome h = run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("--curve"), std::string::npos);
}

TEST(Cli, EmptyDomainExitCode) {
  const auto dir = testutil::temp_dir("empty");
  // alpha-y at b = c = 1 needs kappa < 0, which fails for s in [1.5, 2].
  const Outcome e = run({"eval", "--kind", "ay", "--range", "1.5:2", "--n", "11", "--out", dir.string()});
  EXPECT_EQ(e.code, 3);
  const Outcome a = run({"assess", "--kind", "ay", "--range", "1.5:2", "--n", "11", "--tol", "admissible=1e-9",
                     "--out", dir.string()});
  // gamma-row and position entries need no partner frame, so not everything is empty.
  EXPECT_EQ(a.code, 0) << a.err;
}

TEST(Cli, AssessWritesReports) {
  const auto dir = testutil::temp_dir("assess");
  const Outcome r = run({"assess", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(testutil::slurp(dir / "report.json"));
  bool def = false, proof = false, ay = false;
  for (const auto& v : j["verdicts"]) {
    const auto& s = v["spec"];
    if (v["formula_id"] == "eq3.16" && s["b"] == 1.0 && s["c"] == 2.0) {
      if (v["variant"] == "definition") def = v["verdict"] == "Discrepant";
      if (v["variant"] == "proof") proof = v["verdict"] == "Confirmed";
    }
    if (v["formula_id"] == "eq3.28" && s["b"] == 1.0 && s["c"] == 1.0) ay = v["verdict"] == "DomainEmpty";
  }
  EXPECT_TRUE(def);
  EXPECT_TRUE(proof);
  EXPECT_TRUE(ay);
  EXPECT_NE(testutil::slurp(dir / "report.md").find("## x-y partner"), std::string::npos);
}

TEST(Cli, ConfigFileIsOverriddenByFlags) {
  const auto dir = testutil::temp_dir("config");
  {
    std::ofstream f(dir / "run.json");
    f << R"({"curve": "f:sinh", "grid": {"lo": -1, "hi": 1, "n": 21}, "kinds": ["xy"], "out": ")" << dir.string()
      << R"("})";
  }
  const Outcome r = run({"eval", "--config", (dir / "run.json").string(), "--n", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(testutil::slurp(dir / "frame.csv")).size(), 6u);
  EXPECT_TRUE(std::filesystem::exists(dir / "partner_xy.csv"));
  EXPECT_FALSE(std::filesystem::exists(dir / "partner_xa.csv"));
  {
    std::ofstream f(dir / "bad.json");
    f << R"({"colour": "blue"})";
  }
  EXPECT_EQ(run({"eval", "--config", (dir / "bad.json").string()}).code, 2);
}

TEST(Cli, FigureIsDeterministic) {
  const auto d1 = testutil::temp_dir("fig1");
  const auto d2 = testutil::temp_dir("fig2");
  ASSERT_EQ(run({"figure", "--out", d1.string()}).code, 0);
  ASSERT_EQ(run({"figure", "--out", d2.string()}).code, 0);
  for (char p : kPanels) {
    const std::string stem = std::string("panel_") + p;
    EXPECT_EQ(testutil::slurp(d1 / (stem + ".svg")), testutil::slurp(d2 / (stem + ".svg")));
    if (is_surface_panel(p)) {
      EXPECT_EQ(testutil::slurp(d1 / (stem + ".obj")), testutil::slurp(d2 / (stem + ".obj")));
    }
  }
  const auto d3 = testutil::temp_dir("fig3");
  ASSERT_EQ(run({"figure", "--panel", "C", "--projection", "xy", "--out", d3.string()}).code, 0);
  EXPECT_TRUE(std::filesystem::exists(d3 / "panel_C.svg"));
  EXPECT_FALSE(std::filesystem::exists(d3 / "panel_A.svg"));
}
