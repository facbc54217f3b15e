#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "bipower/bipower.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string data(const std::string& name) { return std::string(BIPOWER_TEST_DATA) + "/" + name; }

Run run_shell(const std::string& cmd) {
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Run run(const std::string& args) {
  return run_shell(std::string(BIPOWER_CLI) + " " + args + " 2>/dev/null");
}

Run run_in(const fs::path& dir, const std::string& args) {
  return run_shell("cd " + dir.string() + " && " + BIPOWER_CLI + " " + args + " 2>/dev/null");
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bipower_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, PowerOfIntervalFixtureIsComplete) {
  const auto r = run("power -k 3 " + data("interval6x5.json"));
  ASSERT_EQ(r.code, 0);
  const auto g = bipower::read_graph_json(r.out);
  EXPECT_EQ(g.edge_count(), 30U);
  EXPECT_EQ(g.x_labels()[0], "x1");
}

TEST_F(CliTest, EvenPowerIsUsageError) {
  EXPECT_EQ(run("power -k 4 " + data("interval6x5.json")).code, 2);
  EXPECT_EQ(run("power " + data("interval6x5.json")).code, 2);
}

TEST_F(CliTest, UnknownVerbAndMissingFile) {
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("power -k 3 " + (dir_ / "missing.json").string()).code, 2);
  EXPECT_EQ(run("power -k 3 " + data("malformed.json")).code, 2);
}

TEST_F(CliTest, McaVerifyStaircase) {
  const auto r = run("mca-verify " + data("staircase6x7.mat"));
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("a"), json({1, 1, 2, 3, 4, 5}));
  EXPECT_EQ(j.at("d"), json({2, 3, 4, 5, 6, 6, 6}));
  EXPECT_EQ(run("mca-verify " + data("staircase6x7_shuffled.mat")).code, 1);
  EXPECT_EQ(run("mca-verify " + data("bad_gap.mat")).code, 1);
}

TEST_F(CliTest, McaFindRecoversShuffled) {
  const auto r = run("mca-find " + data("staircase6x7_shuffled.mat"));
  ASSERT_EQ(r.code, 0);
  const auto m = bipower::read_matrix_text(r.out);
  EXPECT_TRUE(bipower::verify_mca(m));
  EXPECT_EQ(run("mca-find " + data("c6_identity.mat")).code, 1);
  const auto j = run("mca-find --format json " + data("staircase6x7_shuffled.mat"));
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(json::parse(j.out).contains("certificate"));
}

TEST_F(CliTest, McaPowerKeepsArrangement) {
  const auto r = run("mca-power -k 3 " + data("staircase6x7.mat"));
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(bipower::verify_mca(bipower::read_matrix_text(r.out)));
  EXPECT_EQ(run("mca-power -k 3 " + data("staircase6x7_shuffled.mat")).code, 2);
}

TEST_F(CliTest, CheckChordalVerdicts) {
  const auto c6 = run("check-chordal " + data("c6.json"));
  ASSERT_EQ(c6.code, 1);
  const auto j = json::parse(c6.out);
  EXPECT_EQ(j.at("k"), 1);
  EXPECT_EQ(j.at("cycle").size(), 6U);
  EXPECT_EQ(run("check-chordal " + data("c6_chord.json")).code, 0);
  EXPECT_EQ(run("check-chordal " + data("c4.json")).code, 0);
  EXPECT_EQ(run("check-chordal --min-length 8 " + data("c6.json")).code, 0);
  EXPECT_EQ(run("check-chordal --min-length 5 " + data("c6.json")).code, 2);
}

TEST_F(CliTest, CheckChordalClosure) {
  const auto r = run("check-chordal -k 1 " + data("c18.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("holds"), true);
  EXPECT_TRUE(j.contains("lift"));
}

TEST_F(CliTest, CheckKChordal) {
  EXPECT_EQ(run("check-kchordal --kchordal-k 8 " + data("c8.json")).code, 0);
  EXPECT_EQ(run("check-kchordal --kchordal-k 6 " + data("c8.json")).code, 1);
  EXPECT_EQ(run("check-kchordal " + data("c8.json")).code, 2);
  EXPECT_EQ(run("check-kchordal --kchordal-k 6 -k 1 " + data("c8.json")).code, 0);
}

TEST_F(CliTest, VerifyIntervals) {
  EXPECT_EQ(run("verify-intervals " + data("interval6x5.json") + " " + data("interval6x5.tsv")).code, 0);
  auto tsv = slurp(data("interval6x5.tsv"));
  tsv.replace(tsv.find("x4\t3\t4"), 6, "x4\t6\t6");
  const auto bad = write("bad.tsv", tsv);
  const auto r = run("verify-intervals " + data("interval6x5.json") + " " + bad.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out).at("valid"), false);
}

TEST_F(CliTest, PowerIntervalsKeepsComments) {
  const auto r = run("power-intervals -k 3 " + data("interval6x5.tsv"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# interval bigraph", 0), 0U);
  EXPECT_NE(r.out.find("Y\ty3\t8\t8\n"), std::string::npos);
  EXPECT_NE(r.out.find("X\tx2\t2\t9\n"), std::string::npos);
  const auto j = run("power-intervals --format json -k 3 " + data("interval6x5.tsv"));
  EXPECT_EQ(json::parse(j.out).at("y").at(4).at("right"), 9);
  const auto split = write("split.tsv", "X\ta\t0\t1\nX\tb\t5\t6\nY\tc\t1\t1\nY\td\t6\t6\n");
  EXPECT_EQ(run("power-intervals -k 1 " + split.string()).code, 2);
}

TEST_F(CliTest, ClassifyAndLift) {
  const auto cls = run("classify-cycle -k 1 " + data("c18.json") + " " + data("c18_corners.json"));
  ASSERT_EQ(cls.code, 0);
  EXPECT_EQ(json::parse(cls.out).at("k1"), 6);
  const auto lift = run("lift-cycle -k 3 " + data("c24.json") + " " + data("c24_corners.json"));
  ASSERT_EQ(lift.code, 0);
  const auto j = json::parse(lift.out);
  EXPECT_EQ(j.at("method"), "case2");
  EXPECT_EQ(j.at("cycle").size(), 12U);
  EXPECT_EQ(run("lift-cycle -k 1 " + data("c24.json") + " " + data("c24_corners.json")).code, 2);
}

TEST_F(CliTest, OutputGoesOnlyToNamedPath) {
  const auto target = dir_ / "out.json";
  const auto r = run("power -k 1 --output " + target.string() + " " + data("c6.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(target), slurp(data("c6.json")));
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir_)) ++files;
  EXPECT_EQ(files, 1U);
}

TEST_F(CliTest, FuzzReportsAndIsDeterministic) {
  const auto a = run("fuzz --theorem t4 --trials 50 --seed 9");
  ASSERT_EQ(a.code, 0);
  auto ja = json::parse(a.out);
  EXPECT_EQ(ja.at("executed"), 50);
  EXPECT_EQ(ja.at("counterexamples").size(), 0U);
  const auto campaign = write("campaign.json",
                              R"({"theorem": "t4", "trials": 50, "seed": 9, "parallelism": 3,)"
                              R"( "bounds": {"k_set": [3, 5, 7]}})");
  auto jb = json::parse(run("fuzz " + campaign.string()).out);
  ja.erase("wall_time_ms");
  jb.erase("wall_time_ms");
  EXPECT_EQ(ja, jb);
  EXPECT_EQ(run("fuzz --theorem t5 --trials 5 -k 2").code, 2);
  EXPECT_EQ(run("fuzz --trials 5").code, 2);
}

TEST_F(CliTest, GenProducesReadableFiles) {
  const auto t3 = run("gen --theorem t3 --seed 4 --max-x 3 --max-y 4 --span 9");
  ASSERT_EQ(t3.code, 0);
  EXPECT_EQ(bipower::read_interval_tsv(t3.out).x_labels.size(), 3U);
  const auto t4 = run("gen --theorem t4 --seed 4 --max-x 3 --max-y 4");
  ASSERT_EQ(t4.code, 0);
  EXPECT_TRUE(bipower::verify_mca(bipower::read_matrix_text(t4.out)));
  const auto t5 = run("gen --theorem t5 --seed 4 --max-x 3 --max-y 4");
  ASSERT_EQ(t5.code, 0);
  EXPECT_EQ(bipower::read_graph_json(t5.out).y_count(), 4U);
  EXPECT_EQ(run("gen --theorem t5 --seed 4").out, run("gen --theorem t5 --seed 4").out);
}

TEST_F(CliTest, CounterexampleReplayFilesDriveTheNamedCommand) {
  // A record built the same way the harness builds one replays through the CLI.
  const auto g = bipower::read_graph_json(slurp(data("c18.json")));
  const auto rec = bipower::counterexample_record(bipower::Theorem::T5, 0, 1, json::object(),
                                                  "check-chordal -k 1 graph.json",
                                                  {{"graph.json", bipower::write_graph_json(g)}});
  for (const auto& [name, text] : rec.at("replay").at("files").items())
    write(name, text.get<std::string>());
  const auto cmd = rec.at("replay").at("command").get<std::string>();
  const auto r = run_in(dir_, cmd);
  EXPECT_EQ(r.code, 0);  // the implication holds on C_18, so the verdict is "holds"
}

TEST_F(CliTest, ExitCodeMatrix) {
  struct Case {
    std::string args;
    int code;
  };
  const std::vector<Case> cases = {
      {"power -k 1 " + data("c6.json"), 0},
      {"check-chordal " + data("c6.json"), 1},
      {"check-chordal " + data("c6_chord.json"), 0},
      {"check-chordal -k 3 " + data("c6.json"), 0},
      {"check-kchordal --kchordal-k 4 " + data("c6.json"), 1},
      {"mca-verify " + data("c6_identity.mat"), 1},
      {"mca-find " + data("staircase6x7.mat"), 0},
      {"mca-power -k 5 " + data("staircase6x7.mat"), 0},
      {"mca-power -k 5 " + data("c6_identity.mat"), 2},
      {"classify-cycle -k 3 " + data("c18.json") + " " + data("c18_corners.json"), 2},
      {"verify-intervals " + data("c6.json") + " " + data("interval6x5.tsv"), 2},
      {"mca-verify " + data("interval6x5.json"), 2},
  };
  for (const auto& c : cases) EXPECT_EQ(run(c.args).code, c.code) << c.args;
}
