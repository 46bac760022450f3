#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" RACG_CLI_PATH "\" " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expected_code = 0) {
  CliResult r = run(args);
  EXPECT_EQ(r.code, expected_code) << args;
  return json::parse(r.out);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    rows.push_back(f);
  }
  return rows;
}

}  // namespace

TEST(Cli, VerifyAdsPoint) {
  json j = run_json("verify --geometry ads --t 0.5");
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_LT(j["residual_max"].get<double>(), 1e-12);
  EXPECT_EQ(j["schema_version"].get<int>(), 1);
}

TEST(Cli, VerifyHyperbolicEndpointMatchesTable) {
  json j = run_json("verify --geometry hyp --t 1");
  EXPECT_TRUE(j["table_match"].get<bool>());
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Cli, VerifyExact) {
  json j = run_json("verify --geometry hyp --t 3/4 --exact");
  EXPECT_TRUE(j["ok"].get<bool>());
  json hp = run_json("verify --geometry hp --t 1 --exact");
  EXPECT_TRUE(hp["ok"].get<bool>());
}

TEST(Cli, VerifyAdsOutsideDomain) {
  CliResult r = run("verify --geometry ads --t 1");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, BadInput) {
  EXPECT_EQ(run("verify --geometry sphere").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify --t notanumber").code, 2);
  EXPECT_EQ(run("cusp --group pentagon").code, 2);
  EXPECT_EQ(run("cohomology --target nothing").code, 2);
}

TEST(Cli, TraceDefaultGrid) {
  CliResult r = run("trace --geometry ads --system g0");
  ASSERT_EQ(r.code, 0);
  auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 19u);
  for (const auto& row : rows) {
    ASSERT_EQ(row.size(), 7u);
    EXPECT_EQ(row[5], "11") << "t = " << row[0];
    EXPECT_GE(std::stod(row[6]), 1e3);
  }
}

TEST(Cli, TraceDegeneratePoint) {
  CliResult r = run("trace --geometry hyp --system g --grid -0.5,0,0.5");
  ASSERT_EQ(r.code, 0);
  auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0][5], "11");
  EXPECT_EQ(std::stod(rows[1][0]), 0.0);
  EXPECT_EQ(rows[1][5], "23");
  EXPECT_EQ(rows[2][5], "11");
}

TEST(Cli, TraceEmptyGrid) {
  CliResult r = run("trace --grid 0:1:0");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(csv_rows(r.out).empty());
  EXPECT_NE(r.out.find("t,geometry,system"), std::string::npos);
}

TEST(Cli, Cohomology) {
  json r13 = run_json("cohomology --target r13");
  EXPECT_EQ(r13["dimZ1"].get<int>(), 5);
  EXPECT_EQ(r13["dimB1"].get<int>(), 4);
  EXPECT_EQ(r13["dimH1"].get<int>(), 1);
  json so13 = run_json("cohomology --target so13");
  EXPECT_EQ(so13["dimH1"].get<int>(), 12);
  json all = run_json("cohomology --all");
  ASSERT_TRUE(all.is_array());
  for (const auto& c : all) {
    std::string name = c["rep_name"].get<std::string>();
    if (name.rfind("full", 0) == 0 || c["dimV"].get<int>() == 10) {
      EXPECT_EQ(c["dimH1"].get<int>(), 13) << name;
      ASSERT_TRUE(c["split"].is_array());
      EXPECT_EQ(c["split"][0].get<int>(), 12);
      EXPECT_EQ(c["split"][1].get<int>(), 1);
    }
  }
  json reps = run_json("cohomology --target r13 --representatives");
  ASSERT_EQ(reps["h1_representatives"].size(), 1u);
  EXPECT_EQ(reps["h1_representatives"][0].size(), 88u);
}

TEST(Cli, GramSummary) {
  json j = run_json("gram --geometry hyp --t 0.5");
  const json& s = j["summary"];
  EXPECT_EQ(s["commuting_pairs"].get<int>(), 80);
  EXPECT_EQ(s["commuting_pairs_orthogonal"].get<int>(), 80);
  EXPECT_EQ(s["tangency_pairs"].get<int>(), 36);
  EXPECT_EQ(s["tangency_pairs_satisfied"].get<int>(), 36);
  EXPECT_TRUE(s["symmetric"].get<bool>());
  EXPECT_EQ(j["names"].size(), 22u);
}

TEST(Cli, CuspBaseOnly) {
  json j = run_json("cusp --geometry hyp --group cube4 --t 0.4 --trials 0");
  EXPECT_EQ(j["base_class"].get<std::string>(), "Cusp");
  EXPECT_FALSE(j.contains("histogram"));
  json collapsed = run_json("cusp --geometry ads --group cube4 --t 0");
  EXPECT_EQ(collapsed["base_class"].get<std::string>().rfind("Collapsed", 0), 0u);
}

TEST(Cli, CuspExperiments) {
  json cube = run_json("cusp --geometry ads --group cube4 --trials 50 --seed 3");
  EXPECT_EQ(cube["histogram"]["Cusp"].get<int>(), 50);
  json rect = run_json("cusp --geometry hyp --group rect3 --trials 50 --seed 3");
  int total = 0;
  for (auto it = rect["histogram"].begin(); it != rect["histogram"].end(); ++it) {
    if (it.value().get<int>() == 0) continue;
    EXPECT_TRUE(it.key() == "Cusp" || it.key() == "RectSplit") << it.key();
    total += it.value().get<int>();
  }
  EXPECT_EQ(total + rect["no_convergence"].get<int>(), 50);
}

TEST(Cli, DeterministicAcrossThreadCounts) {
  std::string args = "cusp --geometry hyp --group rect3 --trials 40 --seed 11";
  CliResult a = run(args, "RACG_THREADS=1");
  CliResult b = run(args, "RACG_THREADS=4");
  CliResult c = run(args, "RACG_THREADS=4");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(b.out, c.out);
  CliResult t1 = run("trace --geometry hyp --grid -0.9:0.9:7", "RACG_THREADS=1");
  CliResult t3 = run("trace --geometry hyp --grid -0.9:0.9:7", "RACG_THREADS=3");
  EXPECT_EQ(t1.out, t3.out);
}
