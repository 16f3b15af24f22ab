#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(BIANCHI_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const std::string name = ::testing::UnitTest::GetInstance()->current_test_info()->name();
    dir_ = fs::temp_directory_path() / ("bianchi_cli_" + name);
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

const char* kA1 = R"({"q": [["1","0","0"],["0","0","0"],["0","0","0"]]})";
const char* kB0 = R"({"q": [["0","1","0"],["-1","0","0"],["0","0","0"]]})";
const char* kB1 = R"({"q": [["1","1","0"],["-1","0","0"],["0","0","0"]]})";
const char* kNotLie = R"({"q": [["1","0","0"],["0","0","1"],["0","-1","0"]]})";
const char* kAlpha1 = R"({"q": [["0","0","0"],["0","0","1"],["0","-1","0"]]})";

}  // namespace

TEST_F(Cli, ClassifyExitCodes) {
  Outcome ok = run("classify " + file("a1.json", kA1));
  EXPECT_EQ(ok.code, 0);
  const json rep = json::parse(ok.out);
  EXPECT_EQ(rep["type"]["name"], "A1");
  EXPECT_EQ(rep["cohomology"]["dim_H2"], 5);

  Outcome b0 = run("classify " + file("b0.json", kB0));
  EXPECT_EQ(b0.code, 0);
  EXPECT_EQ(json::parse(b0.out)["type"]["name"], "B0");

  Outcome bad = run("classify " + file("bad.json", kNotLie));
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(json::parse(bad.out)["type"].is_null());

  EXPECT_EQ(run("classify " + file("broken.json", "{\"q\": [")).code, 1);
  EXPECT_EQ(run("classify " + file("field.json", R"({"q": [[0,0,0],[0,"x",0],[0,0,0]]})")).code, 1);
  EXPECT_EQ(run("classify " + (dir_ / "missing.json").string()).code, 1);
  EXPECT_EQ(run("classify < " + file("stdin.json", kA1)).code, 0);
  EXPECT_EQ(run("frobnicate").code, 1);
}

TEST_F(Cli, CohomologyAndCompatible) {
  const std::string a1 = file("a1.json", kA1), b1 = file("b1.json", kB1);
  Outcome c = run("cohomology " + a1);
  EXPECT_EQ(c.code, 0);
  const json rep = json::parse(c.out);
  EXPECT_EQ(rep["cohomology"]["basis_Z2"].size(), 8u);
  EXPECT_EQ(rep["sym_dim"], 6);
  EXPECT_EQ(run("cohomology " + file("bad.json", kNotLie)).code, 2);

  Outcome ok = run("compatible " + a1 + " " + b1);
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(json::parse(ok.out)["compatible"], true);
  Outcome no = run("compatible " + a1 + " " + file("alpha1.json", kAlpha1));
  EXPECT_EQ(json::parse(no.out)["pairing"], (json{"2", "0", "0"}));
}

TEST_F(Cli, Deform) {
  const std::string a1 = file("a1.json", kA1), b1 = file("b1.json", kB1);
  Outcome c = run("deform " + a1 + " " + b1);
  EXPECT_EQ(c.code, 0);
  const json out = json::parse(c.out);
  EXPECT_EQ(out["verdict"], "contraction");
  EXPECT_EQ(out["path"]["samples"].size(), 4u);
  EXPECT_EQ(out["path"]["samples"][0]["type"]["name"], "A1");
  EXPECT_EQ(out["path"]["samples"][1]["type"]["name"], "B1");

  EXPECT_EQ(json::parse(run("deform " + a1 + " " + a1).out)["verdict"], "not-contraction");

  Outcome inc = run("deform " + a1 + " " + file("alpha1.json", kAlpha1));
  EXPECT_EQ(inc.code, 3);
  EXPECT_EQ(json::parse(inc.out)["pairing"], (json{"2", "0", "0"}));

  EXPECT_EQ(run("deform " + a1 + " " + b1 + " --ts 0,1/x").code, 1);
  EXPECT_EQ(run("deform " + a1 + " " + file("bad.json", kNotLie)).code, 2);
}

TEST_F(Cli, TablesAreDeterministic) {
  Outcome a = run("tables"), b = run("tables");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("A1           1          3          2        8        5"), std::string::npos);
  Outcome j = run("tables --json");
  EXPECT_EQ(json::parse(j.out)["matches"], true);
}

TEST_F(Cli, LeavesHexagon) {
  const fs::path out = dir_ / "leaves";
  Outcome r = run("leaves --family B1 --param 0 --starts hexagon --dt 0.01 --t-end 3 --out " + out.string());
  ASSERT_EQ(r.code, 0);
  for (int k = 0; k < 6; ++k) EXPECT_TRUE(fs::exists(out / ("B1_" + std::to_string(k) + ".csv")));
  const json manifest = json::parse(std::ifstream(out / "manifest.json"));
  EXPECT_EQ(manifest["files"].size(), 6u);

  std::ifstream csv(out / "B1_0.csv");
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "t,x1,x2");
  bool found = false;
  while (std::getline(csv, line))
    if (line.rfind("1,", 0) == 0) {
      EXPECT_EQ(line, "1,1,1");
      found = true;
    }
  EXPECT_TRUE(found);

  // identical flags give identical files
  const fs::path again = dir_ / "again";
  run("leaves --family B1 --param 0 --starts hexagon --dt 0.01 --t-end 3 --out " + again.string());
  auto slurp = [](const fs::path& p) {
    std::ostringstream ss;
    ss << std::ifstream(p).rdbuf();
    return ss.str();
  };
  for (int k = 0; k < 6; ++k) {
    const std::string name = "B1_" + std::to_string(k) + ".csv";
    EXPECT_EQ(slurp(out / name), slurp(again / name));
  }
}

TEST_F(Cli, LeavesSpotCheckAgainstClosedForm) {
  const fs::path rk = dir_ / "rk", cf = dir_ / "cf";
  const std::string common = "leaves --family B2plus --param 1 --starts '1,0.5' --dt 0.001 --t-end 1 --out ";
  ASSERT_EQ(run(common + rk.string() + " --method rk4").code, 0);
  ASSERT_EQ(run(common + cf.string() + " --method closed").code, 0);
  auto last = [](const fs::path& p) {
    std::ifstream in(p);
    std::string line, prev;
    while (std::getline(in, line)) prev = line;
    double t, x1, x2;
    std::sscanf(prev.c_str(), "%lf,%lf,%lf", &t, &x1, &x2);
    return std::array<double, 3>{t, x1, x2};
  };
  const auto a = last(rk / "B2plus_0.csv"), b = last(cf / "B2plus_0.csv");
  EXPECT_DOUBLE_EQ(a[0], 1.0);
  EXPECT_NEAR(a[1], b[1], 1e-6);
  EXPECT_NEAR(a[2], b[2], 1e-6);
}

TEST_F(Cli, LeavesValidation) {
  const std::string out = " --out " + (dir_ / "x").string();
  EXPECT_EQ(run("leaves --dt 0" + out).code, 1);
  EXPECT_EQ(run("leaves --t-end -1" + out).code, 1);
  EXPECT_EQ(run("leaves --family B2plus --param 0 --method closed" + out).code, 1);
  EXPECT_EQ(run("leaves --family B2plus --param 1 --starts '0,1' --method closed" + out).code, 1);
  EXPECT_EQ(run("leaves --family C7" + out).code, 1);
  EXPECT_EQ(run("leaves --starts '1,2,3'" + out).code, 1);
}

TEST_F(Cli, SelftestRejectsBadSeed) { EXPECT_EQ(run("selftest", "BIANCHI_SEED=abc").code, 1); }
