#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "superpoly/cli/app.hpp"

using namespace superpoly;
using superpoly::cli::run_cli;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("superpoly_test_" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST(Cli, SuperExamples) {
  Outcome r = run({"super", "-n", "2", "-m", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t+q-u-t*u-q*u+u^2\n");
  EXPECT_EQ(run({"super", "-n", "1", "-m", "7"}).out, "1-u\n");
  EXPECT_EQ(run({"super", "-n", "2", "-m", "3", "--subst", "t=qinv", "--subst", "u=0"}).out, "q^-1+q\n");
  EXPECT_EQ(run({"super", "-n", "2", "-m", "3", "--cherednik", "--subst", "u=0"}).out, "q^2*t^-1+q^3\n");
}

TEST(Cli, SuperFormats) {
  const Outcome j = run({"super", "-n", "2", "-m", "3", "--format", "json"});
  const json rec = json::parse(j.out);
  EXPECT_EQ(rec["n"], 2);
  EXPECT_EQ(rec["m"], 3);
  EXPECT_EQ(rec["lambda"], json::array({1}));
  EXPECT_EQ(rec["method"], "syt");
  EXPECT_EQ(rec["value"], "t+q-u-t*u-q*u+u^2");
  EXPECT_EQ(rec["status"], "ok");
  EXPECT_EQ(run({"super", "-n", "2", "-m", "3", "--format", "latex"}).out, "t+q-u-t u-q u+u^{2}\n");
}

TEST(Cli, AllMethodsAgree) {
  const Outcome r = run({"super", "-n", "3", "-m", "4", "--method", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all methods agree"), std::string::npos);
  for (const auto& m : cli::all_methods()) EXPECT_NE(r.out.find(m + ": "), std::string::npos) << m;
}

TEST(Cli, ExitCodes) {
  Outcome r = run({"super", "-n", "2", "-m", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotCoprime"), std::string::npos);
  EXPECT_EQ(run({"catalan", "-n", "3", "-m", "6"}).code, 2);
  EXPECT_NE(run({"super", "-n", "2"}).code, 0);
  EXPECT_NE(run({"super", "-n", "2", "-m", "3", "--method", "bogus"}).code, 0);
  EXPECT_NE(run({"verify", "--suite", "nonsense"}).code, 0);
  EXPECT_EQ(run({"super", "-n", "2", "-m", "3", "--subst", "x=1"}).code, 1);
  EXPECT_NE(run({"verify", "--jobs", "0"}).code, 0);
}

TEST(Cli, PolynomialCommands) {
  EXPECT_EQ(run({"catalan", "-n", "2", "-m", "3"}).out, "t+q\n");
  EXPECT_EQ(run({"schroeder", "-n", "2", "-m", "3", "--subst", "t=1"}).out, run({"super", "-n", "2", "-m", "3", "--subst", "t=1"}).out);
  const Outcome cells = run({"cells", "-n", "2", "-m", "3"});
  EXPECT_NE(cells.out.find("3 cells, Poincare polynomial 1+2*q"), std::string::npos);
  const Outcome tes = run({"tesler", "-n", "3", "-m", "2"});
  EXPECT_NE(tes.out.find("2 Tesler matrices"), std::string::npos);
  const json arr = json::parse(run({"tesler", "-n", "2", "-m", "3", "--format", "json"}).out);
  EXPECT_EQ(arr.size(), 2u);
  const Outcome sh = run({"shuffle", "-n", "2", "-m", "1"});
  EXPECT_EQ(sh.code, 0);
  EXPECT_NE(sh.out.find("s[1,1]"), std::string::npos);
}

TEST(Cli, VerifySuites) {
  Outcome r = run({"verify", "--suite", "shuffle", "-n", "3", "-m", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[conjecture-pass] shuffle n=3 m=5"), std::string::npos);
  EXPECT_NE(r.out.find("  left:  "), std::string::npos);
  EXPECT_NE(r.out.find("  right: "), std::string::npos);
  r = run({"verify", "--suite", "duality", "-n", "2", "-m", "3", "--color", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[proven-pass] duality n=2 m=3 lambda=[2]"), std::string::npos);
  r = run({"verify", "--suite", "catalan", "--max", "4", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const std::string body = r.out.substr(0, r.out.rfind("summary:"));
  const json arr = json::parse(body);
  ASSERT_FALSE(arr.empty());
  for (const auto& rec : arr) EXPECT_EQ(rec["status"], "conjecture-pass") << rec.dump();
  EXPECT_EQ(r.err.rfind("verify catalan: ", 0), 0u);
}

TEST(Cli, Determinism) {
  for (const char* suite : {"catalan", "springer", "duality"}) {
    const Outcome one = run({"verify", "--suite", suite, "--max", "5", "--jobs", "1"});
    const Outcome four = run({"verify", "--suite", suite, "--max", "5", "--jobs", "4"});
    EXPECT_EQ(one.out, four.out) << suite;
    EXPECT_EQ(one.code, four.code);
  }
  const Outcome t1 = run({"table", "--max", "7", "--jobs", "1"});
  const Outcome t3 = run({"table", "--max", "7", "--jobs", "3"});
  EXPECT_EQ(t1.out, t3.out);
}

TEST(Cli, TableRecords) {
  const Outcome r = run({"table", "--pair", "2,3", "--pair", "2,4", "--pair", "1,5", "--subst", "u=0"});
  EXPECT_EQ(r.code, 0);
  const json arr = json::parse(r.out);
  ASSERT_EQ(arr.size(), 3u);
  EXPECT_EQ(arr[0]["value"], "t+q");
  EXPECT_EQ(arr[1]["status"], "NotCoprime");
  EXPECT_EQ(arr[1]["value"], "");
  EXPECT_EQ(arr[2]["value"], "1");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  const json full = json::parse(run({"table", "--max", "5"}).out);
  for (const auto& rec : full) {
    EXPECT_LE(rec["n"].get<int>() + rec["m"].get<int>(), 5);
    EXPECT_EQ(rec["status"], "ok");
  }
}

TEST(Cli, CacheRoundTrip) {
  const auto path = temp_file("cache.json");
  const std::vector<std::string> args{"super", "-n", "3", "-m", "4", "--cache", path.string()};
  const Outcome fresh = run(args);
  ASSERT_TRUE(std::filesystem::exists(path));
  const Outcome cached = run(args);
  EXPECT_EQ(fresh.out, cached.out);

  // A corrupted entry is served unless its key is among the sampled tenth.
  json table;
  std::ifstream(path) >> table;
  ASSERT_EQ(table.size(), 1u);
  const std::string key = table.begin().key();
  table[key] = "bogus";
  std::ofstream(path) << table.dump();
  const Outcome after = run(args);
  if (cli::ResultCache::sampled(key)) {
    EXPECT_EQ(after.out, fresh.out);
    EXPECT_NE(after.err.find("disagrees"), std::string::npos);
  } else {
    EXPECT_EQ(after.out, "bogus\n");
  }
  std::filesystem::remove(path);
}

TEST(Cli, CacheSamplingRate) {
  int sampled = 0;
  for (int i = 0; i < 2000; ++i) sampled += cli::ResultCache::sampled("key" + std::to_string(i));
  EXPECT_GT(sampled, 150);
  EXPECT_LT(sampled, 250);
}

TEST(Cli, ConfigFile) {
  const auto path = temp_file("config.ini");
  std::ofstream(path) << "super.n=2\nsuper.m=3\n";
  EXPECT_EQ(run({"--config", path.string(), "super"}).out, "t+q-u-t*u-q*u+u^2\n");
  EXPECT_EQ(run({"--config", path.string(), "super", "-m", "5"}).out, run({"super", "-n", "2", "-m", "5"}).out);
  std::filesystem::remove(path);
}
