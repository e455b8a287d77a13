#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "qlgh/cli.hpp"
#include "qlgh/render.hpp"

using namespace qlgh;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct GoldenCase {
  std::string file;
  std::vector<std::string> args;
};

std::vector<GoldenCase> golden_cases() {
  std::ifstream in(std::string(QLGH_GOLDEN_DIR) + "/cases.txt");
  std::vector<GoldenCase> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto w = words(line);
    out.push_back({w.front(), {w.begin() + 1, w.end()}});
  }
  return out;
}

}  // namespace

TEST(Cli, EvalExamples) {
  EXPECT_EQ(run({"eval", "--q", "1/2", "LH(2,2,2)"}).out, "y^2 + 3/2*x + 3/2*z\n");
  EXPECT_EQ(run({"eval", "--q", "1/2", "LH(0,2,2)"}).out, "1\n");
  EXPECT_EQ(run({"eval", "--q", "1", "gh(2,2)"}).out, "x^2 + 2*y\n");
  EXPECT_EQ(run({"--q", "1/2", "eval", "LH(2,2,2)"}).out, "y^2 + 3/2*x + 3/2*z\n");
}

TEST(Cli, TableExample) {
  CliRun r = run({"table", "--family", "L", "--m", "1", "--n", "0..2", "--q", "1/2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("L(0,1) = 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("L(1,1) = "), std::string::npos);
  EXPECT_NE(r.out.find("L(2,1) = "), std::string::npos);
  EXPECT_EQ(r.out.find("L(3,1)"), std::string::npos);
}

TEST(Cli, GfCheckExamples) {
  CliRun r = run({"gf-check", "--family", "LH", "--m", "2", "--s", "2", "--N", "6",
               "--q", "1/2"});
  EXPECT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  int rows = 0, passing = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("t^", 0) != 0) continue;
    ++rows;
    if (line.find(": PASS") != std::string::npos) ++passing;
  }
  EXPECT_EQ(rows, 7);
  EXPECT_EQ(passing, 7);

  CliRun zero = run({"gf-check", "--N", "0"});
  EXPECT_EQ(zero.code, kExitOk);
  EXPECT_NE(zero.out.find("t^0: PASS  LH(0,1,1) = 1\n"), std::string::npos);
  EXPECT_EQ(zero.out.find("t^1"), std::string::npos);
}

TEST(Cli, GoldenFilesAreReproducedByteForByte) {
  auto cases = golden_cases();
  ASSERT_FALSE(cases.empty());
  for (const auto& c : cases) {
    std::string expected = slurp(std::string(QLGH_GOLDEN_DIR) + "/" + c.file);
    ASSERT_FALSE(expected.empty()) << c.file;
    CliRun first = run(c.args);
    CliRun second = run(c.args);
    EXPECT_EQ(first.code, kExitOk) << c.file;
    EXPECT_EQ(first.out, expected) << c.file;
    EXPECT_EQ(first.out, second.out) << c.file;
  }
}

TEST(Cli, JsonRoundTripsToText) {
  for (const char* expr : {"LH(4,2,3)", "qgh(6,2)", "L(5,1)", "H(5)", "gh(4,3)"}) {
    CliRun text = run({"--q", "2/3", "eval", expr});
    CliRun js = run({"--q", "2/3", "--format", "json", "eval", expr});
    auto j = nlohmann::ordered_json::parse(js.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["command"], "eval");
    EXPECT_EQ(render_text(mpoly_from_json(j)) + "\n", text.out) << expr;
  }
}

TEST(Cli, VerifyExamples) {
  CliRun h = run({"verify", "--tags", "H3.24", "--max", "20"});
  EXPECT_EQ(h.code, kExitOk);
  EXPECT_NE(h.out.find("summary H3.24: 21/21 pass"), std::string::npos);

  CliRun gf = run({"verify", "--tags", "GF-3.6", "--max-base", "2", "--N", "6",
                "--format", "json"});
  EXPECT_EQ(gf.code, kExitOk);
  auto j = nlohmann::ordered_json::parse(gf.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["reports"].size(), 4u);
}

TEST(Cli, VerifyOutputIsIndependentOfThreads) {
  std::vector<std::string> base{"verify", "--tags", "C4.1,L4.27", "--max", "2",
                                "--max-base", "2"};
  auto one = base, many = base;
  one.insert(one.end(), {"--threads", "1"});
  many.insert(many.end(), {"--threads", "4"});
  CliRun a = run(one), b = run(many);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"verify"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--tags", ""}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--tags", "X9.99"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "--q", "0.5", "L(2,1)"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "--format", "yaml", "L(2,1)"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "L(2,"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--family", "Q"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--family", "L", "--n", "3..1"}).code, kExitUsage);
  // q = -1 makes [2]_q vanish.
  EXPECT_EQ(run({"eval", "--q", "-1", "L(2,1)"}).code, kExitArithmetic);
  EXPECT_EQ(run({"gf-check", "--q", "-1", "--N", "3"}).code, kExitArithmetic);
  // T3.1-3.12 at k = l = 2 disagrees with the explicit expansion.
  EXPECT_EQ(run({"verify", "--tags", "T3.1-3.12", "--max", "2", "--max-base", "1"}).code,
            kExitVerifyFailed);
}

TEST(Cli, ParseErrorsCarryACaret) {
  CliRun r = run({"eval", "LH(2,2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(r.err, "error: expected ',' or ')'\n  LH(2,2\n        ^\n");
  CliRun unknown = run({"eval", "Foo(1)"});
  EXPECT_NE(unknown.err.find("^^^"), std::string::npos);
}

TEST(Cli, EnvironmentSuppliesDefaults) {
  ::setenv("QLGH_Q", "2/3", 1);
  ::setenv("QLGH_N", "2", 1);
  CliRun env = run({"gf-check"});
  ::unsetenv("QLGH_Q");
  ::unsetenv("QLGH_N");
  CliRun flags = run({"gf-check", "--q", "2/3", "--N", "2"});
  EXPECT_EQ(env.out, flags.out);
  EXPECT_NE(env.out.find("q = 2/3"), std::string::npos);
}

TEST(Cli, ParserSurvivesArbitraryInput) {
  std::mt19937 rng(1234);
  const std::string alphabet = "LHqghG(),0123456789 -+x/";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 14);
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    for (std::size_t n = len(rng); n > 0; --n) s += alphabet[pick(rng)];
    CliRun r = run({"eval", "--q", "1/2", s});
    EXPECT_TRUE(r.code == kExitOk || r.code == kExitUsage) << s;
    if (r.code == kExitUsage) EXPECT_FALSE(r.err.empty()) << s;
  }
}
