#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "eulerdec_cli/cli.hpp"

namespace eulerdec::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

void expect_json_roundtrip(const std::vector<std::string>& args) {
  auto with_json = args;
  with_json.emplace_back("--json");
  const auto r = call(with_json);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto parsed = nlohmann::json::parse(r.out);
  EXPECT_EQ(parsed.dump(2) + "\n", r.out);
}

TEST(Cli, EulerCoefficientList) {
  const auto r = call({"euler", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0,1,0,-2,1\n");
  EXPECT_EQ(call({"euler", "4", "--human"}).out, "x^4 - 2*x^3 + x\n");
}

TEST(Cli, EulerJsonUsesStrings) {
  const auto r = call({"--json", "euler", "3"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coeffs"], nlohmann::json::array({"1/4", "0", "-3/2", "1"}));
}

TEST(Cli, DecomposeAllOnEulerEight) {
  const auto e8 = call({"euler", "8"}).out;
  const auto r = call({"decompose", "--all", e8.substr(0, e8.size() - 1), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1U);
  EXPECT_EQ(j[0]["inner_degree"], 2);
  EXPECT_EQ(j[0]["inner"]["text"], "x^2 - x - 3/2");
}

TEST(Cli, DecomposeModes) {
  EXPECT_EQ(call({"decompose", "x^6", "--k", "3"}).out, "inner degree 3: 1 * (x^2)  o  (x^3)\n");
  EXPECT_EQ(call({"decompose", "x^8", "--complete"}).out, "(x^2)  o  (x^2)  o  (x^2)\n");
  EXPECT_EQ(call({"decompose", "-1,0,1"}).out, "no decomposition\n");
}

TEST(Cli, FamilyCaseFour) {
  const auto r = call({"family", "--case", "iv", "--k", "8", "--t", "3", "--branch", "odd-n", "--count", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "(7, 9)  terms = 13\n(86, 49)  terms = 171\n");
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(call({"sum", "7", "2"}).out, "127\n");
  EXPECT_EQ(call({"sum", "7", "4", "--direct"}).out, "14324\n");
  EXPECT_EQ(call({"etilde", "1"}).out, "-1/4,1\n");
  EXPECT_EQ(call({"dickson", "3", "--a", "2"}).out, "0,-6,0,1\n");
  EXPECT_EQ(call({"dickson-extrema", "4"}).out, "2 (1,1,2)\n-2 (2,2)\n");
  EXPECT_EQ(call({"detect", "x^2 + 2*x + 1"}).out, "power: u = 1, v = 0, shift = 1\ndickson: needs degree >= 3\n");
  EXPECT_EQ(call({"classify", "7", "x^3"}).out.rfind("no exceptional shape found at any split", 0), 0U);
  EXPECT_NE(call({"search", "7", "x", "--x-max", "5", "--y-min", "0", "--y-max", "200"}).out.find("2 127\n"),
            std::string::npos);
}

TEST(Cli, ClassifyFindsFamilyShape) {
  const auto fam = nlohmann::json::parse(call({"family", "--case", "iv", "--k", "8", "--json", "--count", "1"}).out);
  const std::string g = fam["g"]["text"];
  const auto r = call({"classify", "8", g, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["matches"][0]["case"], "iv");
}

TEST(Cli, JsonRoundTripsByteForByte) {
  const std::vector<std::vector<std::string>> commands = {
      {"euler", "6"},
      {"etilde", "3"},
      {"dickson", "5", "--a", "-3/7"},
      {"sum", "9", "31"},
      {"decompose", "x^12 + x^6", "--all"},
      {"decompose", "x^12", "--complete"},
      {"detect", "x^3 - 3*x + 5"},
      {"dickson-extrema", "5", "--a", "4"},
      {"classify", "8", "x^4"},
      {"family", "--case", "v", "--k", "10", "--r", "x + 1", "--branch", "even-n", "--count", "3"},
      {"family", "--case", "iii", "--k", "8", "--r", "1"},
      {"search", "8", "x^2", "--x-max", "20"},
      {"verify-theorems", "--euler-max", "11", "--rak-max", "8"},
  };
  for (const auto& c : commands) expect_json_roundtrip(c);
}

TEST(Cli, VerifyTheorems) {
  const auto r = call({"verify-theorems", "--euler-max", "13", "--rak-max", "9", "--seed", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("odd-euler-indecomposable 13 PASS"), std::string::npos);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  EXPECT_EQ(call({"verify-theorems", "--rak-max", "6"}).code, kExitDomain);
}

TEST(Cli, DomainErrorsExitOne) {
  const std::vector<std::vector<std::string>> commands = {
      {"dickson-extrema", "5", "--a", "2"},
      {"classify", "6", "x^2"},
      {"decompose", "x^6", "--k", "4"},
      {"family", "--case", "iv", "--k", "8", "--t", "4"},
      {"family", "--case", "ii", "--k", "7"},
      {"family", "--case", "i", "--k", "7", "--r", "2 - x", "--count", "3"},
      {"search", "7", "x", "--y-min", "0", "--y-max", "30000000"},
  };
  for (const auto& c : commands) {
    const auto r = call(c);
    EXPECT_EQ(r.code, kExitDomain) << c[0];
    EXPECT_EQ(r.err.rfind("error: ", 0), 0U) << r.err;
  }
}

TEST(Cli, UsageErrorsExitTwo) {
  const std::vector<std::vector<std::string>> commands = {
      {},
      {"nonsense"},
      {"euler"},
      {"euler", "-3"},
      {"euler", "four"},
      {"euler", "4", "--bogus"},
      {"decompose", "x^2 +* 3"},
      {"decompose", "1,2,x"},
      {"decompose", "2x"},
      {"decompose", "x^4", "--all", "--complete"},
      {"decompose", "x^4", "--k", "2", "--all"},
      {"family", "--k", "8"},
      {"family", "--case", "vi", "--k", "8"},
      {"family", "--case", "iv", "--k", "8", "--branch", "sideways"},
      {"dickson", "3", "--a", "1/0"},
  };
  for (const auto& c : commands) {
    const auto r = call(c);
    EXPECT_EQ(r.code, kExitUsage) << (c.empty() ? "(empty)" : c.back());
  }
}

TEST(Cli, MalformedPolynomialsNeverCrash) {
  // Random junk over the polynomial alphabet must give 0, 1 or 2, never an escape.
  std::mt19937_64 rng(7);
  const std::string alphabet = "x^*+-/,0123456789 ";
  std::uniform_int_distribution<std::size_t> len(1, 12);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 300; ++i) {
    std::string s;
    for (std::size_t n = len(rng); n > 0; --n) s += alphabet[pick(rng)];
    for (const char* sub : {"decompose", "detect"}) {
      const auto r = call({sub, s});
      EXPECT_TRUE(r.code == 0 || r.code == 1 || r.code == 2) << s;
      if (r.code != 0) EXPECT_FALSE(r.err.empty());
    }
  }
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(call({"--help"}).code, 0);
  const auto r = call({"family", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--branch"), std::string::npos);
}

TEST(Cli, BinaryExitCodes) {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(EULERDEC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("euler 4"), 0);
  EXPECT_EQ(status("dickson-extrema 5 --a 2"), 1);
  EXPECT_EQ(status("euler"), 2);
}

}  // namespace
}  // namespace eulerdec::cli
