#include "../tools/cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "test_support.hpp"

namespace zhegalkin::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(ZHEGALKIN_TEST_DATA_DIR) + "/" + name;
}

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
    if (!line.empty()) out += line + "\n";
  }
  return out;
}

TEST(Cli, TransformMatrices) {
  auto r = run_cli({"pmat", "--k", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1 0 0\n0 2 1\n2 2 2\n");
  r = run_cli({"qmat", "--k", "3"});
  EXPECT_EQ(r.out, "1 0 0\n1 1 1\n1 2 1\n");
  EXPECT_EQ(run_cli({"pmat", "--k", "4"}).code, kContract);
  EXPECT_EQ(run_cli({"pmat", "--k", "4000"}).code, kContract);
  EXPECT_EQ(run_cli({"pmat", "--k", "3167"}).code, kSizeGuard);
}

TEST(Cli, Count) {
  EXPECT_EQ(run_cli({"count", "--k", "3", "--n", "2"}).out, "19683\n");
  EXPECT_EQ(run_cli({"count", "--k", "2", "--n", "3"}).out, "256\n");
  EXPECT_EQ(run_cli({"count", "--k", "2", "--n", "9"}).code, kSizeGuard);
}

TEST(Cli, VerifyCorpus) {
  for (const char* name : {"halfadder.tt", "adder.tt", "table2.tt"}) {
    const auto r = run_cli({"verify", data(name)});
    EXPECT_EQ(r.code, kOk) << name << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("circuit-unitary PASS"), std::string::npos);
  }
  const auto r = run_cli({"verify", data("ternary.tt")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("anf-oracle PASS"), std::string::npos);
  EXPECT_NE(r.out.find("skipped"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"anf"}).code, kUsage);
  EXPECT_EQ(run_cli({"anf", "/nonexistent/x.tt"}).code, kParse);
  EXPECT_EQ(run_cli({"anf", "-"}, "k 2 n 1 m 1\n0\n").code, kParse);
  EXPECT_EQ(run_cli({"anf", "-"}, "k 4 n 1 m 1\n0\n1\n2\n3\n").code, kContract);
  EXPECT_EQ(run_cli({"synth", "--from", "tt", "-"}, testing::read_data("ternary.tt")).code,
            kContract);
  EXPECT_EQ(run_cli({"sim", data("halfadder.tt"), "--state", "0000"}).code, kParse);
  EXPECT_EQ(run_cli({"rotate", "--k", "2", "--theta", "1"}).code, kContract);
  EXPECT_EQ(run_cli({"rotate", "--k", "3", "--theta", "1", "--state", "1,0;1,0;0,0"}).code,
            kContract);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST(Cli, PipeRoundTrip) {
  for (const char* name : {"table1.tt", "table2.tt", "halfadder.tt", "adder.tt", "ternary.tt",
                           "quinary.tt", "quinary_unary.tt"}) {
    const auto original = testing::read_data(name);
    const auto anf = run_cli({"anf", data(name)});
    ASSERT_EQ(anf.code, kOk) << anf.err;
    const auto back = run_cli({"table", "-"}, anf.out);
    ASSERT_EQ(back.code, kOk) << back.err;
    EXPECT_EQ(parse_truth_table(back.out), parse_truth_table(original)) << name;
    EXPECT_EQ(strip_comments(back.out), strip_comments(serialize(parse_truth_table(original))));
  }
}

TEST(Cli, AnfCommentsShowPolynomials) {
  const auto r = run_cli({"anf", data("halfadder.tt")});
  EXPECT_NE(r.out.find("# y1 = x2 + x1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("# y2 = x1*x2"), std::string::npos) << r.out;
}

TEST(Cli, SynthSimRender) {
  const auto qc = run_cli({"synth", data("adder.tt")});
  ASSERT_EQ(qc.code, kOk);
  const auto sim = run_cli({"sim", "-", "--state", "10100"}, qc.out);
  EXPECT_EQ(sim.out, "10101\n");
  const auto pic = run_cli({"render", "-"}, qc.out);
  EXPECT_EQ(pic.code, kOk);
  EXPECT_NE(pic.out.find("y2"), std::string::npos);
}

TEST(Cli, Unitary) {
  const auto r = run_cli({"unitary", "-"}, "k 2 n 1 m 1\n0\n1\n");
  EXPECT_EQ(r.out, "0 -> 0\n1 -> 1\n2 -> 3\n3 -> 2\n");
  const auto d = run_cli({"unitary", "-", "--format", "dense"}, "k 2 n 1 m 1\n1\n0\n");
  EXPECT_EQ(d.out, "0 1 0 0\n1 0 0 0\n0 0 1 0\n0 0 0 1\n");
}

TEST(Cli, RotateHalfShift) {
  const auto r = run_cli({"rotate", "--k", "3", "--theta", "pi/3", "--state", "0"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "0.666666666667,0\n0.666666666667,0\n-0.333333333333,0\n");
  const auto t1 = run_cli({"rotate", "--k", "3", "--theta", "2pi/3"});
  EXPECT_EQ(t1.out, "0,0 0,0 1,0\n1,0 0,0 0,0\n0,0 1,0 0,0\n");
}

TEST(Cli, ParseAngle) {
  constexpr double pi = std::numbers::pi;
  EXPECT_DOUBLE_EQ(parse_angle("pi/3"), pi / 3);
  EXPECT_DOUBLE_EQ(parse_angle("2pi/3"), 2 * pi / 3);
  EXPECT_DOUBLE_EQ(parse_angle("2*pi/3"), 2 * pi / 3);
  EXPECT_DOUBLE_EQ(parse_angle("-pi"), -pi);
  EXPECT_DOUBLE_EQ(parse_angle("1.5"), 1.5);
  EXPECT_THROW(parse_angle("pi*3"), ContractError);
  EXPECT_THROW(parse_angle("abc"), ContractError);
}

TEST(Cli, FormatReal) {
  EXPECT_EQ(format_real(2.0 / 3), "0.666666666667");
  EXPECT_EQ(format_real(1e-14), "0");
  EXPECT_EQ(format_real(-1e-14), "0");
  EXPECT_EQ(format_real(1.0), "1");
}

}  // namespace
}  // namespace zhegalkin::cli
