#ifndef CURVEGRAPH_NO_CLI
#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int status = curvegraph::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::string gen(std::vector<std::string> args) {
  args.insert(args.begin(), "gen");
  const auto r = run(args);
  EXPECT_EQ(r.status, 0) << r.err;
  return r.out;
}

}  // namespace

TEST(Cli, Figure1OllivierPipe) {
  const auto r = run({"ollivier", "--pair", "x,y"}, gen({"figure1"}));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["k"], "-1/1");
  EXPECT_EQ(j["witness"]["z"], "2/1");
}

TEST(Cli, AllAdjacent) {
  const auto r = run({"ollivier", "--all-adjacent"}, gen({"figure1"}));
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 7u);
}

TEST(Cli, BdcFixedPoint) {
  const auto chain = gen({"chain", "--n", "10"});
  const auto r = run({"bdc", "--root", "0"}, chain);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, chain);
}

TEST(Cli, ValidateRoundTrip) {
  const auto fig = gen({"figure1"});
  const auto r = run({"validate", "-"}, fig);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, fig);
}

TEST(Cli, CurvatureCsv) {
  const auto r = run({"curvature", "--root", "w", "--radius", "2"}, gen({"figure1"}));
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out,
            "r,vertex,k_minus,k_plus,avg_minus,avg_plus,m_Sr\n"
            "2,y,1/1,1/1,1/1,1/1,4/1\n"
            "2,y',1/1,1/1,1/1,1/1,4/1\n");
}

TEST(Cli, SphereCurvColumns) {
  const auto r = run({"sphere-curv", "--root", "w"}, gen({"figure1"}));
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "r,k,k_tilde\n1,1/1,1/1\n2,-1/1,1/1\n3,1/1,NA\n");
}

TEST(Cli, MirrorConstant) {
  const auto chain = gen({"chain", "--n", "8"});
  const auto mirror = gen({"mirror", "--of", "chain", "--n", "8"});
  const std::string path = ::testing::TempDir() + "chain-n8.json";
  {
    std::ofstream f(path);
    f << chain;
  }
  const auto r = run({"compare", "--against", path, "--root1", "0", "--root2", "0", "--outside", "1", "--constant"},
                     mirror);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["asymptotic_constant"]["C"], "2/1");
  EXPECT_TRUE(j["stronger_outside_finite_set"]["holds"].get<bool>());
}

TEST(Cli, OllivierMatchGen) {
  const auto r = run({"sphere-curv", "--root", "0"}, gen({"ollivier-match", "--seq", "1,1/2,1/3,1/3"}));
  ASSERT_EQ(r.status, 0) << r.err;
  // At the horizon the path ends: k(2,3) = (1 - 0)/3 - (1 - 1)/3 = 1/3.
  EXPECT_EQ(r.out, "r,k,k_tilde\n1,1/1,1/1\n2,0/1,0/1\n3,1/3,NA\n");
}

TEST(Cli, DomainErrorsAreJson) {
  const auto r = run({"ollivier", "--pair", "x,q"}, gen({"figure1"}));
  EXPECT_EQ(r.status, 1);
  const auto j = nlohmann::json::parse(r.err);
  EXPECT_EQ(j["error"]["kind"], "UnknownVertex");

  const auto bad = run({"validate"}, "{\"m\": [1.5]}");
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(nlohmann::json::parse(bad.err)["error"]["kind"], "ParseError");

  const auto missing = run({"validate", "/nonexistent/file.json"});
  EXPECT_EQ(missing.status, 1);
  EXPECT_NE(missing.err.find("/nonexistent/file.json"), std::string::npos);
}

TEST(Cli, UsageErrorsNameTheFlag) {
  auto r = run({"curvature", "--root", "w", "--bogus"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("--bogus"), std::string::npos) << r.err;
  r = run({"gen", "figure1", "--n", "3"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("--n"), std::string::npos);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"gen", "nope"}).status, 2);
  EXPECT_EQ(run({"compare", "a.json", "--root1", "0", "--root2", "0", "--constant"}).status, 2);
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = run({"verify", "--seed", "3", "--instances", "10"});
  const auto b = run({"verify", "--seed", "3", "--instances", "10"});
  EXPECT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("PASS  C13"), std::string::npos);
}
#endif
