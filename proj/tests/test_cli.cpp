#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

using horn::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "horn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

double json_value(const std::string& text) { return nlohmann::json::parse(text)["value"]; }

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST(CliEval, Origin) {
  const Result r = cli({"eval", "--function", "h1", "--params", "1,1,2,1", "--point", "0,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value             1\n"), std::string::npos) << r.out;
}

TEST(CliEval, GeometricReduction) {
  const Result r = cli({"eval", "--function", "h1", "--params", "1,1,2,1", "--point", "0.5,0",
                        "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json_value(r.out), 2.0, 1e-12);
  EXPECT_EQ(nlohmann::json::parse(r.out)["in_domain"], false);
}

TEST(CliEval, ExitCodes) {
  EXPECT_EQ(cli({"eval", "--function", "h1", "--params", "1,1,2,0", "--point", "0.1,0.1"}).code, 2);
  EXPECT_EQ(cli({"eval", "--function", "h1", "--params", "1,1,2,1", "--point", "0.1,0.1"}).code, 2);
  EXPECT_EQ(
      cli({"eval", "--function", "h1", "--params", "0.3,0.7,1.1,1.9", "--point", "10,10"}).code, 3);
  EXPECT_EQ(cli({"eval", "--function", "h9", "--params", "1,1,2,1", "--point", "0,0"}).code, 64);
  EXPECT_EQ(cli({"eval", "--function", "h1", "--params", "1,1,2", "--point", "0,0"}).code, 64);
  EXPECT_EQ(cli({"eval", "--function", "h1", "--params", "1,1,2,1"}).code, 64);
  EXPECT_EQ(cli({"frobnicate"}).code, 64);
  EXPECT_EQ(cli({"eval", "--function", "h1", "--params", "1,1,2,1", "--point", "0,0",
                 "--format", "xml"})
                .code,
            64);
  const Result r = cli({"eval", "--function", "h1", "--params", "1,1,2,0", "--point", "0.1,0.1"});
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliEval, FunctionNamesAreCaseInsensitive) {
  const Result a = cli({"eval", "-f", "H3", "--params", "0.5,0.5,1.5", "--point", "0.1,0.1"});
  const Result b = cli({"eval", "-f", "h3", "--params", "0.5,0.5,1.5", "--point", "0.1,0.1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTable, OriginAndRowCount) {
  Result r = cli({"table", "-f", "h1", "--params", "1,1,2,1", "--grid", "0:0:1,0:0:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "x,y,value,err_estimate,in_domain\n0,0,1,0,true\n");

  r = cli({"table", "-f", "h2", "--params", "0.3,0.4,0.5,0.6,1.7", "--grid",
           "-0.1:0.1:3,-0.2:0.2:5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), 1 + 3 * 5u);

  r = cli({"table", "-f", "h1", "--params", "1,1,2,1", "--grid", "0.5:0.5:1,0:0:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream rows(r.out);
  std::string header, row;
  std::getline(rows, header);
  std::getline(rows, row);
  EXPECT_EQ(row.rfind("0.5,0,", 0), 0u);
  const double v = std::stod(row.substr(6));
  EXPECT_NEAR(v, 2.0, 1e-12);
  EXPECT_EQ(row.substr(row.rfind(',') + 1), "false");  // flagged, still exit 0

  EXPECT_EQ(cli({"table", "-f", "h1", "--params", "1,1,2,1", "--grid", "0:1"}).code, 64);
}

TEST(CliList, Registry) {
  const Result r = cli({"list-identities"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GE(j.size(), 70u);
  EXPECT_NE(r.out.find("\"H1.REC.alpha\""), std::string::npos);
  for (const auto& e : j) EXPECT_FALSE(e["paper_anchor"].get<std::string>().empty());
  EXPECT_EQ(nlohmann::json::parse(cli({"list-identities", "--identity", "H3.SUM"}).out).size(), 2u);
}

TEST(CliVerify, ContiguousRelations) {
  const Result r =
      cli({"verify", "--identity", "H1.CONTIG", "--samples", "50", "--seed", "7", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), 5u);
  for (const char* id : {"H1.CONTIG.2.3", "H1.CONTIG.2.7", "H1.CONTIG.2.11", "H1.CONTIG.2.15"}) {
    EXPECT_NE(r.out.find(std::string(id) + ",CONTIG,H1,VERIFIED,false,50,50,"), std::string::npos);
  }
}

TEST(CliVerify, ByteIdenticalJson) {
  const std::vector<std::string> args{"verify", "--samples", "1", "--seed", "1", "--format", "json"};
  const Result a = cli(args);
  const Result b = cli(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
  EXPECT_FALSE(nlohmann::json::parse(a.out)["metadata"].contains("wall_time_s"));
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["identities"].size(), 116u);
}

TEST(CliVerify, DisputeSetsExitCode) {
  const Result r = cli({"verify", "--identity", "H2.REC.alpha", "--samples", "3"});
  EXPECT_EQ(r.code, 1);
  // Open-question disputes do not block.
  const Result q = cli({"verify", "--identity", "H5.REC.beta", "--samples", "20", "--k", "2"});
  EXPECT_NE(q.out.find("DISPUTED"), std::string::npos) << q.out;
  EXPECT_EQ(q.code, 0);
}

TEST(CliVerify, UnknownPrefixWarns) {
  const Result r = cli({"verify", "--identity", "NO.SUCH", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["identities"].empty());
}

TEST(CliVerify, SeedFromEnvironment) {
  const std::vector<std::string> args{"verify", "--identity", "H6.DIFF_THETA.alpha", "--samples",
                                      "2", "--format", "json"};
  ::setenv("HORN_KERNEL_SEED", "99", 1);
  const Result env = cli(args);
  ::unsetenv("HORN_KERNEL_SEED");
  EXPECT_EQ(nlohmann::json::parse(env.out)["metadata"]["seed"], 99);
  auto explicit_args = args;
  explicit_args.insert(explicit_args.end(), {"--seed", "99"});
  EXPECT_EQ(cli(explicit_args).out, env.out);
  EXPECT_EQ(nlohmann::json::parse(cli(args).out)["metadata"]["seed"], 0);

  ::setenv("HORN_KERNEL_SEED", "x1", 1);
  EXPECT_EQ(cli(args).code, 64);
  ::unsetenv("HORN_KERNEL_SEED");
  EXPECT_EQ(cli({"verify", "--seed", "-3"}).code, 64);
  EXPECT_EQ(cli({"verify", "--samples", "0"}).code, 64);
}

TEST(CliVerify, TimingIsOptIn) {
  const Result r = cli({"verify", "--identity", "H1.CONTIG.2.3", "--samples", "1", "--timing",
                        "--format", "json"});
  EXPECT_TRUE(nlohmann::json::parse(r.out)["metadata"].contains("wall_time_s"));
}
