#include "orthdet/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace orthdet;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "orthdet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DetUnipotentJson) {
  const Invocation r = run({"det-unipotent", "--shape", "3,1,1", "--q", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["class"]["sign"], 1);
  EXPECT_EQ(j["class"]["squarefree"], "1");
  EXPECT_EQ(j["parity"], "odd");
  EXPECT_EQ(j["degree"], "3510");
}

TEST(Cli, JsonRoundTripsClassProduct) {
  for (const auto& shape : {"3,1,1", "2,2", "2,1", "4,1,1", "3,2,1"})
    for (const auto& q : {"3", "5", "7", "9"}) {
      const Invocation r = run({"det-unipotent", "--shape", shape, "--q", q, "--format", "json"});
      ASSERT_EQ(r.code, 0) << r.err;
      const Json j = Json::parse(r.out);
      SquareClass product;
      for (const auto& f : j["breakdown"]) product *= square_class_from_json(f["class"]);
      EXPECT_EQ(product, square_class_from_json(j["class"]));
      IntPoly f = IntPoly::constant(1);
      for (const auto& factor : j["f_factors"]) {
        const IntPoly base = factor["type"] == "x-power" ? IntPoly::x() : q_int(factor["k"].get<int>());
        f *= pow(base, factor["mult"].get<unsigned>());
      }
      EXPECT_EQ(class_of_integer(f(BigInt(q))), square_class_from_json(j["breakdown"][0]["class"]));
    }
}

TEST(Cli, ByteIdenticalOutput) {
  const std::vector<std::string> args{"oracle-check", "--n-max", "4", "--q", "1,3", "--method",
                                      "skew",         "--seed",  "5", "--format", "json"};
  const Invocation a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> sweep{"verify-parker", "--n-max", "6", "--format", "json"};
  EXPECT_EQ(run(sweep).out, run(sweep).out);
}

TEST(Cli, OddDegreeExitsWithOne) {
  const Invocation r = run({"det-unipotent", "--shape", "1,1", "--q", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("degree 3 is odd: not in Irr+"), std::string::npos);
}

TEST(Cli, ArgumentErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"det-unipotent", "--shape", "1,3", "--q", "3"}).code, 1);
  EXPECT_EQ(run({"det-unipotent", "--shape", "2,1", "--q", "6"}).code, 1);
  EXPECT_EQ(run({"det-unipotent", "--shape", "2,1"}).code, 1);
  EXPECT_EQ(run({"det-hecke", "--shape", "3,2", "--q", "3"}).code, 1);
  EXPECT_EQ(run({"verify-parker", "--family", "bogus"}).code, 1);
  EXPECT_EQ(run({"no-such-verb"}).code, 1);
  EXPECT_EQ(run({"syt", "--shape", "2,1", "--format", "xml"}).code, 1);
}

TEST(Cli, HeckeAndSymmetric) {
  Invocation r = run({"det-hecke", "--shape", "2,2", "--q", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["class"]["squarefree"], "155");
  r = run({"det-symmetric", "--shape", "2,2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["class"]["squarefree"], "3");
  EXPECT_EQ(Json::parse(r.out)["q"], "1");
}

TEST(Cli, SgnPair) {
  const Invocation r = run({"det-sgnpair", "--lambda", "2", "--mu", "2,2", "--q", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["class"]["squarefree"], "39");
}

TEST(Cli, SytGraph) {
  const Invocation r = run({"syt", "--shape", "3,1,1", "--graph", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["count"], 6);
  EXPECT_EQ(j["tableaux"].size(), 6U);
  EXPECT_EQ(j["edges"].size(), 6U);
  EXPECT_NE(run({"syt", "--shape", "3,1,1"}).out.find("6 standard tableaux"), std::string::npos);
}

TEST(Cli, OracleCheckAndGuard) {
  EXPECT_EQ(run({"oracle-check", "--n-max", "5", "--q", "1,3,5"}).code, 0);
  ::setenv(cli::kMaxTableauxEnv, "3", 1);
  const Invocation guarded = run({"oracle-check", "--n-max", "5", "--q", "3"});
  ::unsetenv(cli::kMaxTableauxEnv);
  EXPECT_EQ(guarded.code, 3);
  EXPECT_NE(guarded.err.find(cli::kMaxTableauxEnv), std::string::npos);
}

TEST(Cli, VerifyParkerFamilies) {
  for (const auto& family : {"unipotent", "symmetric", "sgnpair"}) {
    const Invocation r = run({"verify-parker", "--n-max", "6", "--q", "3,5", "--family", family, "--jobs", "2",
                       "--format", "json"});
    ASSERT_EQ(r.code, 0) << family << r.err;
    EXPECT_TRUE(Json::parse(r.out)["confirmed"].get<bool>());
  }
}

TEST(Cli, Selftest) {
  const Invocation r = run({"selftest"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("selftest passed"), std::string::npos);
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }
