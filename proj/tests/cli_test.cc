// Copyright 2026 The d2dcache Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "d2dcache/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "d2dcache/json_io.h"

namespace d2dcache {
namespace {

const std::string kData = D2DCACHE_TESTDATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::path(::testing::TempDir()) / name).string();
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CliConstructTest, GridThreeConstructionI) {
  const auto r = Cli({"construct", "--kind", "I", "--grid", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("(K,F,Z,S) = (6,9,3,18)"), std::string::npos);
  EXPECT_NE(r.out.find("R = 2"), std::string::npos);
  EXPECT_NE(r.out.find("147"), std::string::npos);
}

TEST(CliConstructTest, GridFourConstructionII) {
  const auto r = Cli({"construct", "--kind", "II", "--grid", "4"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("(16,8,2,48)"), std::string::npos);
}

TEST(CliConstructTest, GeneralFromCode) {
  const auto r =
      Cli({"construct", "--kind", "general", "--code", kData + "/gf3_42.json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("(12,9,3,36)"), std::string::npos);
}

TEST(CliConstructTest, WritesJsonAndFigure) {
  const std::string path = TempPath("grid3.json");
  const auto r = Cli({"construct", "--kind", "I", "--grid", "3", "--out", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = ReadJsonFile(path);
  EXPECT_EQ(j["params"]["S"], 18);
  EXPECT_EQ(j["construction"], "I");
  EXPECT_NE(Slurp(path + ".txt").find("369"), std::string::npos);
}

TEST(CliConstructTest, SourcesAreExclusive) {
  const auto r = Cli({"construct", "--grid", "3", "--code",
                      kData + "/gf3_42.json"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(Cli({"construct", "--kind", "I"}).code, kExitUsage);
  EXPECT_EQ(Cli({"construct", "--kind", "III", "--grid", "2"}).code,
            kExitUsage);
}

TEST(CliConstructTest, PreconditionFailureNamesTheProperty) {
  const auto r =
      Cli({"construct", "--kind", "I", "--code", kData + "/gf3_42.json"});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.err.find("construction precondition failed"), std::string::npos);
}

TEST(CliValidateTest, ExampleOne) {
  const auto r = Cli({"validate", "--array", kData + "/example1.json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("valid DPDA (6,4,2,6), phi=identity"), std::string::npos)
      << r.out;
}

TEST(CliValidateTest, TwoByTwoFailsC4) {
  const auto r = Cli({"validate", "--array", kData + "/pda_2x2.json"});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.out.find("valid PDA, C4 fails for s=1"), std::string::npos)
      << r.out;
}

TEST(CliValidateTest, CorruptedJsonIsAParseError) {
  const auto r = Cli({"validate", "--array", kData + "/corrupted.json"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
}

TEST(CliValidateTest, JsonReportListsViolations) {
  const auto r = Cli({"validate", "--array", kData + "/pda_2x2.json",
                      "--format", "json"});
  EXPECT_EQ(r.code, kExitInvalid);
  const Json j = ParseJson(r.out);
  EXPECT_TRUE(j["valid_pda"].get<bool>());
  EXPECT_FALSE(j["valid_dpda"].get<bool>());
  EXPECT_EQ(j["violations"][0]["condition"], "C4");
  EXPECT_EQ(j["violations"][0]["symbol"], 1);
}

TEST(CliValidateTest, ExternalPhiOverridesFile) {
  const std::string phi = TempPath("phi.json");
  WriteTextFile(phi, "[2, 2, 3, 4, 5, 6]");
  const auto r = Cli({"validate", "--array", kData + "/example1.json", "--phi",
                      phi});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.out.find("C4 fails for s=1"), std::string::npos);
}

TEST(CliSimulateTest, ExampleOne) {
  const auto r = Cli({"simulate", "--array", kData + "/example1.json",
                      "--demand", "4,2,1,5,6,3", "--N", "6", "--B", "4096"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = ParseJson(r.out);
  EXPECT_EQ(j["measured_load"], "3/2");
  EXPECT_EQ(j["transmission_count"], 6);
  EXPECT_TRUE(j["all_decoded"].get<bool>());
  EXPECT_EQ(j["demand"][0], 4);
}

TEST(CliSimulateTest, RandomDemandIsDeterministic) {
  const std::vector<std::string> args = {
      "simulate", "--array", kData + "/example1.json", "--demand", "random",
      "--N", "3", "--B", "100", "--seed", "9"};
  const auto a = Cli(args);
  const auto b = Cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(CliSimulateTest, ConstructionIIRoundTrip) {
  const std::string path = TempPath("grid3_ii.json");
  ASSERT_EQ(Cli({"construct", "--kind", "II", "--grid", "3", "--out", path}).code,
            kExitOk);
  const auto r = Cli({"simulate", "--array", path, "--demand", "random",
                      "--format", "text"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("load=3 decoded=9/9 one_shot=yes"), std::string::npos)
      << r.out;
}

TEST(CliSimulateTest, BadDemand) {
  EXPECT_EQ(Cli({"simulate", "--array", kData + "/example1.json", "--demand",
                 "1,2"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"simulate", "--array", kData + "/example1.json", "--demand",
                 "1,2,3,4,5,x"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"simulate", "--array", kData + "/example1.json", "--demand",
                 "1,2,3,4,5,7", "--N", "6"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"simulate", "--array", kData + "/pda_2x2.json", "--demand",
                 "1,1"}).code,
            kExitInvalid);
}

TEST(CliBoundsTest, GridThreeArray) {
  const std::string path = TempPath("fig3.json");
  ASSERT_EQ(Cli({"export", "--kind", "I", "--grid", "3", "--format", "json",
                 "--out", path}).code,
            kExitOk);
  const auto r = Cli({"bounds", "--array", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("bound_jmqx=2 bound_new=4/3"), std::string::npos);
  EXPECT_NE(r.out.find("meets_jmqx"), std::string::npos);
  EXPECT_EQ(r.out.find("meets_new"), std::string::npos);
}

TEST(CliBoundsTest, DirectParameters) {
  const auto r = Cli({"bounds", "--K", "6", "--F", "4", "--Z", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "bound_jmqx=1 bound_new=3/2 tighter=new\n");
  EXPECT_EQ(Cli({"bounds", "--K", "6", "--F", "4", "--Z", "4"}).code,
            kExitUsage);
}

TEST(CliBoundsTest, CatalogRow) {
  const auto r = Cli({"bounds", "--row", "1", "--param", "K=50", "--param",
                      "t=2", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "scheme,K,M_over_N,F,R\njcm,50,1/25,2450,24\n");
  EXPECT_EQ(Cli({"bounds", "--row", "3", "--param", "n"}).code, kExitUsage);
  EXPECT_EQ(Cli({"bounds", "--row", "3"}).code, kExitUsage);
}

TEST(CliCompareTest, SmallestGrid) {
  const auto r = Cli({"compare", "--n", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "n,scheme,K,M_over_N,F,R\n"
            "2,jcm_sq,4,1/2,12,1\n"
            "2,hypercube,4,1/2,4,2\n"
            "2,constrII,4,1/2,4,1\n"
            "2,jcm_2n,4,1/2,12,1\n"
            "2,constrI,4,1/2,4,1\n");
}

TEST(CliCompareTest, TwentyFive) {
  const auto r = Cli({"compare", "--n", "25", "--schemes", "jcm,constrI"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("25,jcm_2n,50,1/25,2450,24\n"), std::string::npos);
  EXPECT_NE(r.out.find("25,constrI,50,1/25,625,24\n"), std::string::npos);
}

TEST(CliCompareTest, RangesAndErrors) {
  const auto r = Cli({"compare", "--n", "2..4", "--schemes", "constrII",
                      "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(ParseJson(r.out).size(), 3u);
  EXPECT_EQ(Cli({"compare", "--n", "4..2"}).code, kExitUsage);
  EXPECT_EQ(Cli({"compare", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(Cli({"compare", "--n", "2", "--schemes", "bogus"}).code,
            kExitUsage);
}

TEST(CliExportTest, CsvMirrorsFigureLayout) {
  const auto r = Cli({"export", "--kind", "I", "--grid", "2", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, ",12,34,13,24\n1,*,13,*,12\n2,*,24,12,*\n3,13,*,*,34\n"
                   "4,24,*,34,*\n");
}

TEST(CliExportTest, ArrayToText) {
  const auto r = Cli({"export", "--array", kData + "/pda_2x2.json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "  | 1 2\n-------\n1 | * 1\n2 | 1 *\n");
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"validate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace d2dcache
