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

#include "d2dcache/json_io.h"

#include <gtest/gtest.h>

namespace d2dcache {
namespace {

const std::string kData = D2DCACHE_TESTDATA;

TEST(ParseJsonTest, ReportsParseErrors) {
  EXPECT_THROW(ParseJson("{\"rows\": "), ParseError);
  EXPECT_THROW(ReadJsonFile(kData + "/corrupted.json"), ParseError);
  EXPECT_THROW(ReadJsonFile(kData + "/does_not_exist.json"), ParseError);
}

TEST(GeneratorMatrixJsonTest, RoundTrip) {
  const GeneratorMatrix g =
      GeneratorMatrixFromJson(ReadJsonFile(kData + "/gf3_42.json"));
  EXPECT_EQ(g.q(), 3u);
  EXPECT_EQ(g.k(), 2u);
  const Json j = ToJson(g);
  EXPECT_EQ(j.dump(), R"({"q":3,"rows":[[1,0,1,1],[0,1,1,2]]})");
  EXPECT_THROW(GeneratorMatrixFromJson(ParseJson(R"({"rows": [[1]]})")),
               ParseError);
  EXPECT_THROW(GeneratorMatrixFromJson(ParseJson(R"({"q": 3, "rows": [[-1]]})")),
               ParseError);
}

TEST(ResolutionJsonTest, RoundTripMatchesCodeDesign) {
  const Resolution from_file =
      ResolutionFromJson(ReadJsonFile(kData + "/example3_resolution.json"));
  const Resolution from_code =
      DesignFromCode(GeneratorMatrixFromJson(ReadJsonFile(kData + "/gf3_42.json")));
  EXPECT_EQ(ToJson(from_file).dump(), ToJson(from_code).dump());
  EXPECT_EQ(ToJson(ResolutionFromJson(ToJson(from_file))).dump(),
            ToJson(from_file).dump());
}

TEST(ResolutionJsonTest, StringLabels) {
  const Resolution res = ResolutionFromJson(ParseJson(
      R"({"points": ["a","b","c","d"],
          "classes": [[["a","b"],["c","d"]], [["a","c"],["b","d"]]]})"));
  EXPECT_EQ(res.BlockLabel(1, 1), "bd");
  const Json j = ToJson(res);
  EXPECT_EQ(j["points"][0], "a");
}

TEST(CrossProfileJsonTest, Shape) {
  const Json j = ToJson(ComputeCrossProfile(GridMcrd(3)));
  EXPECT_EQ(j.dump(), R"({"mu":{"2":1},"crn":2,"is_crd":true,"is_mcrd":true})");
}

TEST(ArrayJsonTest, ReadsExampleOne) {
  const ArrayFile f = ArrayFromJson(ReadJsonFile(kData + "/example1.json"));
  EXPECT_EQ(f.array.rows(), 4);
  EXPECT_EQ(f.array.cols(), 6);
  EXPECT_EQ(f.array.at(0, 1).symbol(), 3);
  EXPECT_TRUE(f.array.at(0, 0).is_star());
  ASSERT_TRUE(f.phi.has_value());
  EXPECT_EQ(*f.phi, (Phi{0, 1, 2, 3, 4, 5}));
}

TEST(ArrayJsonTest, RoundTrip) {
  const ArrayFile f = ArrayFromJson(ReadJsonFile(kData + "/example1.json"));
  const Json j = ToJson(f.array, f.phi);
  const ArrayFile g = ArrayFromJson(j);
  EXPECT_TRUE(g.array.SameEntries(f.array));
  EXPECT_EQ(g.phi, f.phi);
  EXPECT_EQ(j["entries"][0][0], "*");
  EXPECT_EQ(j["phi"][5], 6);
}

TEST(ArrayJsonTest, AcceptsStarGlyph) {
  const ArrayFile f =
      ArrayFromJson(ParseJson(R"({"entries": [["⋆", 1], [1, "*"]]})"));
  EXPECT_TRUE(f.array.at(0, 0).is_star());
}

TEST(ArrayJsonTest, RejectsMalformedArrays) {
  EXPECT_THROW(ArrayFromJson(ParseJson(R"({"entries": [["*", 0]]})")),
               ParseError);
  EXPECT_THROW(ArrayFromJson(ParseJson(R"({"entries": [["x", 1]]})")),
               ParseError);
  EXPECT_THROW(ArrayFromJson(ParseJson(R"({"entries": [["*", 1], [1]]})")),
               ParseError);
  EXPECT_THROW(ArrayFromJson(ParseJson(R"({"entries": [[1.5]]})")), ParseError);
  EXPECT_THROW(ArrayFromJson(ParseJson(R"({"rows": 3, "entries": [[1]]})")),
               ParseError);
  EXPECT_THROW(ArrayFromJson(ParseJson(R"({"cols": 1})")), ParseError);
}

TEST(PhiJsonTest, BareOrWrapped) {
  EXPECT_EQ(PhiFromJson(ParseJson("[2, 1]")), (Phi{1, 0}));
  EXPECT_EQ(PhiFromJson(ParseJson(R"({"phi": [3]})")), (Phi{2}));
  EXPECT_THROW(PhiFromJson(ParseJson(R"({"x": 1})")), ParseError);
}

TEST(RenderTest, TextAndCsv) {
  PdaArray a = PdaArray::FromRows({{Entry::Star(), Entry::Symbol(1)},
                                   {Entry::Symbol(1), Entry::Star()}});
  EXPECT_EQ(RenderText(a), "  | 1 2\n-------\n1 | * 1\n2 | 1 *\n");
  EXPECT_EQ(ToCsv(a), ",1,2\n1,*,1\n2,1,*\n");
  a.col_labels = {"a,b", "c"};
  EXPECT_EQ(ToCsv(a), ",\"a,b\",c\n1,*,1\n2,1,*\n");
}

TEST(ReportJsonTest, RationalsAreStrings) {
  const Json j = ToJson(ParamsOf(PdaParams{6, 9, 3, 18}));
  EXPECT_EQ(j["R"], "2");
  EXPECT_EQ(j["M_over_N"], "1/3");
  EXPECT_EQ(FormatParams(PdaParams{6, 4, 2, 6}), "(6,4,2,6)");
}

TEST(CompareJsonTest, CsvHeaderAndRows) {
  const std::string csv = CompareCsv(CompareReport(2, 2, {"hypercube"}));
  EXPECT_EQ(csv, "n,scheme,K,M_over_N,F,R\n2,hypercube,4,1/2,4,2\n");
  const Json j = CompareJson(CompareReport(2, 2, {"constrII"}));
  EXPECT_EQ(j[0]["F"], "4");
  EXPECT_EQ(j[0]["R"], "1");
}

}  // namespace
}  // namespace d2dcache
