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

// File formats.
//
//   Generator matrix  {"q": 3, "rows": [[1,0,1,1],[0,1,1,2]]}
//   Resolution        {"points": [...], "classes": [[[p,...],...],...]}
//   Array             {"rows": F, "cols": K, "entries": [["*",3,...],...],
//                      "phi": [1,2,...]}            (phi optional)
//
// Users, columns, rows and files are 1-based in every file format. Rationals
// are "p/q" strings.

#ifndef D2DCACHE_JSON_IO_H_
#define D2DCACHE_JSON_IO_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "d2dcache/bounds.h"
#include "d2dcache/catalog.h"
#include "d2dcache/constructions.h"
#include "d2dcache/design.h"
#include "d2dcache/finite_field.h"
#include "d2dcache/pda.h"
#include "d2dcache/simulator.h"

namespace d2dcache {

using Json = nlohmann::ordered_json;

// Malformed input (as opposed to a well-formed object that fails a check).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json ReadJsonFile(const std::string& path);
Json ParseJson(const std::string& text);
void WriteTextFile(const std::string& path, const std::string& text);

GeneratorMatrix GeneratorMatrixFromJson(const Json& j);
Json ToJson(const GeneratorMatrix& g);

Resolution ResolutionFromJson(const Json& j);
Json ToJson(const Resolution& res);
Json ToJson(const CrossProfile& profile);

struct ArrayFile {
  PdaArray array;
  std::optional<Phi> phi;
};

ArrayFile ArrayFromJson(const Json& j);
Json ToJson(const PdaArray& a, const std::optional<Phi>& phi = std::nullopt);
Json ToJson(const Dpda& d);
// Reads {"phi": [...]} or a bare array of 1-based columns.
Phi PhiFromJson(const Json& j);

Json ToJson(const Violation& v);
Json ToJson(const PdaParams& p);
Json ToJson(const SchemeParams& p);
Json ToJson(const OptimalityReport& r);
Json ToJson(const ConstructedDpda& c);
Json ToJson(const SimulationReport& r);

// Figure-style text: a header of column labels, then one row per line with
// its label. Stars print as "*".
std::string RenderText(const PdaArray& a);
std::string RenderText(const LabeledArray& a,
                       const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels);

// CSV with the figure layout: first row is ",<col labels>", then
// "<row label>,<entries>".
std::string ToCsv(const PdaArray& a);
std::string ToCsv(const LabeledArray& a,
                  const std::vector<std::string>& row_labels,
                  const std::vector<std::string>& col_labels);

std::string CompareCsv(const std::vector<ComparisonRow>& rows);
Json CompareJson(const std::vector<ComparisonRow>& rows);

std::string FormatParams(const PdaParams& p);

}  // namespace d2dcache

#endif  // D2DCACHE_JSON_IO_H_
