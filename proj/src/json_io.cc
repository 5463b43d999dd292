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

#include <algorithm>
#include <fstream>
#include <sstream>

namespace d2dcache {

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseJson(buffer.str());
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::int64_t AsInt(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<std::int64_t>();
}

std::string AsLabel(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw ParseError("point labels must be strings or integers");
}

// Labels that look like canonical integers round-trip as numbers.
Json LabelJson(const std::string& label) {
  const bool numeric =
      !label.empty() && label.size() < 18 &&
      std::all_of(label.begin(), label.end(),
                  [](char c) { return c >= '0' && c <= '9'; }) &&
      (label == "0" || label[0] != '0');
  if (numeric) return std::stoll(label);
  return label;
}

}  // namespace

GeneratorMatrix GeneratorMatrixFromJson(const Json& j) {
  const auto q = AsInt(Field(j, "q"), "q");
  const Json& rows = Field(j, "rows");
  if (!rows.is_array()) throw ParseError("'rows' must be an array");
  if (q < 2 || q > (1 << 20)) throw ParseError("'q' out of range");
  std::vector<std::vector<PrimeField::Element>> m;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("each row must be an array");
    auto& out = m.emplace_back();
    for (const auto& x : row) {
      const auto v = AsInt(x, "matrix entry");
      if (v < 0) throw ParseError("matrix entries must be non-negative");
      out.push_back(static_cast<PrimeField::Element>(v));
    }
  }
  return GeneratorMatrix(static_cast<std::uint32_t>(q), std::move(m));
}

Json ToJson(const GeneratorMatrix& g) {
  return Json{{"q", g.q()}, {"rows", g.rows()}};
}

Resolution ResolutionFromJson(const Json& j) {
  std::vector<std::string> points;
  const Json& pts = Field(j, "points");
  if (!pts.is_array()) throw ParseError("'points' must be an array");
  for (const auto& p : pts) points.push_back(AsLabel(p));
  std::vector<std::vector<std::vector<std::string>>> classes;
  const Json& cls = Field(j, "classes");
  if (!cls.is_array()) throw ParseError("'classes' must be an array");
  for (const auto& c : cls) {
    if (!c.is_array()) throw ParseError("each class must be an array");
    auto& out = classes.emplace_back();
    for (const auto& block : c) {
      if (!block.is_array()) throw ParseError("each block must be an array");
      auto& b = out.emplace_back();
      for (const auto& p : block) b.push_back(AsLabel(p));
    }
  }
  return Resolution::FromClasses(std::move(points), classes);
}

Json ToJson(const Resolution& res) {
  Json points = Json::array();
  for (const auto& p : res.design().points()) points.push_back(LabelJson(p));
  Json classes = Json::array();
  for (int c = 0; c < res.r(); ++c) {
    Json cls = Json::array();
    for (int pos = 0; pos < res.class_size(); ++pos) {
      Json block = Json::array();
      for (int x : res.block(c, pos)) {
        block.push_back(LabelJson(res.design().points()[x]));
      }
      cls.push_back(std::move(block));
    }
    classes.push_back(std::move(cls));
  }
  return Json{{"points", std::move(points)}, {"classes", std::move(classes)}};
}

Json ToJson(const CrossProfile& profile) {
  Json mu = Json::object();
  for (std::size_t i = 2; i < profile.mu.size(); ++i) {
    mu[std::to_string(i)] =
        profile.mu[i].has_value() ? Json(*profile.mu[i]) : Json(nullptr);
  }
  return Json{{"mu", std::move(mu)},
              {"crn", profile.crn.has_value() ? Json(*profile.crn)
                                              : Json(nullptr)},
              {"is_crd", profile.is_crd},
              {"is_mcrd", profile.is_mcrd}};
}

Phi PhiFromJson(const Json& j) {
  const Json& arr = j.is_object() ? Field(j, "phi") : j;
  if (!arr.is_array()) throw ParseError("phi must be an array of columns");
  Phi phi;
  for (const auto& x : arr) {
    phi.push_back(static_cast<int>(AsInt(x, "phi entry")) - 1);
  }
  return phi;
}

ArrayFile ArrayFromJson(const Json& j) {
  const Json& entries = Field(j, "entries");
  if (!entries.is_array()) throw ParseError("'entries' must be an array");
  std::vector<std::vector<Entry>> rows;
  for (const auto& row : entries) {
    if (!row.is_array()) throw ParseError("each array row must be a list");
    auto& out = rows.emplace_back();
    for (const auto& e : row) {
      if (e.is_string()) {
        const auto s = e.get<std::string>();
        if (s != "*" && s != "⋆") {
          throw ParseError("unexpected entry '" + s + "'; use \"*\" for stars");
        }
        out.push_back(Entry::Star());
      } else if (e.is_number_integer()) {
        const auto v = e.get<std::int64_t>();
        if (v < 1 || v > (1 << 30)) {
          throw ParseError("symbols must be integers >= 1, got " +
                           std::to_string(v));
        }
        out.push_back(Entry::Symbol(static_cast<int>(v)));
      } else {
        throw ParseError("entries must be \"*\" or integers");
      }
    }
  }
  PdaArray array = [&] {
    try {
      return PdaArray::FromRows(rows);
    } catch (const PdaError& e) {
      throw ParseError(e.what());
    }
  }();
  if (j.contains("rows") && AsInt(j.at("rows"), "rows") != array.rows()) {
    throw ParseError("'rows' does not match the entry grid");
  }
  if (j.contains("cols") && AsInt(j.at("cols"), "cols") != array.cols()) {
    throw ParseError("'cols' does not match the entry grid");
  }
  auto labels = [&](const char* key, int expected) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    for (const auto& l : j.at(key)) out.push_back(AsLabel(l));
    if (static_cast<int>(out.size()) != expected) {
      throw ParseError(std::string("'") + key + "' has the wrong length");
    }
    return out;
  };
  array.row_labels = labels("row_labels", array.rows());
  array.col_labels = labels("col_labels", array.cols());
  ArrayFile file{std::move(array), std::nullopt};
  if (j.contains("phi")) file.phi = PhiFromJson(j.at("phi"));
  return file;
}

Json ToJson(const PdaArray& a, const std::optional<Phi>& phi) {
  Json entries = Json::array();
  for (int r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) {
      const auto e = a.at(r, c);
      row.push_back(e.is_star() ? Json("*") : Json(e.symbol()));
    }
    entries.push_back(std::move(row));
  }
  Json out{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
  if (!a.row_labels.empty()) out["row_labels"] = a.row_labels;
  if (!a.col_labels.empty()) out["col_labels"] = a.col_labels;
  if (phi.has_value()) {
    Json p = Json::array();
    for (int col : *phi) p.push_back(col + 1);
    out["phi"] = std::move(p);
  }
  return out;
}

Json ToJson(const Dpda& d) { return ToJson(d.array(), d.phi()); }

Json ToJson(const Violation& v) {
  Json rows = Json::array();
  for (int r : v.rows) rows.push_back(r + 1);
  Json cols = Json::array();
  for (int c : v.cols) cols.push_back(c + 1);
  return Json{{"condition", std::string(ConditionName(v.condition))},
              {"rows", rows},
              {"cols", cols},
              {"symbol", v.symbol.has_value() ? Json(*v.symbol) : Json(nullptr)},
              {"message", v.message}};
}

Json ToJson(const PdaParams& p) {
  return Json{{"K", p.K}, {"F", p.F}, {"Z", p.Z}, {"S", p.S}};
}

Json ToJson(const SchemeParams& p) {
  Json out{{"scheme", p.scheme}, {"K", p.K.str()}, {"F", p.F.str()}};
  out["Z"] = p.Z.has_value() ? Json(p.Z->str()) : Json(nullptr);
  out["S"] = p.S.has_value() ? Json(p.S->str()) : Json(nullptr);
  out["M_over_N"] = p.memory_ratio.has_value()
                        ? Json(FormatRational(*p.memory_ratio))
                        : Json(nullptr);
  out["M_over_N_approx"] = p.memory_ratio_approx;
  out["R"] = FormatRational(p.load);
  return out;
}

Json ToJson(const OptimalityReport& r) {
  return Json{
      {"params", ToJson(r.params)},
      {"R", FormatRational(r.load)},
      {"bound_jmqx", FormatRational(r.bound_jmqx)},
      {"bound_new", FormatRational(r.bound_new)},
      {"tighter", std::string(TighterName(r.tighter))},
      {"meets_jmqx", r.meets_jmqx},
      {"meets_new", r.meets_new},
      {"equality_evidence",
       {{"symbols_appear_KZ_over_F", r.evidence.symbols_appear_kz_over_f},
        {"rows_have_KZ_over_F_stars", r.evidence.rows_have_kz_over_f_stars},
        {"symbols_appear_Z", r.evidence.symbols_appear_z},
        {"max_symbol_occurrence", r.evidence.max_symbol_occurrence}}},
      {"inconsistencies", r.inconsistencies}};
}

Json ToJson(const ConstructedDpda& c) {
  Json symbolic = Json::array();
  for (int r = 0; r < c.symbolic.rows; ++r) {
    Json row = Json::array();
    for (int k = 0; k < c.symbolic.cols; ++k) {
      const auto& e = c.symbolic.at(r, k);
      row.push_back(e.has_value() ? *e : std::string("*"));
    }
    symbolic.push_back(std::move(row));
  }
  Json out = ToJson(c.dpda);
  out["construction"] = std::string(ConstructionName(c.kind));
  out["params"] = ToJson(c.dpda.params());
  out["row_labels"] = c.row_labels;
  out["col_labels"] = c.col_labels;
  out["symbolic"] = std::move(symbolic);
  out["symbol_labels"] = c.symbol_labels;
  out["source"] = ToJson(c.source);
  return out;
}

Json ToJson(const SimulationReport& r) {
  Json demand = Json::array();
  for (int d : r.demand) demand.push_back(d + 1);
  Json transmissions = Json::array();
  for (const auto& t : r.transmissions) {
    Json ops = Json::array();
    for (const auto& op : t.operands) {
      ops.push_back(Json{{"user", op.user + 1},
                         {"packet", op.packet + 1},
                         {"file", op.file + 1}});
    }
    transmissions.push_back(Json{{"symbol", t.symbol},
                                 {"sender", t.sender + 1},
                                 {"operands", std::move(ops)},
                                 {"payload_sha256", Sha256Hex(t.payload)}});
  }
  Json users = Json::array();
  for (const auto& u : r.users) {
    Json user{{"user", u.user + 1},
              {"demand", u.demanded_file + 1},
              {"decoded", u.decoded_ok},
              {"cached_packets", u.cached_packets},
              {"recovered_packets", u.recovered_packets},
              {"transmissions_used", u.transmissions_used},
              {"one_shot", u.one_shot},
              {"sha256", u.digest}};
    if (!u.error.empty()) user["error"] = u.error;
    users.push_back(std::move(user));
  }
  return Json{{"demand", std::move(demand)},
              {"F", r.F},
              {"packet_bytes", r.packet_length},
              {"transmission_count", r.transmissions.size()},
              {"measured_load", FormatRational(r.measured_load)},
              {"one_shot_verified", r.one_shot_verified},
              {"all_decoded", r.all_decoded()},
              {"warnings", r.warnings},
              {"users", std::move(users)},
              {"transmissions", std::move(transmissions)}};
}

namespace {

std::vector<std::string> DefaultLabels(int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(std::to_string(i));
  return out;
}

LabeledArray ToLabeled(const PdaArray& a) {
  LabeledArray out{a.rows(), a.cols(), {}};
  for (auto e : a.entries()) {
    if (e.is_star()) {
      out.entries.emplace_back(std::nullopt);
    } else {
      out.entries.emplace_back(std::to_string(e.symbol()));
    }
  }
  return out;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string RenderText(const LabeledArray& a,
                       const std::vector<std::string>& row_labels_in,
                       const std::vector<std::string>& col_labels_in) {
  const auto rows =
      row_labels_in.empty() ? DefaultLabels(a.rows) : row_labels_in;
  const auto cols =
      col_labels_in.empty() ? DefaultLabels(a.cols) : col_labels_in;
  std::size_t width = 1;
  std::size_t label_width = 0;
  for (const auto& e : a.entries) {
    if (e.has_value()) width = std::max(width, e->size());
  }
  for (const auto& c : cols) width = std::max(width, c.size());
  for (const auto& r : rows) label_width = std::max(label_width, r.size());

  auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  std::ostringstream out;
  out << pad("", label_width) << " |";
  for (const auto& c : cols) out << ' ' << pad(c, width);
  out << '\n' << std::string(label_width + 2 + cols.size() * (width + 1), '-')
      << '\n';
  for (int r = 0; r < a.rows; ++r) {
    out << pad(rows[r], label_width) << " |";
    for (int c = 0; c < a.cols; ++c) {
      const auto& e = a.at(r, c);
      out << ' ' << pad(e.has_value() ? *e : "*", width);
    }
    out << '\n';
  }
  return out.str();
}

std::string RenderText(const PdaArray& a) {
  return RenderText(ToLabeled(a), a.row_labels, a.col_labels);
}

std::string ToCsv(const LabeledArray& a,
                  const std::vector<std::string>& row_labels_in,
                  const std::vector<std::string>& col_labels_in) {
  const auto rows =
      row_labels_in.empty() ? DefaultLabels(a.rows) : row_labels_in;
  const auto cols =
      col_labels_in.empty() ? DefaultLabels(a.cols) : col_labels_in;
  std::ostringstream out;
  for (const auto& c : cols) out << ',' << CsvField(c);
  out << '\n';
  for (int r = 0; r < a.rows; ++r) {
    out << CsvField(rows[r]);
    for (int c = 0; c < a.cols; ++c) {
      const auto& e = a.at(r, c);
      out << ',' << CsvField(e.has_value() ? *e : "*");
    }
    out << '\n';
  }
  return out.str();
}

std::string ToCsv(const PdaArray& a) {
  return ToCsv(ToLabeled(a), a.row_labels, a.col_labels);
}

std::string CompareCsv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "n,scheme,K,M_over_N,F,R\n";
  for (const auto& row : rows) {
    const auto& p = row.params;
    out << row.n << ',' << p.scheme << ',' << p.K.str() << ','
        << (p.memory_ratio ? FormatRational(*p.memory_ratio) : "") << ','
        << p.F.str() << ',' << FormatRational(p.load) << '\n';
  }
  return out.str();
}

Json CompareJson(const std::vector<ComparisonRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    const auto& p = row.params;
    out.push_back(Json{{"n", row.n},
                       {"scheme", p.scheme},
                       {"K", p.K.str()},
                       {"M_over_N", p.memory_ratio
                                        ? Json(FormatRational(*p.memory_ratio))
                                        : Json(nullptr)},
                       {"F", p.F.str()},
                       {"R", FormatRational(p.load)}});
  }
  return out;
}

std::string FormatParams(const PdaParams& p) {
  return "(" + std::to_string(p.K) + "," + std::to_string(p.F) + "," +
         std::to_string(p.Z) + "," + std::to_string(p.S) + ")";
}

}  // namespace d2dcache
