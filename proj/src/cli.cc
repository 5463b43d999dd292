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

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "d2dcache/bounds.h"
#include "d2dcache/catalog.h"
#include "d2dcache/constructions.h"
#include "d2dcache/design.h"
#include "d2dcache/json_io.h"
#include "d2dcache/pda.h"
#include "d2dcache/simulator.h"

namespace d2dcache {
namespace {

// Bad flags or flag values that CLI11 cannot see (e.g. a malformed list).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string format;
  std::string out;
  std::uint64_t seed = 0;
};

struct SourceFlags {
  std::string kind = "general";
  int grid = 0;
  std::string code;
  std::string design;
};

struct ArrayFlags {
  std::string array;
  std::string phi;
};

void AddCommon(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", f.out, "Write output to this file");
  cmd->add_option("--seed", f.seed, "RNG seed");
}

void AddSource(CLI::App* cmd, SourceFlags& f, bool with_kind) {
  if (with_kind) {
    cmd->add_option("--kind", f.kind, "Construction: I, II or general")
        ->check(CLI::IsMember({"I", "II", "general"}));
  }
  auto* grid = cmd->add_option("--grid", f.grid, "n for the n x n grid design")
                   ->check(CLI::Range(2, 1000));
  auto* code =
      cmd->add_option("--code", f.code, "Generator matrix JSON file");
  auto* design =
      cmd->add_option("--design", f.design, "Resolution JSON file");
  grid->excludes(code)->excludes(design);
  code->excludes(design);
}

void AddArray(CLI::App* cmd, ArrayFlags& f) {
  cmd->add_option("--array", f.array, "Array JSON file");
  cmd->add_option("--phi", f.phi, "Sender map JSON file (1-based columns)");
}

std::string Resolve(const std::string& format, const std::string& fallback) {
  return format.empty() ? fallback : format;
}

void Emit(const CommonFlags& f, std::ostream& out, const std::string& text) {
  if (f.out.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  } else {
    WriteTextFile(f.out, text);
  }
}

Resolution LoadResolution(const SourceFlags& f) {
  if (f.grid > 0) return GridMcrd(f.grid);
  if (!f.code.empty()) {
    return DesignFromCode(GeneratorMatrixFromJson(ReadJsonFile(f.code)));
  }
  if (!f.design.empty()) return ResolutionFromJson(ReadJsonFile(f.design));
  throw UsageError("one of --grid, --code or --design is required");
}

bool HasSource(const SourceFlags& f) {
  return f.grid > 0 || !f.code.empty() || !f.design.empty();
}

ConstructedDpda Build(const SourceFlags& f) {
  const Resolution res = LoadResolution(f);
  if (f.kind == "I") return ConstructI(res);
  if (f.kind == "II") return ConstructII(res);
  return ConstructGeneral(res);
}

ArrayFile LoadArray(const ArrayFlags& f) {
  if (f.array.empty()) throw UsageError("--array is required");
  ArrayFile file = ArrayFromJson(ReadJsonFile(f.array));
  if (!f.phi.empty()) file.phi = PhiFromJson(ReadJsonFile(f.phi));
  return file;
}

std::string ParamsLine(const PdaParams& p) {
  const Rational m(p.Z, p.F);
  const Rational r(p.S, p.F);
  std::ostringstream line;
  line << "(K,F,Z,S) = " << FormatParams(p) << ", M/N = " << FormatRational(m)
       << ", R = " << FormatRational(r);
  if (boost::multiprecision::denominator(r) != 1) {
    line << " (" << std::setprecision(6) << ToDouble(r) << ")";
  }
  return line.str();
}

std::string PhiText(const Phi& phi, int K) {
  bool identity = static_cast<int>(phi.size()) <= K;
  for (std::size_t s = 0; identity && s < phi.size(); ++s) {
    identity = phi[s] == static_cast<int>(s);
  }
  if (identity) return "identity";
  std::string out = "[";
  for (std::size_t s = 0; s < phi.size(); ++s) {
    if (s > 0) out += ',';
    out += std::to_string(phi[s] + 1);
  }
  return out + "]";
}

std::string ViolationLines(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    out += "  ";
    out += ConditionName(v.condition);
    out += ": " + v.message + "\n";
  }
  return out;
}

int CmdConstruct(const CommonFlags& f, const SourceFlags& src,
                 std::ostream& out) {
  const ConstructedDpda c = Build(src);
  const std::string line = std::string("construction ") +
                           std::string(ConstructionName(c.kind)) + ": " +
                           ParamsLine(c.dpda.params());
  const std::string text =
      RenderText(c.symbolic, c.row_labels, c.col_labels);
  const std::string format = Resolve(f.format, f.out.empty() ? "text" : "json");
  std::string doc;
  if (format == "json") {
    doc = ToJson(c).dump(2);
  } else if (format == "csv") {
    doc = ToCsv(c.symbolic, c.row_labels, c.col_labels);
  } else {
    doc = line + "\n" + text;
  }
  if (f.out.empty()) {
    Emit(f, out, doc);
    return kExitOk;
  }
  WriteTextFile(f.out, doc);
  // The figure rendering travels with a JSON document.
  if (format == "json") WriteTextFile(f.out + ".txt", text);
  out << line << "\n";
  return kExitOk;
}

int CmdValidate(const CommonFlags& f, const ArrayFlags& a, std::ostream& out) {
  const ArrayFile file = LoadArray(a);
  const DpdaValidation v = ValidateDpda(file.array, file.phi);
  const Regularity reg = ComputeRegularity(file.array);

  std::vector<int> c4_symbols;
  for (const auto& viol : v.violations) {
    if (viol.condition == Condition::kC4 && viol.symbol.has_value()) {
      c4_symbols.push_back(*viol.symbol);
    }
  }
  std::sort(c4_symbols.begin(), c4_symbols.end());
  c4_symbols.erase(std::unique(c4_symbols.begin(), c4_symbols.end()),
                   c4_symbols.end());

  const int status = v.ok() ? kExitOk : kExitInvalid;
  if (Resolve(f.format, "text") == "json") {
    Json j{{"valid_pda", v.pda_params.has_value()}, {"valid_dpda", v.ok()}};
    j["params"] = v.pda_params ? ToJson(*v.pda_params) : Json(nullptr);
    if (v.ok()) {
      Json phi = Json::array();
      for (int col : v.dpda->phi()) phi.push_back(col + 1);
      j["phi"] = std::move(phi);
    } else {
      j["phi"] = nullptr;
    }
    j["g"] = reg.g.has_value() ? Json(*reg.g) : Json(nullptr);
    Json list = Json::array();
    for (const auto& viol : v.violations) list.push_back(ToJson(viol));
    j["violations"] = std::move(list);
    Emit(f, out, j.dump(2));
    return status;
  }

  std::string text;
  if (v.ok()) {
    text = "valid DPDA " + FormatParams(v.dpda->params()) +
           ", phi=" + PhiText(v.dpda->phi(), v.dpda->params().K) + "\n";
    if (reg.g.has_value()) text += "g-regular with g=" + std::to_string(*reg.g) + "\n";
  } else if (v.pda_params.has_value()) {
    text = "valid PDA, C4 fails for s=";
    for (std::size_t i = 0; i < c4_symbols.size(); ++i) {
      if (i > 0) text += ',';
      text += std::to_string(c4_symbols[i]);
    }
    text += "\nparams " + FormatParams(*v.pda_params) + "\n" +
            ViolationLines(v.violations);
  } else {
    text = "invalid PDA: " + std::to_string(v.violations.size()) +
           " violation(s)\n" + ViolationLines(v.violations);
  }
  Emit(f, out, text);
  return status;
}

std::vector<int> ParseDemand(const std::string& text, int K, int N,
                             std::uint64_t seed) {
  if (text == "random") return RandomDemand(K, N, seed);
  std::vector<int> demand;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    int value = 0;
    const auto* end = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(item.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      throw UsageError("bad demand entry '" + item + "'");
    }
    if (value < 1 || value > N) {
      throw UsageError("demand " + std::to_string(value) +
                       " is not a file in [1, " + std::to_string(N) + "]");
    }
    demand.push_back(value - 1);
  }
  if (static_cast<int>(demand.size()) != K) {
    throw UsageError("demand has " + std::to_string(demand.size()) +
                     " entries, expected K = " + std::to_string(K));
  }
  return demand;
}

int CmdSimulate(const CommonFlags& f, const ArrayFlags& a,
                const std::string& demand_text, int N, std::size_t B,
                std::ostream& out, std::ostream& err) {
  const ArrayFile file = LoadArray(a);
  const DpdaValidation v = ValidateDpda(file.array, file.phi);
  if (!v.ok()) {
    err << "array is not a DPDA\n" << ViolationLines(v.violations);
    return kExitInvalid;
  }
  const Dpda& d = *v.dpda;
  if (N < 1) N = d.params().K;
  if (demand_text.empty()) throw UsageError("--demand is required");
  const auto demand = ParseDemand(demand_text, d.params().K, N, f.seed);
  const SimulationReport report = Run(d, demand, LibrarySpec{N, B, f.seed});

  const std::string format = Resolve(f.format, "json");
  if (format == "text") {
    int decoded = 0;
    for (const auto& u : report.users) decoded += u.decoded_ok ? 1 : 0;
    std::ostringstream text;
    text << "transmissions=" << report.transmissions.size()
         << " load=" << FormatRational(report.measured_load)
         << " decoded=" << decoded << "/" << report.users.size()
         << " one_shot=" << (report.one_shot_verified ? "yes" : "no") << "\n";
    for (const auto& w : report.warnings) text << "warning: " << w << "\n";
    for (const auto& u : report.users) {
      if (!u.error.empty()) {
        text << "user " << u.user + 1 << ": " << u.error << "\n";
      }
    }
    Emit(f, out, text.str());
  } else if (format == "csv") {
    std::ostringstream csv;
    csv << "user,demand,decoded,cached_packets,recovered_packets,"
           "transmissions_used,one_shot,sha256\n";
    for (const auto& u : report.users) {
      csv << u.user + 1 << ',' << u.demanded_file + 1 << ','
          << (u.decoded_ok ? 1 : 0) << ',' << u.cached_packets << ','
          << u.recovered_packets << ',' << u.transmissions_used << ','
          << (u.one_shot ? 1 : 0) << ',' << u.digest << "\n";
    }
    Emit(f, out, csv.str());
  } else {
    Emit(f, out, ToJson(report).dump(2));
  }
  return report.all_decoded() ? kExitOk : kExitInvalid;
}

std::string SchemeCsv(const SchemeParams& p) {
  std::ostringstream csv;
  csv << "scheme,K,M_over_N,F,R\n"
      << p.scheme << ',' << p.K.str() << ','
      << (p.memory_ratio ? FormatRational(*p.memory_ratio)
                         : std::string("~") + std::to_string(
                                                   p.memory_ratio_approx))
      << ',' << p.F.str() << ',' << FormatRational(p.load) << "\n";
  return csv.str();
}

std::string SchemeText(const SchemeParams& p) {
  std::ostringstream text;
  text << p.scheme << ": K=" << p.K.str() << " M/N=";
  if (p.memory_ratio) {
    text << FormatRational(*p.memory_ratio);
  } else {
    text << "~" << std::setprecision(6) << p.memory_ratio_approx;
  }
  text << " F=" << p.F.str() << " R=" << FormatRational(p.load) << "\n";
  return text.str();
}

CatalogInputs ParseCatalogParams(const std::vector<std::string>& items) {
  CatalogInputs inputs;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param expects key=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::int64_t v = 0;
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, v);
    if (ec != std::errc() || ptr != end || value.empty()) {
      throw UsageError("--param " + key + " needs an integer value");
    }
    inputs[key] = v;
  }
  return inputs;
}

struct BoundsFlags {
  ArrayFlags array;
  std::optional<std::int64_t> K, F, Z;
  int row = 0;
  std::vector<std::string> params;
};

int CmdBounds(const CommonFlags& f, const BoundsFlags& b, std::ostream& out,
              std::ostream& err) {
  const std::string format = Resolve(f.format, "text");
  if (b.row > 0) {
    const SchemeParams p = Catalog(b.row, ParseCatalogParams(b.params));
    if (format == "json") {
      Emit(f, out, ToJson(p).dump(2));
    } else if (format == "csv") {
      Emit(f, out, SchemeCsv(p));
    } else {
      Emit(f, out, SchemeText(p));
    }
    return kExitOk;
  }

  if (!b.array.array.empty()) {
    const ArrayFile file = LoadArray(b.array);
    const DpdaValidation v = ValidateDpda(file.array, file.phi);
    if (!v.ok()) {
      err << "array is not a DPDA\n" << ViolationLines(v.violations);
      return kExitInvalid;
    }
    const OptimalityReport r = Classify(*v.dpda);
    if (format == "json") {
      Emit(f, out, ToJson(r).dump(2));
    } else if (format == "csv") {
      std::ostringstream csv;
      csv << "K,F,Z,S,R,bound_jmqx,bound_new,tighter,meets_jmqx,meets_new\n"
          << r.params.K << ',' << r.params.F << ',' << r.params.Z << ','
          << r.params.S << ',' << FormatRational(r.load) << ','
          << FormatRational(r.bound_jmqx) << ',' << FormatRational(r.bound_new)
          << ',' << TighterName(r.tighter) << ',' << (r.meets_jmqx ? 1 : 0)
          << ',' << (r.meets_new ? 1 : 0) << "\n";
      Emit(f, out, csv.str());
    } else {
      std::ostringstream text;
      text << FormatParams(r.params) << " R=" << FormatRational(r.load)
           << " bound_jmqx=" << FormatRational(r.bound_jmqx)
           << " bound_new=" << FormatRational(r.bound_new)
           << " tighter=" << TighterName(r.tighter);
      if (r.meets_jmqx) text << " meets_jmqx";
      if (r.meets_new) text << " meets_new";
      text << "\n";
      for (const auto& msg : r.inconsistencies) {
        text << "inconsistent: " << msg << "\n";
      }
      Emit(f, out, text.str());
    }
    return r.consistent() ? kExitOk : kExitInvalid;
  }

  if (b.K && b.F && b.Z) {
    const Rational jmqx = BoundJmqx(*b.F, *b.Z);
    const Rational fresh = BoundNew(*b.K, *b.F, *b.Z);
    const auto tighter = TighterName(TighterBound(*b.K, *b.F));
    if (format == "json") {
      Emit(f, out,
           Json{{"K", *b.K},
                {"F", *b.F},
                {"Z", *b.Z},
                {"bound_jmqx", FormatRational(jmqx)},
                {"bound_new", FormatRational(fresh)},
                {"tighter", std::string(tighter)}}
               .dump(2));
    } else if (format == "csv") {
      Emit(f, out,
           "K,F,Z,bound_jmqx,bound_new,tighter\n" + std::to_string(*b.K) +
               "," + std::to_string(*b.F) + "," + std::to_string(*b.Z) + "," +
               FormatRational(jmqx) + "," + FormatRational(fresh) + "," +
               std::string(tighter) + "\n");
    } else {
      Emit(f, out,
           "bound_jmqx=" + FormatRational(jmqx) +
               " bound_new=" + FormatRational(fresh) +
               " tighter=" + std::string(tighter) + "\n");
    }
    return kExitOk;
  }
  throw UsageError("bounds needs --array, --K/--F/--Z or --row");
}

std::pair<std::int64_t, std::int64_t> ParseRange(const std::string& text) {
  auto parse = [&](const std::string& s) {
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end) {
      throw UsageError("bad --n value '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = parse(text);
    return {n, n};
  }
  const auto lo = parse(text.substr(0, dots));
  const auto hi = parse(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty --n range '" + text + "'");
  return {lo, hi};
}

std::string CompareText(const std::vector<ComparisonRow>& rows) {
  std::vector<std::vector<std::string>> cells{
      {"n", "scheme", "K", "M/N", "F", "R"}};
  for (const auto& row : rows) {
    const auto& p = row.params;
    cells.push_back({std::to_string(row.n), p.scheme, p.K.str(),
                     p.memory_ratio ? FormatRational(*p.memory_ratio) : "-",
                     p.F.str(), FormatRational(p.load)});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  std::ostringstream text;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) text << "  ";
      text << std::setw(static_cast<int>(width[i])) << line[i];
    }
    text << "\n";
  }
  return text.str();
}

int CmdCompare(const CommonFlags& f, const std::string& n_text,
               const std::string& schemes_text, std::ostream& out) {
  if (n_text.empty()) throw UsageError("--n is required");
  const auto [lo, hi] = ParseRange(n_text);
  std::vector<std::string> schemes;
  std::stringstream in(schemes_text);
  std::string id;
  while (std::getline(in, id, ',')) {
    if (!id.empty()) schemes.push_back(id);
  }
  const auto rows = CompareReport(lo, hi, schemes);
  const std::string format = Resolve(f.format, "csv");
  if (format == "json") {
    Emit(f, out, CompareJson(rows).dump(2));
  } else if (format == "text") {
    Emit(f, out, CompareText(rows));
  } else {
    Emit(f, out, CompareCsv(rows));
  }
  return kExitOk;
}

int CmdExport(const CommonFlags& f, const ArrayFlags& a,
              const SourceFlags& src, std::ostream& out) {
  const std::string format = Resolve(f.format, "text");
  if (!a.array.empty()) {
    if (HasSource(src)) {
      throw UsageError("--array cannot be combined with a design source");
    }
    const ArrayFile file = LoadArray(a);
    if (format == "json") {
      Emit(f, out, ToJson(file.array, file.phi).dump(2));
    } else if (format == "csv") {
      Emit(f, out, ToCsv(file.array));
    } else {
      Emit(f, out, RenderText(file.array));
    }
    return kExitOk;
  }
  const ConstructedDpda c = Build(src);
  if (format == "json") {
    Emit(f, out, ToJson(c.dpda).dump(2));
  } else if (format == "csv") {
    Emit(f, out, ToCsv(c.symbolic, c.row_labels, c.col_labels));
  } else {
    Emit(f, out, RenderText(c.symbolic, c.row_labels, c.col_labels));
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"D2D coded caching arrays: construct, check, simulate"};
  app.name("d2dcache");
  app.require_subcommand(1);

  CommonFlags common;
  SourceFlags source;
  ArrayFlags array;
  BoundsFlags bounds;
  std::string demand;
  int num_files = 0;
  std::size_t file_bytes = 1024;
  std::string n_range;
  std::string schemes;

  auto* construct = app.add_subcommand("construct", "Build a DPDA from a design");
  AddCommon(construct, common);
  AddSource(construct, source, true);

  auto* validate = app.add_subcommand("validate", "Check PDA/DPDA conditions");
  AddCommon(validate, common);
  AddArray(validate, array);

  auto* simulate = app.add_subcommand("simulate", "Run placement and delivery");
  AddCommon(simulate, common);
  AddArray(simulate, array);
  simulate->add_option("--demand", demand,
                       "Comma-separated 1-based files, or 'random'");
  simulate->add_option("--N", num_files, "Library size (default K)");
  simulate->add_option("--B", file_bytes, "File size in bytes")
      ->check(CLI::PositiveNumber);

  auto* bnd = app.add_subcommand("bounds", "Load bounds and scheme catalog");
  AddCommon(bnd, common);
  AddArray(bnd, bounds.array);
  bnd->add_option("--K", bounds.K, "Users");
  bnd->add_option("--F", bounds.F, "Subpacketization");
  bnd->add_option("--Z", bounds.Z, "Stars per column");
  bnd->add_option("--row", bounds.row, "Catalog row 1-8")
      ->check(CLI::Range(1, 8));
  bnd->add_option("--param", bounds.params, "Catalog input key=value");

  auto* compare = app.add_subcommand("compare", "Per-n comparison table");
  AddCommon(compare, common);
  compare->add_option("--n", n_range, "n or lo..hi");
  compare->add_option("--schemes", schemes,
                      "jcm,jcm_sq,jcm_2n,hypercube,constrI,constrII");

  auto* exp = app.add_subcommand("export", "Render an array as json/csv/text");
  AddCommon(exp, common);
  AddArray(exp, array);
  AddSource(exp, source, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return CmdConstruct(common, source, out);
    if (*validate) return CmdValidate(common, array, out);
    if (*simulate) {
      return CmdSimulate(common, array, demand, num_files, file_bytes, out,
                         err);
    }
    if (*bnd) return CmdBounds(common, bounds, out, err);
    if (*compare) return CmdCompare(common, n_range, schemes, out);
    if (*exp) return CmdExport(common, array, source, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CatalogError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundsError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FieldError& e) {
    err << "invalid generator matrix: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const DesignError& e) {
    err << "invalid design: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ConstructionError& e) {
    err << "construction precondition failed: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  std::vector<const char*> argv{"d2dcache"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace d2dcache
