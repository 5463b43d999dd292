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

#include "d2dcache/constructions.h"

#include <algorithm>
#include <map>
#include <utility>

namespace d2dcache {

std::string_view ConstructionName(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::kGeneral:
      return "general";
    case ConstructionKind::kI:
      return "I";
    case ConstructionKind::kII:
      return "II";
  }
  return "?";
}

namespace {

using SymbolKey = std::pair<int, int>;

// Numbers symbol keys 1..S in order of first use.
class SymbolTable {
 public:
  int Intern(const SymbolKey& key, std::string label) {
    auto [it, inserted] =
        ids_.try_emplace(key, static_cast<int>(labels_.size()) + 1);
    if (inserted) labels_.push_back(std::move(label));
    return it->second;
  }
  std::vector<std::string> TakeLabels() { return std::move(labels_); }

 private:
  std::map<SymbolKey, int> ids_;
  std::vector<std::string> labels_;
};

bool CompactLabels(const Design& d) {
  return std::all_of(d.points().begin(), d.points().end(),
                     [](const auto& s) { return s.size() == 1; });
}

void RequireMu2(const Resolution& res) {
  if (res.r() < 2) {
    throw ConstructionError("construction needs at least 2 parallel classes");
  }
  const auto profile = ComputeCrossProfile(res);
  if (profile.Mu(2) != 1) {
    throw ConstructionError(
        profile.Mu(2).has_value()
            ? "design has mu_2 = " + std::to_string(*profile.Mu(2)) +
                  ", construction requires mu_2 = 1"
            : "design has no second cross intersection number, construction "
              "requires mu_2 = 1");
  }
}

void RequireGrid(const Resolution& res) {
  if (res.r() != 2) {
    throw ConstructionError("construction needs exactly 2 parallel classes, "
                            "got " + std::to_string(res.r()));
  }
  const int n = res.k();
  if (res.v() != n * n || res.class_size() != n) {
    throw ConstructionError(
        "construction needs n blocks of size n over n^2 points (v = " +
        std::to_string(res.v()) + ", k = " + std::to_string(n) + ")");
  }
  RequireMu2(res);
}

// The single point of A(j, i) n A_{succ j}(x).
int CrossPoint(const Resolution& res, int j, int i, int x) {
  const int succ = (j + 1) % res.r();
  const Block& other = res.block(succ, res.BlockContaining(succ, x));
  const Block& own = res.block(j, i);
  std::vector<int> meet;
  std::set_intersection(own.begin(), own.end(), other.begin(), other.end(),
                        std::back_inserter(meet));
  if (meet.size() != 1) {
    throw std::logic_error("cross-class blocks meet in " +
                           std::to_string(meet.size()) + " points");
  }
  return meet[0];
}

Dpda Finish(const PdaArray& array, const Phi& phi) {
  auto checked = ValidateDpda(array, phi);
  if (!checked.ok()) {
    throw std::logic_error("constructed array failed DPDA validation: " +
                           checked.violations.front().message);
  }
  return std::move(*checked.dpda);
}

void CheckParams(const PdaParams& got, const PdaParams& want,
                 std::string_view what) {
  if (!(got == want)) {
    throw std::logic_error(std::string(what) + " produced parameters (" +
                           std::to_string(got.K) + "," + std::to_string(got.F) +
                           "," + std::to_string(got.Z) + "," +
                           std::to_string(got.S) + ")");
  }
}

}  // namespace

ConstructedDpda ConstructGeneral(const Resolution& crd) {
  RequireMu2(crd);
  const Design& d = crd.design();
  const bool compact = CompactLabels(d);
  const int r = crd.r();
  const int per_class = crd.class_size();
  const int rows = crd.v();
  const int cols = crd.b();

  std::vector<std::string> col_labels;
  std::vector<std::pair<int, int>> columns;  // (class, position)
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < per_class; ++i) {
      columns.emplace_back(j, i);
      col_labels.push_back(crd.BlockLabel(j, i));
    }
  }

  SymbolTable symbols;
  std::vector<Entry> entries;
  LabeledArray symbolic{rows, cols, {}};
  for (int x = 0; x < rows; ++x) {
    for (const auto& [j, i] : columns) {
      if (crd.Contains(j, i, x)) {
        entries.push_back(Entry::Star());
        symbolic.entries.emplace_back(std::nullopt);
        continue;
      }
      const int y = CrossPoint(crd, j, i, x);
      const int a = std::min(x, y);
      const int b = std::max(x, y);
      std::string label = d.points()[a] + (compact ? "" : ",") + d.points()[b];
      entries.push_back(Entry::Symbol(symbols.Intern({a, b}, label)));
      symbolic.entries.emplace_back(std::move(label));
    }
  }
  PdaArray array(rows, cols, std::move(entries));
  array.row_labels = d.points();
  array.col_labels = col_labels;

  // phi: column of the unique block containing both points of the pair.
  auto labels = symbols.TakeLabels();
  Phi phi(labels.size(), -1);
  for (int x = 0; x < rows; ++x) {
    for (int c = 0; c < cols; ++c) {
      const auto e = array.at(x, c);
      if (e.is_star() || phi[e.symbol() - 1] != -1) continue;
      const auto& [j, i] = columns[c];
      const int y = CrossPoint(crd, j, i, x);
      int owner = -1;
      for (int cls = 0; cls < r; ++cls) {
        const int pos = crd.BlockContaining(cls, x);
        if (crd.Contains(cls, pos, y)) {
          if (owner != -1) {
            throw std::logic_error("point pair lies in two blocks");
          }
          owner = cls * per_class + pos;
        }
      }
      phi[e.symbol() - 1] = owner;
    }
  }

  const int k = crd.k();
  const PdaParams want{cols, rows, k, k * (k - 1) / 2 * cols};
  Dpda dpda = Finish(array, phi);
  CheckParams(dpda.params(), want, "general construction");
  return ConstructedDpda{std::move(dpda),
                         ConstructionKind::kGeneral,
                         crd,
                         std::move(symbolic),
                         std::move(labels),
                         d.points(),
                         std::move(col_labels)};
}

ConstructedDpda ConstructI(const Resolution& mcrd) {
  RequireGrid(mcrd);
  auto out = ConstructGeneral(mcrd);
  const int n = mcrd.k();
  CheckParams(out.dpda.params(), {2 * n, n * n, n, n * n * (n - 1)},
              "construction I");
  out.kind = ConstructionKind::kI;
  return out;
}

ConstructedDpda ConstructII(const Resolution& mcrd) {
  RequireGrid(mcrd);
  const Design& d = mcrd.design();
  const int n = mcrd.k();
  const int rows = mcrd.b();
  const int cols = mcrd.v();

  std::vector<std::string> row_labels;
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < n; ++i) row_labels.push_back(mcrd.BlockLabel(j, i));
  }

  SymbolTable symbols;
  std::vector<Entry> entries;
  LabeledArray symbolic{rows, cols, {}};
  std::vector<int> symbol_point;  // canonical symbol - 1 -> point y
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> seen(cols, 0);
      for (int x = 0; x < cols; ++x) {
        if (mcrd.Contains(j, i, x)) {
          entries.push_back(Entry::Star());
          symbolic.entries.emplace_back(std::nullopt);
          continue;
        }
        const int y = CrossPoint(mcrd, j, i, x);
        const int alpha = ++seen[y];
        std::string label = d.points()[y] + "_" + std::to_string(alpha);
        const int s = symbols.Intern({y, alpha}, label);
        if (s > static_cast<int>(symbol_point.size())) symbol_point.push_back(y);
        entries.push_back(Entry::Symbol(s));
        symbolic.entries.emplace_back(std::move(label));
      }
    }
  }
  PdaArray array(rows, cols, std::move(entries));
  array.row_labels = row_labels;
  array.col_labels = d.points();

  // phi is the identity on points: symbol (y, alpha) is sent by user y.
  Phi phi = symbol_point;
  Dpda dpda = Finish(array, phi);
  CheckParams(dpda.params(), {n * n, 2 * n, 2, n * n * (n - 1)},
              "construction II");
  return ConstructedDpda{std::move(dpda),     ConstructionKind::kII,
                         mcrd,                std::move(symbolic),
                         symbols.TakeLabels(), std::move(row_labels),
                         d.points()};
}

}  // namespace d2dcache
