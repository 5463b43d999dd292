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

#include "d2dcache/pda.h"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace d2dcache {

Entry Entry::Symbol(int s) {
  if (s < 1) {
    throw PdaError("symbols must be integers >= 1, got " + std::to_string(s));
  }
  return Entry(s);
}

PdaArray::PdaArray(int rows, int cols)
    : PdaArray(rows, cols,
               std::vector<Entry>(
                   rows > 0 && cols > 0 ? static_cast<std::size_t>(rows) * cols
                                        : 0)) {}

PdaArray::PdaArray(int rows, int cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 1 || cols < 1) {
    throw PdaError("array needs at least one row and one column");
  }
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw PdaError("entry count does not match " + std::to_string(rows) +
                   " x " + std::to_string(cols));
  }
}

PdaArray PdaArray::FromRows(const std::vector<std::vector<Entry>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw PdaError("array needs at least one row and one column");
  }
  const std::size_t cols = rows.front().size();
  std::vector<Entry> entries;
  entries.reserve(rows.size() * cols);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != cols) {
      throw PdaError("ragged grid: row " + std::to_string(j + 1) + " has " +
                     std::to_string(rows[j].size()) + " entries, expected " +
                     std::to_string(cols));
    }
    entries.insert(entries.end(), rows[j].begin(), rows[j].end());
  }
  return PdaArray(static_cast<int>(rows.size()), static_cast<int>(cols),
                  std::move(entries));
}

std::size_t PdaArray::Index(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw std::out_of_range("array index (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") out of range");
  }
  return static_cast<std::size_t>(row) * cols_ + col;
}

int PdaArray::MaxSymbol() const {
  int s = 0;
  for (auto e : entries_) s = std::max(s, e.symbol());
  return s;
}

int PdaArray::StarsInColumn(int col) const {
  int count = 0;
  for (int j = 0; j < rows_; ++j) count += at(j, col).is_star() ? 1 : 0;
  return count;
}

int PdaArray::StarsInRow(int row) const {
  int count = 0;
  for (int k = 0; k < cols_; ++k) count += at(row, k).is_star() ? 1 : 0;
  return count;
}

bool PdaArray::SameEntries(const PdaArray& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

std::string_view ConditionName(Condition c) {
  switch (c) {
    case Condition::kC1:
      return "C1";
    case Condition::kC2:
      return "C2";
    case Condition::kC3a:
      return "C3a";
    case Condition::kC3b:
      return "C3b";
    case Condition::kC4:
      return "C4";
  }
  return "?";
}

namespace {

struct Cell {
  int row;
  int col;
};

// occurrences[s] lists the cells holding s, row-major. Index 0 is unused.
std::vector<std::vector<Cell>> GroupBySymbol(const PdaArray& a) {
  std::vector<std::vector<Cell>> groups(a.MaxSymbol() + 1);
  for (int j = 0; j < a.rows(); ++j) {
    for (int k = 0; k < a.cols(); ++k) {
      const auto e = a.at(j, k);
      if (!e.is_star()) groups[e.symbol()].push_back({j, k});
    }
  }
  return groups;
}

std::string Where(int row, int col) {
  return "(row " + std::to_string(row + 1) + ", col " +
         std::to_string(col + 1) + ")";
}

}  // namespace

PdaValidation ValidatePda(const PdaArray& a) {
  PdaValidation result;
  auto& out = result.violations;

  // C1: common star count per column.
  std::vector<int> stars(a.cols());
  std::map<int, int> frequency;
  for (int k = 0; k < a.cols(); ++k) {
    stars[k] = a.StarsInColumn(k);
    ++frequency[stars[k]];
  }
  int z = stars[0];
  for (const auto& [count, times] : frequency) {
    if (times > frequency[z]) z = count;
  }
  for (int k = 0; k < a.cols(); ++k) {
    if (stars[k] != z) {
      out.push_back({Condition::kC1,
                     {},
                     {k},
                     std::nullopt,
                     "column " + std::to_string(k + 1) + " has " +
                         std::to_string(stars[k]) + " stars, expected " +
                         std::to_string(z)});
    }
  }
  if (frequency.size() == 1 && z == 0) {
    out.push_back({Condition::kC1, {}, {}, std::nullopt,
                   "no column contains a star (Z must be positive)"});
  }

  // C2: symbols 1..S all present.
  const auto groups = GroupBySymbol(a);
  const int s_max = a.MaxSymbol();
  if (s_max == 0) {
    out.push_back({Condition::kC2, {}, {}, std::nullopt,
                   "array contains no integer symbols"});
  }
  for (int s = 1; s <= s_max; ++s) {
    if (groups[s].empty()) {
      out.push_back({Condition::kC2, {}, {}, s,
                     "symbol " + std::to_string(s) +
                         " does not occur although S = " +
                         std::to_string(s_max)});
    }
  }

  // C3: pairwise within each symbol group.
  for (int s = 1; s <= s_max; ++s) {
    const auto& cells = groups[s];
    for (std::size_t p = 0; p < cells.size(); ++p) {
      for (std::size_t q = p + 1; q < cells.size(); ++q) {
        const Cell& c1 = cells[p];
        const Cell& c2 = cells[q];
        if (c1.row == c2.row || c1.col == c2.col) {
          out.push_back({Condition::kC3a,
                         {c1.row, c2.row},
                         {c1.col, c2.col},
                         s,
                         "symbol " + std::to_string(s) + " at " +
                             Where(c1.row, c1.col) + " and " +
                             Where(c2.row, c2.col) +
                             " shares a " +
                             (c1.row == c2.row ? "row" : "column")});
          continue;
        }
        std::vector<std::string> missing;
        if (!a.at(c1.row, c2.col).is_star()) {
          missing.push_back(Where(c1.row, c2.col));
        }
        if (!a.at(c2.row, c1.col).is_star()) {
          missing.push_back(Where(c2.row, c1.col));
        }
        if (!missing.empty()) {
          std::string msg = "symbol " + std::to_string(s) + " at " +
                            Where(c1.row, c1.col) + " and " +
                            Where(c2.row, c2.col) + " needs a star at";
          for (const auto& m : missing) msg += " " + m;
          out.push_back({Condition::kC3b,
                         {c1.row, c2.row},
                         {c1.col, c2.col},
                         s,
                         std::move(msg)});
        }
      }
    }
  }

  if (out.empty()) result.params = PdaParams{a.cols(), a.rows(), z, s_max};
  return result;
}

Regularity ComputeRegularity(const PdaArray& a) {
  Regularity result;
  for (auto e : a.entries()) {
    if (!e.is_star()) ++result.occurrences[e.symbol()];
  }
  if (result.occurrences.empty()) return result;
  std::map<int, int> frequency;
  for (const auto& [s, count] : result.occurrences) ++frequency[count];
  int mode = frequency.begin()->first;
  for (const auto& [count, times] : frequency) {
    if (times > frequency[mode]) mode = count;
  }
  for (const auto& [s, count] : result.occurrences) {
    if (count != mode) result.irregular_symbols.push_back(s);
  }
  if (result.irregular_symbols.empty()) result.g = mode;
  return result;
}

PhiDerivation DerivePhi(const PdaArray& a) {
  PhiDerivation result;
  const auto groups = GroupBySymbol(a);
  const int s_max = a.MaxSymbol();
  result.phi.assign(s_max, -1);
  result.candidates.resize(s_max);
  for (int s = 1; s <= s_max; ++s) {
    auto& cand = result.candidates[s - 1];
    if (!groups[s].empty()) {
      for (int k = 0; k < a.cols(); ++k) {
        const bool all_star =
            std::all_of(groups[s].begin(), groups[s].end(),
                        [&](const Cell& c) { return a.at(c.row, k).is_star(); });
        if (all_star) cand.push_back(k);
      }
    }
    if (cand.empty()) {
      result.failed_symbols.push_back(s);
    } else {
      result.phi[s - 1] = cand.front();
    }
  }
  return result;
}

bool SatisfiesC4(const PdaArray& a, int s, int col) {
  if (col < 0 || col >= a.cols()) return false;
  for (int j = 0; j < a.rows(); ++j) {
    bool has_s = false;
    for (int k = 0; k < a.cols() && !has_s; ++k) {
      has_s = a.at(j, k).symbol() == s;
    }
    if (has_s && !a.at(j, col).is_star()) return false;
  }
  return true;
}

DpdaValidation ValidateDpda(const PdaArray& a, std::optional<Phi> phi) {
  DpdaValidation result;
  auto pda = ValidatePda(a);
  result.violations = std::move(pda.violations);
  result.pda_params = pda.params;
  const int s_max = a.MaxSymbol();

  if (phi.has_value()) {
    if (static_cast<int>(phi->size()) != s_max) {
      result.violations.push_back(
          {Condition::kC4, {}, {}, std::nullopt,
           "phi has " + std::to_string(phi->size()) +
               " entries but the array has S = " + std::to_string(s_max)});
    } else {
      for (int s = 1; s <= s_max; ++s) {
        const int col = (*phi)[s - 1];
        if (col < 0 || col >= a.cols()) {
          result.violations.push_back(
              {Condition::kC4, {}, {}, s,
               "phi(" + std::to_string(s) + ") = " + std::to_string(col + 1) +
                   " is not a column"});
          continue;
        }
        std::vector<int> bad_rows;
        for (int j = 0; j < a.rows(); ++j) {
          for (int k = 0; k < a.cols(); ++k) {
            if (a.at(j, k).symbol() == s && !a.at(j, col).is_star()) {
              bad_rows.push_back(j);
              break;
            }
          }
        }
        if (!bad_rows.empty()) {
          std::string msg = "phi(" + std::to_string(s) + ") = column " +
                            std::to_string(col + 1) +
                            " lacks a star in row(s)";
          for (int j : bad_rows) msg += " " + std::to_string(j + 1);
          result.violations.push_back(
              {Condition::kC4, bad_rows, {col}, s, std::move(msg)});
        }
      }
    }
  } else {
    auto derived = DerivePhi(a);
    for (int s : derived.failed_symbols) {
      result.violations.push_back(
          {Condition::kC4, {}, {}, s,
           "no column is a star in every row holding symbol " +
               std::to_string(s)});
    }
    if (derived.ok()) phi = std::move(derived.phi);
  }

  if (result.violations.empty()) {
    result.dpda = Dpda(a, std::move(*phi), *result.pda_params);
  }
  return result;
}

LabeledArray ParseLabeledGrid(std::string_view text) {
  LabeledArray out;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::vector<std::string> row;
    for (std::string tok; tokens >> tok;) row.push_back(tok);
    if (row.empty()) continue;
    if (out.rows == 0) {
      out.cols = static_cast<int>(row.size());
    } else if (static_cast<int>(row.size()) != out.cols) {
      throw PdaError("ragged grid: row " + std::to_string(out.rows + 1) +
                     " has " + std::to_string(row.size()) +
                     " entries, expected " + std::to_string(out.cols));
    }
    for (auto& tok : row) {
      if (tok == "*") {
        out.entries.emplace_back(std::nullopt);
      } else {
        out.entries.emplace_back(std::move(tok));
      }
    }
    ++out.rows;
  }
  if (out.rows == 0) throw PdaError("empty grid");
  return out;
}

PdaArray Canonicalize(const LabeledArray& a) {
  std::unordered_map<std::string, int> names;
  std::vector<Entry> entries;
  entries.reserve(a.entries.size());
  for (const auto& e : a.entries) {
    if (!e.has_value()) {
      entries.push_back(Entry::Star());
      continue;
    }
    auto [it, inserted] =
        names.try_emplace(*e, static_cast<int>(names.size()) + 1);
    entries.push_back(Entry::Symbol(it->second));
  }
  return PdaArray(a.rows, a.cols, std::move(entries));
}

PdaArray Canonicalize(const PdaArray& a) {
  std::unordered_map<int, int> names;
  std::vector<Entry> entries;
  entries.reserve(a.entries().size());
  for (auto e : a.entries()) {
    if (e.is_star()) {
      entries.push_back(e);
      continue;
    }
    auto [it, inserted] =
        names.try_emplace(e.symbol(), static_cast<int>(names.size()) + 1);
    entries.push_back(Entry::Symbol(it->second));
  }
  PdaArray out(a.rows(), a.cols(), std::move(entries));
  out.row_labels = a.row_labels;
  out.col_labels = a.col_labels;
  return out;
}

bool Equivalent(const PdaArray& a, const PdaArray& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw PdaError("cannot compare " + std::to_string(a.rows()) + " x " +
                   std::to_string(a.cols()) + " with " +
                   std::to_string(b.rows()) + " x " +
                   std::to_string(b.cols()) + " arrays");
  }
  return Canonicalize(a).SameEntries(Canonicalize(b));
}

}  // namespace d2dcache
