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

// Placement delivery arrays.
//
// A PdaArray is an F x K grid (rows = packets, columns = users) whose entries
// are either a star or an integer symbol >= 1. Row and column indices are
// 0-based throughout the API; human-readable messages print them 1-based.
//
// Conditions checked:
//   C1   every column holds the same number Z of stars
//   C2   every symbol 1..S occurs at least once
//   C3a  equal symbols lie in distinct rows and distinct columns
//   C3b  for equal symbols at (j1,k1), (j2,k2): (j1,k2) and (j2,k1) are stars
//   C4   each symbol s has a column phi(s) that is a star in every row
//        containing s

#ifndef D2DCACHE_PDA_H_
#define D2DCACHE_PDA_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace d2dcache {

class PdaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Entry {
 public:
  constexpr Entry() = default;
  static constexpr Entry Star() { return Entry(); }
  // Throws PdaError for s < 1.
  static Entry Symbol(int s);

  constexpr bool is_star() const { return value_ == 0; }
  // 0 for a star.
  constexpr int symbol() const { return value_; }

  friend constexpr bool operator==(Entry, Entry) = default;

 private:
  constexpr explicit Entry(int value) : value_(value) {}
  int value_ = 0;
};

class PdaArray {
 public:
  // All-star array. Throws PdaError unless rows, cols >= 1.
  PdaArray(int rows, int cols);
  // Row-major entries; throws PdaError if the size is not rows * cols.
  PdaArray(int rows, int cols, std::vector<Entry> entries);
  // Throws PdaError on an empty or ragged grid.
  static PdaArray FromRows(const std::vector<std::vector<Entry>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Entry at(int row, int col) const { return entries_[Index(row, col)]; }
  void set(int row, int col, Entry e) { entries_[Index(row, col)] = e; }
  const std::vector<Entry>& entries() const { return entries_; }

  // Largest symbol present, 0 if the array is all stars.
  int MaxSymbol() const;
  int StarsInColumn(int col) const;
  int StarsInRow(int row) const;

  // Optional display labels; empty when unset.
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  // Entry-wise comparison; labels are ignored.
  bool SameEntries(const PdaArray& other) const;

 private:
  std::size_t Index(int row, int col) const;

  int rows_;
  int cols_;
  std::vector<Entry> entries_;
};

enum class Condition { kC1, kC2, kC3a, kC3b, kC4 };

std::string_view ConditionName(Condition c);

struct Violation {
  Condition condition;
  // 0-based coordinates involved in the violation (may be empty).
  std::vector<int> rows;
  std::vector<int> cols;
  std::optional<int> symbol;
  std::string message;
};

struct PdaParams {
  int K = 0;
  int F = 0;
  int Z = 0;
  int S = 0;

  friend bool operator==(const PdaParams&, const PdaParams&) = default;
};

struct PdaValidation {
  std::optional<PdaParams> params;
  std::vector<Violation> violations;

  bool ok() const { return params.has_value(); }
};

// Checks C1-C3 and reports every violation found.
PdaValidation ValidatePda(const PdaArray& a);

struct Regularity {
  std::optional<int> g;
  // symbol -> number of occurrences
  std::map<int, int> occurrences;
  // Symbols whose count differs from the most common count.
  std::vector<int> irregular_symbols;
};

Regularity ComputeRegularity(const PdaArray& a);

// phi[s - 1] is the 0-based column assigned to symbol s.
using Phi = std::vector<int>;

struct PhiDerivation {
  // -1 for symbols without a candidate column.
  Phi phi;
  // Candidate columns per symbol (index s - 1), ascending.
  std::vector<std::vector<int>> candidates;
  std::vector<int> failed_symbols;

  bool ok() const { return failed_symbols.empty(); }
};

// For each symbol, intersects the star columns of every row holding it and
// picks the smallest candidate.
PhiDerivation DerivePhi(const PdaArray& a);

struct DpdaValidation;

class Dpda {
 public:
  const PdaArray& array() const { return array_; }
  const Phi& phi() const { return phi_; }
  const PdaParams& params() const { return params_; }
  // 0-based sender column for symbol s in 1..S.
  int Sender(int s) const { return phi_.at(s - 1); }

 private:
  friend DpdaValidation ValidateDpda(const PdaArray&, std::optional<Phi>);
  Dpda(PdaArray array, Phi phi, PdaParams params)
      : array_(std::move(array)), phi_(std::move(phi)), params_(params) {}

  PdaArray array_;
  Phi phi_;
  PdaParams params_;
};

struct DpdaValidation {
  std::optional<Dpda> dpda;
  // Present whenever C1-C3 hold, even if C4 fails.
  std::optional<PdaParams> pda_params;
  std::vector<Violation> violations;

  bool ok() const { return dpda.has_value(); }
};

// Runs ValidatePda, then checks `phi` against C4, or derives one when absent.
DpdaValidation ValidateDpda(const PdaArray& a,
                            std::optional<Phi> phi = std::nullopt);

// True iff every row holding s has a star in column `col`.
bool SatisfiesC4(const PdaArray& a, int s, int col);

// A grid whose non-star entries are opaque labels (as in the figures, where
// symbols are point sets).
struct LabeledArray {
  int rows = 0;
  int cols = 0;
  // Row-major; nullopt marks a star.
  std::vector<std::optional<std::string>> entries;

  const std::optional<std::string>& at(int row, int col) const {
    return entries.at(static_cast<std::size_t>(row) * cols + col);
  }
};

// Parses whitespace-separated tokens, one row per non-empty line; "*" is a
// star. Throws PdaError on ragged input.
LabeledArray ParseLabeledGrid(std::string_view text);

// Renames symbols to 1..S by first occurrence in row-major order.
PdaArray Canonicalize(const LabeledArray& a);
PdaArray Canonicalize(const PdaArray& a);

// Same dimensions required (PdaError otherwise). True iff both arrays are
// equal after canonical relabeling.
bool Equivalent(const PdaArray& a, const PdaArray& b);

}  // namespace d2dcache

#endif  // D2DCACHE_PDA_H_
