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

#include "d2dcache/finite_field.h"

#include <utility>

namespace d2dcache {

namespace {

// Codeword enumeration materializes every codeword, so keep q^k bounded.
constexpr std::size_t kMaxCodewords = std::size_t{1} << 22;

}  // namespace

bool IsPrime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (!IsPrime(q)) {
    throw FieldError("field modulus " + std::to_string(q) + " is not prime");
  }
}

void PrimeField::CheckElement(Element a) const {
  if (a >= q_) {
    throw FieldError("element " + std::to_string(a) + " not in GF(" +
                     std::to_string(q_) + ")");
  }
}

PrimeField::Element PrimeField::Add(Element a, Element b) const {
  CheckElement(a);
  CheckElement(b);
  return static_cast<Element>((std::uint64_t{a} + b) % q_);
}

PrimeField::Element PrimeField::Sub(Element a, Element b) const {
  CheckElement(a);
  CheckElement(b);
  return static_cast<Element>((std::uint64_t{a} + q_ - b) % q_);
}

PrimeField::Element PrimeField::Neg(Element a) const { return Sub(0, a); }

PrimeField::Element PrimeField::Mul(Element a, Element b) const {
  CheckElement(a);
  CheckElement(b);
  return static_cast<Element>((std::uint64_t{a} * b) % q_);
}

PrimeField::Element PrimeField::Inv(Element a) const {
  CheckElement(a);
  if (a == 0) throw FieldError("inverse of zero");
  // Fermat: a^(q-2).
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint32_t e = q_ - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return static_cast<Element>(result);
}

std::size_t Rank(const PrimeField& field,
                 std::vector<std::vector<PrimeField::Element>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto inv = field.Inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = field.Mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const auto factor = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) {
        rows[r][j] = field.Sub(rows[r][j], field.Mul(factor, rows[rank][j]));
      }
    }
    ++rank;
  }
  return rank;
}

GeneratorMatrix::GeneratorMatrix(
    std::uint32_t q, std::vector<std::vector<PrimeField::Element>> rows)
    : field_(q), rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw FieldError("generator matrix must have at least one row and column");
  }
  const std::size_t n = rows_.front().size();
  for (const auto& row : rows_) {
    if (row.size() != n) throw FieldError("generator matrix rows are ragged");
    for (auto x : row) {
      if (x >= q) {
        throw FieldError("generator matrix entry " + std::to_string(x) +
                         " not in GF(" + std::to_string(q) + ")");
      }
    }
  }
  if (rows_.size() > n) {
    throw FieldError("generator matrix has more rows than columns");
  }
  if (Rank(field_, rows_) != rows_.size()) {
    throw FieldError("generator matrix is rank deficient");
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (count > kMaxCodewords / q) {
      throw FieldError("code too large to enumerate (q^k > 2^22)");
    }
    count *= q;
  }
}

std::size_t GeneratorMatrix::NumCodewords() const {
  std::size_t count = 1;
  for (std::size_t i = 0; i < k(); ++i) count *= q();
  return count;
}

std::vector<PrimeField::Element> GeneratorMatrix::Message(
    std::size_t index) const {
  if (index >= NumCodewords()) {
    throw FieldError("message index " + std::to_string(index) +
                     " out of range");
  }
  std::vector<PrimeField::Element> digits(k(), 0);
  for (std::size_t i = k(); i-- > 0;) {
    digits[i] = static_cast<PrimeField::Element>(index % q());
    index /= q();
  }
  return digits;
}

Codeword GeneratorMatrix::Encode(std::size_t index) const {
  const auto message = Message(index);
  Codeword word(n(), 0);
  for (std::size_t i = 0; i < k(); ++i) {
    if (message[i] == 0) continue;
    for (std::size_t j = 0; j < n(); ++j) {
      word[j] = field_.Add(word[j], field_.Mul(message[i], rows_[i][j]));
    }
  }
  return word;
}

std::vector<Codeword> EnumerateCodewords(const GeneratorMatrix& g) {
  std::vector<Codeword> words;
  words.reserve(g.NumCodewords());
  for (std::size_t i = 0; i < g.NumCodewords(); ++i) {
    words.push_back(g.Encode(i));
  }
  return words;
}

}  // namespace d2dcache
