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

#ifndef D2DCACHE_FINITE_FIELD_H_
#define D2DCACHE_FINITE_FIELD_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace d2dcache {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic in GF(q) for prime q. Elements are plain integers in [0, q).
class PrimeField {
 public:
  using Element = std::uint32_t;

  // Throws FieldError if q is not prime.
  explicit PrimeField(std::uint32_t q);

  std::uint32_t modulus() const { return q_; }

  Element Add(Element a, Element b) const;
  Element Sub(Element a, Element b) const;
  Element Neg(Element a) const;
  Element Mul(Element a, Element b) const;
  // Throws FieldError for a == 0.
  Element Inv(Element a) const;
  Element Div(Element a, Element b) const { return Mul(a, Inv(b)); }

  bool Contains(std::int64_t a) const { return a >= 0 && a < q_; }

 private:
  void CheckElement(Element a) const;

  std::uint32_t q_;
};

bool IsPrime(std::uint32_t n);

using Codeword = std::vector<PrimeField::Element>;

// k x n generator matrix of a linear code over a prime field. Construction
// verifies that every entry lies in [0, q) and the rows are linearly
// independent.
class GeneratorMatrix {
 public:
  GeneratorMatrix(std::uint32_t q,
                  std::vector<std::vector<PrimeField::Element>> rows);

  const PrimeField& field() const { return field_; }
  std::uint32_t q() const { return field_.modulus(); }
  std::size_t k() const { return rows_.size(); }
  std::size_t n() const { return rows_.front().size(); }
  const std::vector<std::vector<PrimeField::Element>>& rows() const {
    return rows_;
  }

  // Number of codewords, q^k.
  std::size_t NumCodewords() const;

  // Base-q digits of `index`, most significant first, length k.
  std::vector<PrimeField::Element> Message(std::size_t index) const;

  // message(index) * G.
  Codeword Encode(std::size_t index) const;

 private:
  PrimeField field_;
  std::vector<std::vector<PrimeField::Element>> rows_;
};

// Rank of a matrix over GF(q) by Gaussian elimination.
std::size_t Rank(const PrimeField& field,
                 std::vector<std::vector<PrimeField::Element>> rows);

// All q^k codewords; entry i is Encode(i).
std::vector<Codeword> EnumerateCodewords(const GeneratorMatrix& g);

}  // namespace d2dcache

#endif  // D2DCACHE_FINITE_FIELD_H_
