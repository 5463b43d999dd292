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

// Lower bounds on the load R = S/F of a (K, F, Z, S) DPDA.
//
//   BoundJmqx: R >= F/Z - 1, tight iff every symbol appears KZ/F times and
//              every row has KZ/F stars.
//   BoundNew:  R >= (K/F)(F/Z - 1), tight iff every symbol appears Z times.
//
// BoundNew exceeds BoundJmqx exactly when K > F; they coincide when K = F.

#ifndef D2DCACHE_BOUNDS_H_
#define D2DCACHE_BOUNDS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "d2dcache/pda.h"
#include "d2dcache/rational.h"

namespace d2dcache {

class BoundsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters of a coded caching scheme. S and Z are absent for cataloged
// schemes whose tables do not give them. memory_ratio is absent only when
// the closed form is irrational; memory_ratio_approx is always set.
struct SchemeParams {
  std::string scheme;
  BigInt K;
  BigInt F;
  std::optional<BigInt> Z;
  std::optional<BigInt> S;
  std::optional<Rational> memory_ratio;
  double memory_ratio_approx = 0.0;
  Rational load;
};

// Exact parameters of a validated array: M/N = Z/F, R = S/F.
SchemeParams ParamsOf(const PdaParams& p, std::string scheme = "dpda");

// F/Z - 1. Throws BoundsError unless 0 < Z < F.
Rational BoundJmqx(const BigInt& F, const BigInt& Z);

// (K/F)(F/Z - 1). Throws BoundsError unless 0 < Z < F and K >= 1.
Rational BoundNew(const BigInt& K, const BigInt& F, const BigInt& Z);

enum class Tighter { kJmqx, kNew, kEqual };

std::string_view TighterName(Tighter t);

// Which bound is larger, from K versus F alone.
Tighter TighterBound(const BigInt& K, const BigInt& F);

struct EqualityEvidence {
  // KZ/F is an integer, every symbol appears KZ/F times, and every row
  // holds KZ/F stars.
  bool symbols_appear_kz_over_f = false;
  bool rows_have_kz_over_f_stars = false;
  // Every symbol appears Z times.
  bool symbols_appear_z = false;
  int max_symbol_occurrence = 0;
};

struct OptimalityReport {
  PdaParams params;
  Rational load;
  Rational bound_jmqx;
  Rational bound_new;
  Tighter tighter = Tighter::kEqual;
  bool meets_jmqx = false;
  bool meets_new = false;
  EqualityEvidence evidence;
  // Disagreements between value equality and the structural conditions, or
  // a load below a bound. Empty for every correct DPDA.
  std::vector<std::string> inconsistencies;

  bool consistent() const { return inconsistencies.empty(); }
};

OptimalityReport Classify(const Dpda& d);

}  // namespace d2dcache

#endif  // D2DCACHE_BOUNDS_H_
