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

#include "d2dcache/bounds.h"

#include <algorithm>

namespace d2dcache {

SchemeParams ParamsOf(const PdaParams& p, std::string scheme) {
  SchemeParams out;
  out.scheme = std::move(scheme);
  out.K = p.K;
  out.F = p.F;
  out.Z = BigInt(p.Z);
  out.S = BigInt(p.S);
  out.memory_ratio = Rational(p.Z, p.F);
  out.memory_ratio_approx = ToDouble(*out.memory_ratio);
  out.load = Rational(p.S, p.F);
  return out;
}

namespace {

void CheckFz(const BigInt& F, const BigInt& Z) {
  if (Z <= 0 || Z >= F) {
    throw BoundsError("bounds need 0 < Z < F, got F = " + F.str() +
                      ", Z = " + Z.str());
  }
}

}  // namespace

Rational BoundJmqx(const BigInt& F, const BigInt& Z) {
  CheckFz(F, Z);
  return Rational(F, Z) - 1;
}

Rational BoundNew(const BigInt& K, const BigInt& F, const BigInt& Z) {
  CheckFz(F, Z);
  if (K < 1) throw BoundsError("bounds need K >= 1");
  return Rational(K, F) * (Rational(F, Z) - 1);
}

std::string_view TighterName(Tighter t) {
  switch (t) {
    case Tighter::kJmqx:
      return "jmqx";
    case Tighter::kNew:
      return "new";
    case Tighter::kEqual:
      return "equal";
  }
  return "?";
}

Tighter TighterBound(const BigInt& K, const BigInt& F) {
  if (K > F) return Tighter::kNew;
  if (K < F) return Tighter::kJmqx;
  return Tighter::kEqual;
}

OptimalityReport Classify(const Dpda& d) {
  const PdaParams& p = d.params();
  const PdaArray& a = d.array();
  OptimalityReport report;
  report.params = p;
  report.load = Rational(p.S, p.F);
  report.bound_jmqx = BoundJmqx(p.F, p.Z);
  report.bound_new = BoundNew(p.K, p.F, p.Z);
  report.tighter = TighterBound(p.K, p.F);
  report.meets_jmqx = report.load == report.bound_jmqx;
  report.meets_new = report.load == report.bound_new;

  const auto regularity = ComputeRegularity(a);
  auto& ev = report.evidence;
  bool all_z = true;
  for (const auto& [s, count] : regularity.occurrences) {
    ev.max_symbol_occurrence = std::max(ev.max_symbol_occurrence, count);
    all_z = all_z && count == p.Z;
  }
  ev.symbols_appear_z = all_z;
  const long long kz = static_cast<long long>(p.K) * p.Z;
  if (kz % p.F == 0) {
    const int target = static_cast<int>(kz / p.F);
    ev.symbols_appear_kz_over_f = regularity.g == target;
    bool rows_ok = true;
    for (int j = 0; j < a.rows() && rows_ok; ++j) {
      rows_ok = a.StarsInRow(j) == target;
    }
    ev.rows_have_kz_over_f_stars = rows_ok;
  }

  auto& bad = report.inconsistencies;
  if (report.load < report.bound_jmqx) {
    bad.push_back("load " + FormatRational(report.load) +
                  " is below the F/Z - 1 bound " +
                  FormatRational(report.bound_jmqx));
  }
  if (report.load < report.bound_new) {
    bad.push_back("load " + FormatRational(report.load) +
                  " is below the (K/F)(F/Z - 1) bound " +
                  FormatRational(report.bound_new));
  }
  if (report.meets_jmqx !=
      (ev.symbols_appear_kz_over_f && ev.rows_have_kz_over_f_stars)) {
    bad.push_back(
        "F/Z - 1 bound: value equality disagrees with the structural "
        "condition (KZ/F occurrences per symbol and stars per row)");
  }
  if (report.meets_new != ev.symbols_appear_z) {
    bad.push_back(
        "(K/F)(F/Z - 1) bound: value equality disagrees with every symbol "
        "appearing Z times");
  }
  if (ev.max_symbol_occurrence > p.Z) {
    bad.push_back("a symbol occurs more than Z times");
  }
  return report;
}

}  // namespace d2dcache
