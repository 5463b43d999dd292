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

#include "d2dcache/catalog.h"

#include <algorithm>
#include <cmath>

namespace d2dcache {

namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw CatalogError("constraint violated: " + what);
}

std::int64_t Get(const CatalogInputs& in, const std::string& key) {
  auto it = in.find(key);
  if (it == in.end()) throw CatalogError("missing input '" + key + "'");
  return it->second;
}

SchemeParams Make(std::string name, BigInt K, Rational memory, BigInt F,
                  Rational load) {
  SchemeParams p;
  p.scheme = std::move(name);
  p.K = std::move(K);
  p.F = std::move(F);
  p.memory_ratio = memory;
  p.memory_ratio_approx = ToDouble(memory);
  p.load = std::move(load);
  return p;
}

SchemeParams RsGraphScheme(std::int64_t gamma, std::int64_t tau,
                           std::int64_t lambda, std::int64_t z) {
  Require(gamma >= 1 && tau >= 1, "gamma, tau >= 1");
  Require(lambda >= 2, "lambda >= 2");
  Require(z >= 2 * lambda, "z >= 2 lambda");
  const BigInt k = Power(lambda, z);
  SchemeParams p;
  p.scheme = "rs_graph";
  p.K = k;
  p.F = k * (2 * gamma - 1);
  // 2 lambda^(-z / (2 lambda^4 ln lambda)) has no exact rational form.
  const double l = static_cast<double>(lambda);
  p.memory_ratio_approx =
      2.0 * std::pow(l, -static_cast<double>(z) /
                            (2.0 * std::pow(l, 4) * std::log(l)));
  p.load = Rational(BigInt(tau), k) * Rational(2 * gamma, 2 * gamma - 1);
  return p;
}

SchemeParams LiChangThm2(std::int64_t n, std::int64_t a, std::int64_t t) {
  Require(n >= 1 && a >= 1 && t >= 1, "n, a, t positive");
  Require(t <= a && a <= n - t, "t <= a <= n - t");
  const BigInt f = Binomial(n, 2 * t) * Binomial(2 * t, t);
  const BigInt k = Binomial(n, a);
  return Make("lc_thm2", k,
              1 - Rational(Binomial(n - a, t) * Binomial(a, t), f), f,
              Rational(k, f));
}

SchemeParams LiChangThm3(std::int64_t n, std::int64_t a) {
  Require(n >= 1 && a >= 1, "n, a positive");
  Require(n >= 4 * a, "n >= 4a");
  const BigInt f = Binomial(n, 2 * a);
  const BigInt k = 2 * Binomial(n, a);
  return Make("lc_thm3", k, 1 - Rational(Binomial(n - a, a), f), f,
              Rational(k, f));
}

SchemeParams LiChangThm4(std::int64_t n, std::int64_t d) {
  Require(n >= 3 && n % 2 == 1, "n odd, n >= 3");
  Require(d >= 1 && d < n, "1 <= d < n");
  return Make("lc_thm4", n, 1 - Rational(d, n), n, Rational(1));
}

SchemeParams LiChangThm5(std::int64_t n, std::int64_t a, std::int64_t b) {
  Require(a >= 1 && a < b && b < 2 * a && 2 * a < n, "a < b < 2a < n");
  const BigInt f = Binomial(n, b);
  const BigInt k = Binomial(n, a);
  return Make("lc_thm5", k,
              1 - Rational(Binomial(a, b - a) * Binomial(n - a, a), f), f,
              Rational(k * Binomial(n - a, 2 * a - b), f));
}

SchemeParams PdaLift(std::int64_t g, std::int64_t K, std::int64_t F,
                     std::int64_t Z, std::int64_t S) {
  Require(g >= 1, "g >= 1");
  Require(K >= 1 && S >= 1, "K, S >= 1");
  Require(Z >= 1 && Z < F, "0 < Z < F");
  auto p = Make("pda_lift", K, Rational(Z, F), BigInt(g) * F,
                Rational(BigInt(g + 1) * S, BigInt(g) * F));
  p.Z = BigInt(g) * Z;
  p.S = BigInt(g + 1) * S;
  return p;
}

}  // namespace

std::string CatalogRowName(int row) {
  static const char* const kNames[] = {"jcm",     "rs_graph", "hypercube",
                                       "lc_thm2", "lc_thm3",  "lc_thm4",
                                       "lc_thm5", "pda_lift"};
  if (row < 1 || row > 8) {
    throw CatalogError("unknown catalog row " + std::to_string(row));
  }
  return kNames[row - 1];
}

SchemeParams JcmScheme(std::int64_t K, std::int64_t t) {
  Require(K >= 2, "K >= 2");
  Require(t >= 1 && t <= K - 1, "t in [K-1]");
  return Make("jcm", K, Rational(t, K), BigInt(t) * Binomial(K, t),
              Rational(K, t) - 1);
}

SchemeParams HypercubeScheme(std::int64_t n) {
  Require(n >= 2, "n >= 2");
  return Make("hypercube", BigInt(n) * n, Rational(1, n), Power(n, n),
              Rational(n));
}

SchemeParams ConstructionIScheme(std::int64_t n) {
  Require(n >= 2, "n >= 2");
  auto p = Make("constrI", 2 * n, Rational(1, n), BigInt(n) * n,
                Rational(n - 1));
  p.Z = BigInt(n);
  p.S = BigInt(n) * n * (n - 1);
  return p;
}

SchemeParams ConstructionIIScheme(std::int64_t n) {
  Require(n >= 2, "n >= 2");
  auto p = Make("constrII", BigInt(n) * n, Rational(1, n), 2 * n,
                Rational(n * (n - 1), 2));
  p.Z = BigInt(2);
  p.S = BigInt(n) * n * (n - 1);
  return p;
}

SchemeParams Catalog(int row, const CatalogInputs& in) {
  switch (row) {
    case 1:
      return JcmScheme(Get(in, "K"), Get(in, "t"));
    case 2:
      return RsGraphScheme(Get(in, "gamma"), Get(in, "tau"),
                           Get(in, "lambda"), Get(in, "z"));
    case 3:
      return HypercubeScheme(Get(in, "n"));
    case 4:
      return LiChangThm2(Get(in, "n"), Get(in, "a"), Get(in, "t"));
    case 5:
      return LiChangThm3(Get(in, "n"), Get(in, "a"));
    case 6:
      return LiChangThm4(Get(in, "n"), Get(in, "d"));
    case 7:
      return LiChangThm5(Get(in, "n"), Get(in, "a"), Get(in, "b"));
    case 8:
      return PdaLift(Get(in, "g"), Get(in, "K"), Get(in, "F"), Get(in, "Z"),
                     Get(in, "S"));
    default:
      throw CatalogError("unknown catalog row " + std::to_string(row));
  }
}

std::vector<ComparisonRow> CompareReport(
    std::int64_t n_min, std::int64_t n_max,
    const std::vector<std::string>& schemes) {
  static const std::vector<std::string> kOrder = {
      "jcm_sq", "hypercube", "constrII", "jcm_2n", "constrI"};
  if (n_min < 2) throw CatalogError("comparison needs n >= 2");
  if (n_max < n_min) throw CatalogError("empty n range");
  std::vector<bool> wanted(kOrder.size(), schemes.empty());
  for (const auto& id : schemes) {
    if (id == "jcm") {
      wanted[0] = wanted[3] = true;
      continue;
    }
    auto it = std::find(kOrder.begin(), kOrder.end(), id);
    if (it == kOrder.end()) throw CatalogError("unknown scheme '" + id + "'");
    wanted[it - kOrder.begin()] = true;
  }
  std::vector<ComparisonRow> rows;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    for (std::size_t i = 0; i < kOrder.size(); ++i) {
      if (!wanted[i]) continue;
      SchemeParams p;
      switch (i) {
        case 0:
          p = JcmScheme(n * n, n);
          break;
        case 1:
          p = HypercubeScheme(n);
          break;
        case 2:
          p = ConstructionIIScheme(n);
          break;
        case 3:
          p = JcmScheme(2 * n, 2);
          break;
        default:
          p = ConstructionIScheme(n);
          break;
      }
      p.scheme = kOrder[i];
      rows.push_back({n, std::move(p)});
    }
  }
  return rows;
}

}  // namespace d2dcache
