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

// Properties checked over every small array, plus random codes.

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "d2dcache/bounds.h"
#include "d2dcache/constructions.h"
#include "d2dcache/design.h"
#include "d2dcache/pda.h"
#include "d2dcache/simulator.h"

namespace d2dcache {
namespace {

// Independent restatement of C1-C3 used as an oracle.
bool OracleIsPda(const PdaArray& a) {
  const int z = a.StarsInColumn(0);
  if (z == 0) return false;
  for (int k = 1; k < a.cols(); ++k) {
    if (a.StarsInColumn(k) != z) return false;
  }
  const int s_max = a.MaxSymbol();
  if (s_max == 0) return false;
  std::set<int> seen;
  for (auto e : a.entries()) {
    if (!e.is_star()) seen.insert(e.symbol());
  }
  if (static_cast<int>(seen.size()) != s_max) return false;
  for (int j1 = 0; j1 < a.rows(); ++j1) {
    for (int k1 = 0; k1 < a.cols(); ++k1) {
      for (int j2 = 0; j2 < a.rows(); ++j2) {
        for (int k2 = 0; k2 < a.cols(); ++k2) {
          if (j1 == j2 && k1 == k2) continue;
          const Entry e1 = a.at(j1, k1);
          if (e1.is_star() || e1 != a.at(j2, k2)) continue;
          if (j1 == j2 || k1 == k2) return false;
          if (!a.at(j1, k2).is_star() || !a.at(j2, k1).is_star()) return false;
        }
      }
    }
  }
  return true;
}

// Calls fn on every rows x cols array over {*, 1..alphabet}.
template <typename Fn>
void ForEachArray(int rows, int cols, int alphabet, Fn fn) {
  const int cells = rows * cols;
  std::vector<int> digits(cells, 0);
  PdaArray a(rows, cols);
  while (true) {
    for (int i = 0; i < cells; ++i) {
      a.set(i / cols, i % cols,
            digits[i] == 0 ? Entry::Star() : Entry::Symbol(digits[i]));
    }
    fn(a);
    int i = 0;
    while (i < cells && ++digits[i] > alphabet) digits[i++] = 0;
    if (i == cells) return;
  }
}

struct Tally {
  long arrays = 0;
  long pdas = 0;
  long dpdas = 0;
  long bounded = 0;
};

void CheckArray(const PdaArray& a, Tally& t) {
  ++t.arrays;
  const PdaValidation v = ValidatePda(a);
  ASSERT_EQ(v.ok(), OracleIsPda(a)) << "validator disagrees with oracle";
  ASSERT_EQ(v.ok(), v.violations.empty());
  if (!v.ok()) return;
  ++t.pdas;
  EXPECT_EQ(v.params->K, a.cols());
  EXPECT_EQ(v.params->F, a.rows());
  EXPECT_EQ(v.params->S, a.MaxSymbol());

  const PhiDerivation phi = DerivePhi(a);
  for (int s = 1; s <= a.MaxSymbol(); ++s) {
    for (int col : phi.candidates[s - 1]) ASSERT_TRUE(SatisfiesC4(a, s, col));
    for (int col = 0; col < a.cols(); ++col) {
      const bool listed =
          std::find(phi.candidates[s - 1].begin(), phi.candidates[s - 1].end(),
                    col) != phi.candidates[s - 1].end();
      ASSERT_EQ(listed, SatisfiesC4(a, s, col));
    }
  }
  const DpdaValidation d = ValidateDpda(a);
  ASSERT_EQ(d.ok(), phi.ok());
  if (!d.ok()) return;
  ++t.dpdas;
  if (v.params->Z >= v.params->F) return;
  ++t.bounded;
  const OptimalityReport r = Classify(*d.dpda);
  ASSERT_GE(r.load, r.bound_jmqx);
  ASSERT_GE(r.load, r.bound_new);
  ASSERT_TRUE(r.consistent()) << r.inconsistencies.front();
}

TEST(ExhaustivePropertyTest, AllSmallArrays) {
  Tally t;
  for (int rows = 1; rows <= 3; ++rows) {
    for (int cols = 1; cols <= 3; ++cols) {
      ForEachArray(rows, cols, std::min(rows * cols, 4),
                   [&](const PdaArray& a) { CheckArray(a, t); });
      if (HasFatalFailure()) return;
    }
  }
  ForEachArray(2, 4, 4, [&](const PdaArray& a) { CheckArray(a, t); });
  ForEachArray(4, 2, 4, [&](const PdaArray& a) { CheckArray(a, t); });
  EXPECT_GT(t.pdas, 0);
  EXPECT_GT(t.dpdas, 0);
  EXPECT_GT(t.bounded, 0);
  RecordProperty("arrays", std::to_string(t.arrays));
  RecordProperty("dpdas", std::to_string(t.dpdas));
}

TEST(ExhaustivePropertyTest, CanonicalFormIsInvariantUnderRelabeling) {
  std::mt19937_64 rng(3);
  ForEachArray(2, 3, 3, [&](const PdaArray& a) {
    std::vector<int> perm = {1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    PdaArray b = a;
    for (int r = 0; r < b.rows(); ++r) {
      for (int c = 0; c < b.cols(); ++c) {
        if (!b.at(r, c).is_star()) {
          b.set(r, c, Entry::Symbol(perm[b.at(r, c).symbol() - 1]));
        }
      }
    }
    ASSERT_TRUE(Equivalent(a, b));
    ASSERT_TRUE(Canonicalize(Canonicalize(a)).SameEntries(Canonicalize(a)));
  });
}

// Random full-rank generator matrices without zero columns.
std::vector<std::vector<PrimeField::Element>> RandomGenerator(
    std::mt19937_64& rng, std::uint32_t q, int k, int n) {
  std::uniform_int_distribution<std::uint32_t> digit(0, q - 1);
  PrimeField f(q);
  while (true) {
    std::vector<std::vector<PrimeField::Element>> g(
        k, std::vector<PrimeField::Element>(n));
    for (auto& row : g) {
      for (auto& x : row) x = digit(rng);
    }
    bool zero_column = false;
    for (int c = 0; c < n; ++c) {
      bool all_zero = true;
      for (int r = 0; r < k; ++r) all_zero = all_zero && g[r][c] == 0;
      zero_column = zero_column || all_zero;
    }
    if (!zero_column && Rank(f, g) == static_cast<std::size_t>(k)) return g;
  }
}

bool ColumnsPairwiseIndependent(
    const std::vector<std::vector<PrimeField::Element>>& g, std::uint32_t q) {
  PrimeField f(q);
  const std::size_t n = g.front().size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::vector<std::vector<PrimeField::Element>> pair(2);
      for (const auto& row : g) {
        pair[0].push_back(row[a]);
        pair[1].push_back(row[b]);
      }
      if (Rank(f, pair) < 2) return false;
    }
  }
  return true;
}

TEST(RandomCodePropertyTest, DesignsAreResolvableWithExpectedProfile) {
  std::mt19937_64 rng(20260101);
  const std::uint32_t primes[] = {2, 3, 5};
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t q = primes[trial % 3];
    const int k = q == 5 ? 2 : 2 + trial % 2;
    const int n = k + static_cast<int>(rng() % 3);
    const auto rows = RandomGenerator(rng, q, k, n);
    const Resolution res = DesignFromCode(GeneratorMatrix(q, rows));
    std::size_t v = 1;
    for (int i = 0; i < k; ++i) v *= q;
    ASSERT_EQ(res.v(), static_cast<int>(v));
    ASSERT_EQ(res.r(), n);
    ASSERT_EQ(res.k(), static_cast<int>(v / q));
    ASSERT_EQ(res.class_size(), static_cast<int>(q));

    const CrossProfile p = ComputeCrossProfile(res);
    if (ColumnsPairwiseIndependent(rows, q)) {
      ASSERT_EQ(p.Mu(2), static_cast<int>(v / q / q));
    } else {
      ASSERT_FALSE(p.Mu(2).has_value());
    }

    if (p.Mu(2) == 1) {
      const ConstructedDpda c = ConstructGeneral(res);
      const int b = res.b();
      ASSERT_EQ(c.dpda.params(),
                (PdaParams{b, res.v(), res.k(), res.k() * (res.k() - 1) / 2 * b}));
      const OptimalityReport r = Classify(c.dpda);
      ASSERT_TRUE(r.consistent());
    }
  }
}

TEST(RandomCodePropertyTest, FindResolutionRecoversACrossResolution) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rows = RandomGenerator(rng, 3, 2, 3);
    const Resolution res = DesignFromCode(GeneratorMatrix(3, rows));
    const auto found = FindResolution(res.design(), res.k());
    ASSERT_TRUE(found.has_value());
    ASSERT_EQ(found->r(), res.r());
  }
}

TEST(SimulationPropertyTest, RandomDemandsDecodeOnEveryConstruction) {
  std::vector<ConstructedDpda> schemes;
  for (int n = 2; n <= 4; ++n) {
    schemes.push_back(ConstructI(GridMcrd(n)));
    schemes.push_back(ConstructII(GridMcrd(n)));
  }
  schemes.push_back(
      ConstructGeneral(DesignFromCode(GeneratorMatrix(3, {{1, 0, 1, 1},
                                                          {0, 1, 1, 2}}))));
  for (const auto& c : schemes) {
    const PdaParams& p = c.dpda.params();
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const int N = 1 + static_cast<int>(seed % 4);
      const auto demand = RandomDemand(p.K, N, seed);
      const auto report = d2dcache::Run(c.dpda, demand, LibrarySpec{N, 257, seed});
      ASSERT_TRUE(report.all_decoded());
      ASSERT_TRUE(report.one_shot_verified);
      ASSERT_EQ(report.measured_load, Rational(p.S, p.F));
      for (const auto& u : report.users) {
        ASSERT_EQ(u.cached_packets, p.Z);
        ASSERT_EQ(u.transmissions_used, p.F - p.Z);
      }
    }
  }
}

}  // namespace
}  // namespace d2dcache
