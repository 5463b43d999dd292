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

// Closed-form (K, M/N, F, R) of known D2D coded caching schemes, plus the
// per-n comparison table against the two grid constructions.
//
// Rows:
//   1 jcm        K, t           t in [K-1]
//   2 rs_graph   gamma, tau, lambda, z      lambda >= 2, z >= 2 lambda
//   3 hypercube  n              n >= 2
//   4 lc_thm2    n, a, t        t <= a <= n - t
//   5 lc_thm3    n, a           n >= 4a
//   6 lc_thm4    n, d           n odd, 1 <= d < n (D itself is not checked)
//   7 lc_thm5    n, a, b        a < b < 2a < n
//   8 pda_lift   g, K, F, Z, S  parameters of a (g+1)-regular PDA

#ifndef D2DCACHE_CATALOG_H_
#define D2DCACHE_CATALOG_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "d2dcache/bounds.h"

namespace d2dcache {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using CatalogInputs = std::map<std::string, std::int64_t>;

// Throws CatalogError on unknown rows, missing inputs or violated
// constraints.
SchemeParams Catalog(int row, const CatalogInputs& inputs);

std::string CatalogRowName(int row);

SchemeParams JcmScheme(std::int64_t K, std::int64_t t);
SchemeParams HypercubeScheme(std::int64_t n);
// Grid constructions by formula (no array is built).
SchemeParams ConstructionIScheme(std::int64_t n);
SchemeParams ConstructionIIScheme(std::int64_t n);

struct ComparisonRow {
  std::int64_t n;
  SchemeParams params;
};

// Scheme ids: jcm_sq (K = n^2, t = n), hypercube, constrII, jcm_2n (K = 2n,
// t = 2), constrI. "jcm" selects both JCM rows. Empty selects everything.
// Throws CatalogError for n < 2 or unknown ids.
std::vector<ComparisonRow> CompareReport(
    std::int64_t n_min, std::int64_t n_max,
    const std::vector<std::string>& schemes = {});

}  // namespace d2dcache

#endif  // D2DCACHE_CATALOG_H_
