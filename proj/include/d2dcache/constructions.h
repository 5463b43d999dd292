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

// DPDA constructions from cross resolvable designs with mu_2 = 1.
//
// Notation: A(j, i) is block i of class j, and A_j(x) is the block of class j
// containing point x. The successor of class j is (j + 1) mod r.
//
//   General (point rows, block columns):
//     P[x][A(j,i)] = *                               if x in A(j,i)
//                  = {x} u (A(j,i) n A_{succ j}(x))  otherwise
//     phi({a,b}) = the unique block containing a and b.
//     Parameters (b, v, k, C(k,2) b).
//
//   I:  the general construction on a two-class grid design;
//       parameters (2n, n^2, n, n^2 (n-1)).
//
//   II (block rows, point columns):
//     P[A(j,i)][x] = *                         if x in A(j,i)
//                  = (A(j,i) n A_{succ j}(x), alpha)  otherwise
//     where alpha counts earlier occurrences of the same point in the row,
//     scanning columns left to right. phi((y, alpha)) = column y.
//     Parameters (n^2, 2n, 2, n^2 (n-1)).

#ifndef D2DCACHE_CONSTRUCTIONS_H_
#define D2DCACHE_CONSTRUCTIONS_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "d2dcache/design.h"
#include "d2dcache/pda.h"

namespace d2dcache {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ConstructionKind { kGeneral, kI, kII };

std::string_view ConstructionName(ConstructionKind kind);

struct ConstructedDpda {
  Dpda dpda;
  ConstructionKind kind;
  Resolution source;
  // Pre-canonical symbols rendered like the figures: "14" (or "1,4" when a
  // point label is longer than one character) for I/general, "1_2" for II.
  LabeledArray symbolic;
  // symbol_labels[s - 1] is the symbolic form of canonical symbol s.
  std::vector<std::string> symbol_labels;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

// Throws ConstructionError unless the resolution has r >= 2 and mu_2 = 1.
ConstructedDpda ConstructGeneral(const Resolution& crd);

// Throws ConstructionError unless the resolution has 2 classes of n blocks of
// size n over n^2 points with mu_2 = 1.
ConstructedDpda ConstructI(const Resolution& mcrd);
ConstructedDpda ConstructII(const Resolution& mcrd);

}  // namespace d2dcache

#endif  // D2DCACHE_CONSTRUCTIONS_H_
