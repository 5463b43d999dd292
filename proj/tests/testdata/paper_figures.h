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

// Hand-entered golden arrays. Symbols keep their printed labels; compare
// after canonical relabeling.

#ifndef D2DCACHE_TESTS_TESTDATA_PAPER_FIGURES_H_
#define D2DCACHE_TESTS_TESTDATA_PAPER_FIGURES_H_

namespace d2dcache::golden {

// Grid n = 2, Construction I. Columns 12 34 13 24, rows 1..4.
inline constexpr char kGridI2[] = R"(
*  13 *  12
*  24 12 *
13 *  *  34
24 *  34 *
)";

// Grid n = 3, Construction I. Columns 123 456 789 147 258 369.
inline constexpr char kGridI3[] = R"(
*  14 17 *  12 13
*  25 28 12 *  23
*  36 39 13 23 *
14 *  47 *  45 46
25 *  58 45 *  56
36 *  69 46 56 *
17 47 *  *  78 79
28 58 *  78 *  89
39 69 *  79 89 *
)";

// Grid n = 3, Construction II. Rows 123 456 789 147 258 369, columns 1..9.
inline constexpr char kGridII3[] = R"(
*   *   *   1_1 2_1 3_1 1_2 2_2 3_2
4_1 5_1 6_1 *   *   *   4_2 5_2 6_2
7_1 8_1 9_1 7_2 8_2 9_2 *   *   *
*   1_1 1_2 *   4_1 4_2 *   7_1 7_2
2_1 *   2_2 5_1 *   5_2 8_1 *   8_2
3_1 3_2 *   6_1 6_2 *   9_1 9_2 *
)";

// Grid n = 4, Construction II; a..g stand for points 10..16.
inline constexpr char kGridII4[] = R"(
*   *   *   *   1_1 2_1 3_1 4_1 1_2 2_2 3_2 4_2 1_3 2_3 3_3 4_3
5_1 6_1 7_1 8_1 *   *   *   *   5_2 6_2 7_2 8_2 5_3 6_3 7_3 8_3
9_1 a_1 b_1 c_1 9_2 a_2 b_2 c_2 *   *   *   *   9_3 a_3 b_3 c_3
d_1 e_1 f_1 g_1 d_2 e_2 f_2 g_2 d_3 e_3 f_3 g_3 *   *   *   *
*   1_1 1_2 1_3 *   5_1 5_2 5_3 *   9_1 9_2 9_3 *   d_1 d_2 d_3
2_1 *   2_2 2_3 6_1 *   6_2 6_3 a_1 *   a_2 a_3 e_1 *   e_2 e_3
3_1 3_2 *   3_3 7_1 7_2 *   7_3 b_1 b_2 *   b_3 f_1 f_2 *   f_3
4_1 4_2 4_3 *   8_1 8_2 8_3 *   c_1 c_2 c_3 *   g_1 g_2 g_3 *
)";

// The (12,9,3,36) array from the ternary [4,2] code exactly as printed.
// Columns 012 345 678 | 036 147 258 | 057 138 246 | 048 237 156, rows are
// points 0..8. Row 3 as printed repeats symbol 46 within the row.
inline constexpr char kCodeGeneralPrinted[] = R"(
*  03 06 *  07 05 *  08 04 *  02 01
*  14 17 13 *  18 15 *  16 01 12 *
*  25 28 26 24 *  27 23 *  02 *  12
03 *  36 *  45 46 23 *  46 56 *  13
14 *  47 46 *  24 04 48 *  *  34 45
25 *  58 05 57 *  *  15 56 45 35 *
06 36 *  *  46 26 56 16 *  68 67 *
17 47 *  07 *  57 *  37 27 78 *  67
28 58 *  38 18 *  08 *  48 *  78 68
)";

// Same array with row 3 recomputed from the construction rule; the other
// eight rows are verbatim.
inline constexpr char kCodeGeneral[] = R"(
*  03 06 *  07 05 *  08 04 *  02 01
*  14 17 13 *  18 15 *  16 01 12 *
*  25 28 26 24 *  27 23 *  02 *  12
03 *  36 *  13 38 37 *  23 34 *  35
14 *  47 46 *  24 04 48 *  *  34 45
25 *  58 05 57 *  *  15 56 45 35 *
06 36 *  *  46 26 56 16 *  68 67 *
17 47 *  07 *  57 *  37 27 78 *  67
28 58 *  38 18 *  08 *  48 *  78 68
)";

// The worked (6,4,2,6) example with phi = identity.
inline constexpr char kExampleOne[] = R"(
* 3 * 5 * 1
* 6 1 * 4 *
3 * * 6 2 *
5 * 2 * * 4
)";

}  // namespace d2dcache::golden

#endif  // D2DCACHE_TESTS_TESTDATA_PAPER_FIGURES_H_
