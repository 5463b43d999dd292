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

// Command-line front end.
//
//   d2dcache construct --kind I|II|general (--grid n | --code G.json |
//                      --design D.json) [--out file.json]
//   d2dcache validate  --array A.json [--phi phi.json]
//   d2dcache simulate  --array A.json --demand 4,2,1,5,6,3|random
//                      [--N n] [--B bytes] [--seed s]
//   d2dcache bounds    --array A.json | --K k --F f --Z z |
//                      --row r --param key=value ...
//   d2dcache compare   --n 2 | --n 2..8 [--schemes jcm,constrI]
//   d2dcache export    --array A.json | <construct sources>
//
// Every command takes --format json|csv|text and --out. Exit status is 0 on
// success, 1 when the input fails a check, 2 on usage or parse errors.

#ifndef D2DCACHE_CLI_H_
#define D2DCACHE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace d2dcache {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

// Convenience overload; `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace d2dcache

#endif  // D2DCACHE_CLI_H_
