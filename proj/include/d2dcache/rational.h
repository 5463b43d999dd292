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

#ifndef D2DCACHE_RATIONAL_H_
#define D2DCACHE_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace d2dcache {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational MakeRational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

// "p/q", or "p" when the value is an integer.
std::string FormatRational(const Rational& r);

// Accepts "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational ParseRational(std::string_view text);

double ToDouble(const Rational& r);

BigInt Binomial(std::int64_t n, std::int64_t k);
BigInt Power(const BigInt& base, std::int64_t exponent);

}  // namespace d2dcache

#endif  // D2DCACHE_RATIONAL_H_
