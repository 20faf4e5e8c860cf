// Copyright 2026 The kpair Authors
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

#ifndef KPAIR_RATIONAL_H_
#define KPAIR_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kpair {

// Exact arbitrary-precision rational. All flow and coefficient arithmetic
// uses this type; there is no floating point in verification.
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" for integers, otherwise "p/q" in lowest terms
// with q > 0.
std::string ToString(const Rational& value);

// Accepts "p", "-p" and "p/q" with q != 0. Throws kpair::Error(kParse).
Rational ParseRational(std::string_view text);

Rational Abs(const Rational& value);

}  // namespace kpair

#endif  // KPAIR_RATIONAL_H_
