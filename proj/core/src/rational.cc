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

#include "kpair/rational.h"

#include <cctype>

#include "kpair/errors.h"

namespace kpair {
namespace {

using boost::multiprecision::cpp_int;

cpp_int ParseInteger(std::string_view text, std::string_view whole) {
  size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) {
    throw Error(ErrorCode::kParse,
                "malformed rational '" + std::string(whole) + "'");
  }
  for (size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::kParse,
                  "malformed rational '" + std::string(whole) + "'");
    }
  }
  cpp_int value(std::string(text.substr(start)));
  return text[0] == '-' ? cpp_int(-value) : value;
}

}  // namespace

std::string ToString(const Rational& value) {
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational ParseRational(std::string_view text) {
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInteger(text, text));
  cpp_int num = ParseInteger(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw Error(ErrorCode::kParse,
                "malformed rational '" + std::string(text) + "'");
  }
  cpp_int den = ParseInteger(den_text, text);
  if (den == 0) {
    throw Error(ErrorCode::kParse,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational Abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace kpair
