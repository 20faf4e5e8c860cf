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

#ifndef KPAIR_COEFFICIENTS_H_
#define KPAIR_COEFFICIENTS_H_

#include <string>
#include <vector>

#include "kpair/rational.h"

namespace kpair {

// c[l][i][j]: the weight of the indicator flow of path (source i, sink j)
// in commodity l. All indices are 0-based.
class CoefficientTuple {
 public:
  explicit CoefficientTuple(int k);

  // c[l][l][l] = 1, everything else 0.
  static CoefficientTuple IdentityDiagonal(int k);

  int k() const { return k_; }
  Rational& at(int l, int i, int j) { return c_[(l * k_ + i) * k_ + j]; }
  const Rational& at(int l, int i, int j) const {
    return c_[(l * k_ + i) * k_ + j];
  }

  friend bool operator==(const CoefficientTuple&,
                         const CoefficientTuple&) = default;

 private:
  int k_;
  std::vector<Rational> c_;
};

struct RateCheck {
  bool ok = false;
  // One line per violated equation, 1-based indices.
  std::vector<std::string> violations;
};

// Checks, for every commodity l: row sums vanish for i != l, column sums
// vanish for j != l, and the total is 1.
RateCheck CheckRateConditions(const CoefficientTuple& tuple);

// Source i plays role sources[i] and sink j plays role sinks[j]
// (0-based permutations).
struct Relabeling {
  std::vector<int> sources;
  std::vector<int> sinks;

  static Relabeling Identity(int k);
  bool IsValid(int k) const;
  Relabeling Inverse() const;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;
};

}  // namespace kpair

#endif  // KPAIR_COEFFICIENTS_H_
