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

#include "kpair/coefficients.h"

#include <algorithm>
#include <numeric>

#include "kpair/errors.h"

namespace kpair {

CoefficientTuple::CoefficientTuple(int k) : k_(k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  c_.assign(static_cast<size_t>(k) * k * k, Rational(0));
}

CoefficientTuple CoefficientTuple::IdentityDiagonal(int k) {
  CoefficientTuple tuple(k);
  for (int l = 0; l < k; ++l) tuple.at(l, l, l) = 1;
  return tuple;
}

RateCheck CheckRateConditions(const CoefficientTuple& tuple) {
  RateCheck check;
  const int k = tuple.k();
  auto label = [](int l) { return std::to_string(l + 1); };
  for (int l = 0; l < k; ++l) {
    Rational total = 0;
    for (int i = 0; i < k; ++i) {
      Rational row = 0;
      Rational column = 0;
      for (int j = 0; j < k; ++j) {
        row += tuple.at(l, i, j);
        column += tuple.at(l, j, i);
        total += tuple.at(l, i, j);
      }
      if (i != l && row != 0) {
        check.violations.push_back("commodity " + label(l) + ": row " +
                                   label(i) + " sums to " + ToString(row));
      }
      if (i != l && column != 0) {
        check.violations.push_back("commodity " + label(l) + ": column " +
                                   label(i) + " sums to " + ToString(column));
      }
    }
    if (total != 1) {
      check.violations.push_back("commodity " + label(l) + ": total is " +
                                 ToString(total));
    }
  }
  check.ok = check.violations.empty();
  return check;
}

Relabeling Relabeling::Identity(int k) {
  Relabeling r;
  r.sources.resize(k);
  std::iota(r.sources.begin(), r.sources.end(), 0);
  r.sinks = r.sources;
  return r;
}

bool Relabeling::IsValid(int k) const {
  auto is_permutation = [k](std::vector<int> p) {
    if (static_cast<int>(p.size()) != k) return false;
    std::sort(p.begin(), p.end());
    for (int x = 0; x < k; ++x) {
      if (p[x] != x) return false;
    }
    return true;
  };
  return is_permutation(sources) && is_permutation(sinks);
}

Relabeling Relabeling::Inverse() const {
  Relabeling r;
  r.sources.resize(sources.size());
  r.sinks.resize(sinks.size());
  for (size_t x = 0; x < sources.size(); ++x) r.sources[sources[x]] = x;
  for (size_t x = 0; x < sinks.size(); ++x) r.sinks[sinks[x]] = x;
  return r;
}

}  // namespace kpair
