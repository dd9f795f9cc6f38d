// Copyright 2026 The barne-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef BARNE_SRC_GAME_ENUMERATE_HPP_
#define BARNE_SRC_GAME_ENUMERATE_HPP_

#include <cmath>
#include <vector>

namespace barne::internal {

// Advances digits (each in [0, base)) like an odometer. Returns false after
// the last tuple.
inline bool next_tuple(std::vector<int>& digits, int base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

// Advances a nondecreasing sequence over [0, base). Returns false after the
// last multiset.
inline bool next_multiset(std::vector<int>& digits, int base) {
  int k = static_cast<int>(digits.size());
  int i = k - 1;
  while (i >= 0 && digits[i] == base - 1) --i;
  if (i < 0) return false;
  int v = digits[i] + 1;
  for (int j = i; j < k; ++j) digits[j] = v;
  return true;
}

// Advances a k-subset of [0, n) in lexicographic order.
inline bool next_combination(std::vector<int>& subset, int n) {
  int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[i] == n - k + i) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(n - k + 1.0)));
}

inline double multiset_count(int base, int k) { return binomial(base + k - 1, k); }

}  // namespace barne::internal

#endif  // BARNE_SRC_GAME_ENUMERATE_HPP_
