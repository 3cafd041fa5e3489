// Copyright 2026 The zkrange Authors.
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

#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "algebra/weierstrass.h"
#include "errors.h"

namespace zkrange::algebra {

// Reference product of bases[i]^exps[i], one scalar multiplication each.
template <class Curve>
JacobianPoint<Curve> NaiveMultiExp(std::span<const JacobianPoint<Curve>> bases,
                                   std::span<const Limbs> exps) {
  ZKR_ENFORCE(bases.size() == exps.size(), ErrorCode::kInvalidArgument,
              "multiexp length mismatch");
  JacobianPoint<Curve> acc;
  for (size_t i = 0; i < bases.size(); ++i) acc += bases[i].Mul(exps[i]);
  return acc;
}

// Pippenger bucket method.
template <class Curve>
JacobianPoint<Curve> MultiExp(std::span<const JacobianPoint<Curve>> bases,
                              std::span<const Limbs> exps) {
  using Point = JacobianPoint<Curve>;
  ZKR_ENFORCE(bases.size() == exps.size(), ErrorCode::kInvalidArgument,
              "multiexp length mismatch");
  size_t n = bases.size();
  if (n == 0) return Point::Identity();
  if (n < 4) return NaiveMultiExp<Curve>(bases, exps);

  int c = 2;
  while ((size_t{1} << (2 * c)) < n * 4 && c < 16) ++c;
  int max_bits = 0;
  for (const auto& e : exps) max_bits = std::max(max_bits, BitLength(e));
  if (max_bits == 0) return Point::Identity();
  int windows = (max_bits + c - 1) / c;

  std::vector<Point> buckets(size_t{1} << c);
  Point acc;
  for (int w = windows - 1; w >= 0; --w) {
    for (int k = 0; k < c; ++k) acc = acc.Double();
    std::fill(buckets.begin(), buckets.end(), Point::Identity());
    int shift = w * c;
    for (size_t i = 0; i < n; ++i) {
      uint64_t idx = 0;
      for (int k = 0; k < c; ++k) {
        int bit = shift + k;
        if (bit < 256 && TestBit(exps[i], bit)) idx |= uint64_t{1} << k;
      }
      if (idx) buckets[idx] += bases[i];
    }
    // sum_j j * bucket[j] by running sums
    Point running, window_sum;
    for (size_t j = buckets.size() - 1; j >= 1; --j) {
      running += buckets[j];
      window_sum += running;
    }
    acc += window_sum;
  }
  return acc;
}

template <class Curve, class Scalar>
JacobianPoint<Curve> MultiExp(std::span<const JacobianPoint<Curve>> bases,
                              std::span<const Scalar> exps) {
  std::vector<Limbs> limbs(exps.size());
  for (size_t i = 0; i < exps.size(); ++i) limbs[i] = exps[i].ToCanonical();
  return MultiExp<Curve>(bases, std::span<const Limbs>(limbs));
}

}  // namespace zkrange::algebra
