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

#include "algebra/mont_field.h"
#include "algebra/weierstrass.h"

namespace zkrange::algebra::secp256k1 {

struct FpTag {
  static constexpr Limbs kModulus = {0xfffffffefffffc2fULL, 0xffffffffffffffffULL,
                                     0xffffffffffffffffULL, 0xffffffffffffffffULL};
  static constexpr const char* kName = "secp256k1.Fp";
};

struct ScalarTag {
  static constexpr Limbs kModulus = {0xbfd25e8cd0364141ULL, 0xbaaedce6af48a03bULL,
                                     0xfffffffffffffffeULL, 0xffffffffffffffffULL};
  static constexpr const char* kName = "secp256k1.Scalar";
};

using Fp = MontField<FpTag>;
using Scalar = MontField<ScalarTag>;

struct Curve {
  using Field = Fp;
  static Fp B() { return Fp::FromU64(7); }
};

using Point = JacobianPoint<Curve>;

const Point& Generator();

inline Point operator*(const Point& p, const Scalar& s) {
  return p.Mul(s.ToCanonical());
}

}  // namespace zkrange::algebra::secp256k1
