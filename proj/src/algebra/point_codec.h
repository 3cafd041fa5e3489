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
#include <array>
#include <span>

#include "algebra/weierstrass.h"
#include "errors.h"

namespace zkrange::algebra {

inline constexpr size_t kCompressedPointBytes = 33;
using CompressedPoint = std::array<uint8_t, kCompressedPointBytes>;

// SEC1-style compression for curves over a prime field: 0x02/0x03 (parity of
// y) followed by big-endian x. The identity encodes as 33 zero octets.
template <class Curve>
CompressedPoint EncodePoint(const JacobianPoint<Curve>& p) {
  CompressedPoint out{};
  if (p.IsIdentity()) return out;
  typename Curve::Field x, y;
  p.ToAffine(x, y);
  out[0] = y.IsOdd() ? 0x03 : 0x02;
  auto xb = x.ToBytes();
  std::copy(xb.begin(), xb.end(), out.begin() + 1);
  return out;
}

// Rejects non-canonical x, off-curve x, bad prefixes, and the identity unless
// `allow_identity` is set.
template <class Curve>
JacobianPoint<Curve> DecodePoint(std::span<const uint8_t> bytes,
                                 bool allow_identity = false) {
  using Field = typename Curve::Field;
  ZKR_ENFORCE(bytes.size() == kCompressedPointBytes, ErrorCode::kMalformed,
              "point encoding must be 33 octets");
  if (bytes[0] == 0x00) {
    bool all_zero = std::all_of(bytes.begin(), bytes.end(),
                                [](uint8_t b) { return b == 0; });
    ZKR_ENFORCE(all_zero && allow_identity, ErrorCode::kMalformed,
                "identity point not allowed here");
    return JacobianPoint<Curve>::Identity();
  }
  ZKR_ENFORCE(bytes[0] == 0x02 || bytes[0] == 0x03, ErrorCode::kMalformed,
              "bad point prefix");
  Field x = Field::FromBytes(bytes.subspan(1));
  Field rhs = x.Square() * x + Curve::B();
  Field y;
  ZKR_ENFORCE(rhs.Sqrt(y), ErrorCode::kMalformed, "point not on curve");
  if (y.IsOdd() != (bytes[0] == 0x03)) y = -y;
  return JacobianPoint<Curve>::FromAffine(x, y);
}

}  // namespace zkrange::algebra
