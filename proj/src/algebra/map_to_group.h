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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "algebra/sha256.h"
#include "algebra/weierstrass.h"
#include "errors.h"

namespace zkrange::algebra {

inline constexpr uint32_t kMapToGroupTries = 256;

// Try-and-increment hash onto y^2 = x^3 + b over a prime field with p = 3 mod
// 4: x = SHA-256(message || BE32(i)) mod p for the first counter i with a
// square right-hand side. The root with even canonical y is returned.
template <class Curve>
JacobianPoint<Curve> MapToGroup(std::span<const uint8_t> message) {
  using Field = typename Curve::Field;
  std::vector<uint8_t> buf(message.begin(), message.end());
  buf.resize(message.size() + 4);
  for (uint32_t i = 0; i < kMapToGroupTries; ++i) {
    buf[message.size()] = static_cast<uint8_t>(i >> 24);
    buf[message.size() + 1] = static_cast<uint8_t>(i >> 16);
    buf[message.size() + 2] = static_cast<uint8_t>(i >> 8);
    buf[message.size() + 3] = static_cast<uint8_t>(i);
    Digest d = Sha256(buf);
    Field x = Field::FromBytesWide(d);
    Field rhs = x.Square() * x + Curve::B();
    Field y;
    if (!rhs.Sqrt(y)) continue;
    if (y.IsOdd()) y = -y;
    return JacobianPoint<Curve>::FromAffine(x, y);
  }
  throw Error(ErrorCode::kInternal, "cannot map to group");
}

template <class Curve>
JacobianPoint<Curve> MapToGroup(std::string_view message) {
  return MapToGroup<Curve>(std::span<const uint8_t>(
      reinterpret_cast<const uint8_t*>(message.data()), message.size()));
}

}  // namespace zkrange::algebra
