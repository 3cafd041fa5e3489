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

// Common framing of serialized proofs and parameter sets.

#pragma once

#include <cstdint>

#include "algebra/codec.h"
#include "errors.h"

namespace zkrange::wire {

inline constexpr uint8_t kVersion = 1;
inline constexpr size_t kHeaderBytes = 6;

enum class Scheme : uint8_t {
  kBoudot = 0x01,
  kSigRange = 0x02,
  kBulletproofs = 0x03,
};

enum class Kind { kProof, kParams };

// "ZKRP" for proofs, "ZKPM" for parameter sets, then version and scheme tag.
void WriteHeader(algebra::ByteWriter& w, Kind kind, Scheme scheme);
void ReadHeader(algebra::ByteReader& r, Kind kind, Scheme scheme);
// Scheme tag of a framed blob without consuming it.
Scheme PeekScheme(std::span<const uint8_t> bytes, Kind kind);

}  // namespace zkrange::wire
