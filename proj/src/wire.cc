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

#include "wire.h"

#include <cstring>

namespace zkrange::wire {

namespace {

const char* Magic(Kind kind) { return kind == Kind::kProof ? "ZKRP" : "ZKPM"; }

}  // namespace

void WriteHeader(algebra::ByteWriter& w, Kind kind, Scheme scheme) {
  const char* m = Magic(kind);
  w.PutBytes({reinterpret_cast<const uint8_t*>(m), 4});
  w.PutU8(kVersion);
  w.PutU8(static_cast<uint8_t>(scheme));
}

void ReadHeader(algebra::ByteReader& r, Kind kind, Scheme scheme) {
  auto m = r.GetBytes(4);
  ZKR_ENFORCE(std::memcmp(m.data(), Magic(kind), 4) == 0, ErrorCode::kMalformed, "bad magic");
  ZKR_ENFORCE(r.GetU8() == kVersion, ErrorCode::kMalformed, "unsupported version");
  ZKR_ENFORCE(r.GetU8() == static_cast<uint8_t>(scheme), ErrorCode::kMalformed,
              "scheme tag mismatch");
}

Scheme PeekScheme(std::span<const uint8_t> bytes, Kind kind) {
  ZKR_ENFORCE(bytes.size() >= 6 && std::memcmp(bytes.data(), Magic(kind), 4) == 0,
              ErrorCode::kMalformed, "bad magic");
  ZKR_ENFORCE(bytes[4] == kVersion, ErrorCode::kMalformed, "unsupported version");
  uint8_t tag = bytes[5];
  ZKR_ENFORCE(tag >= 1 && tag <= 3, ErrorCode::kMalformed, "unknown scheme tag");
  return static_cast<Scheme>(tag);
}

}  // namespace zkrange::wire
