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

#include "algebra/rng.h"

#include <openssl/rand.h>

#include <vector>

#include "algebra/sha256.h"
#include "errors.h"

namespace zkrange::algebra {

uint64_t Rng::NextU64() {
  std::array<uint8_t, 8> b{};
  Fill(b);
  uint64_t v = 0;
  for (uint8_t x : b) v = (v << 8) | x;
  return v;
}

mpz_class Rng::RandomBits(size_t bits) {
  if (bits == 0) return 0;
  std::vector<uint8_t> buf((bits + 7) / 8);
  Fill(buf);
  size_t extra = buf.size() * 8 - bits;
  buf[0] &= static_cast<uint8_t>(0xFF >> extra);
  mpz_class v;
  mpz_import(v.get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
  return v;
}

mpz_class Rng::RandomBelow(const mpz_class& bound) {
  ZKR_ENFORCE(bound > 0, ErrorCode::kInvalidArgument,
              "RandomBelow: bound must be positive");
  size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  for (;;) {
    mpz_class v = RandomBits(bits);
    if (v < bound) return v;
  }
}

mpz_class Rng::RandomInRange(const mpz_class& lo, const mpz_class& hi) {
  ZKR_ENFORCE(lo <= hi, ErrorCode::kInvalidArgument,
              "RandomInRange: empty interval");
  mpz_class width = hi - lo + 1;
  return lo + RandomBelow(width);
}

void OsRng::Fill(std::span<uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw Error(ErrorCode::kInternal, "RAND_bytes failed");
  }
}

DeterministicRng::DeterministicRng(uint64_t seed) {
  std::array<uint8_t, 24> material{'z', 'k', 'r', 'a', 'n', 'g', 'e', '/',
                                   'r', 'n', 'g', '/', 'v', '1', 0, 0};
  for (int i = 0; i < 8; ++i) {
    material[16 + i] = static_cast<uint8_t>(seed >> (56 - 8 * i));
  }
  key_ = Sha256(material);
}

void DeterministicRng::Fill(std::span<uint8_t> out) {
  for (uint8_t& b : out) {
    if (block_pos_ == block_.size()) {
      std::array<uint8_t, 40> input{};
      std::copy(key_.begin(), key_.end(), input.begin());
      for (int i = 0; i < 8; ++i) {
        input[32 + i] = static_cast<uint8_t>(counter_ >> (56 - 8 * i));
      }
      ++counter_;
      block_ = Sha256(input);
      block_pos_ = 0;
    }
    b = block_[block_pos_++];
  }
}

}  // namespace zkrange::algebra
