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

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>

namespace zkrange::algebra {

// 256-bit unsigned integer, little-endian 64-bit limbs.
using Limbs = std::array<uint64_t, 4>;

constexpr bool IsZeroLimbs(const Limbs& a) {
  return (a[0] | a[1] | a[2] | a[3]) == 0;
}

constexpr bool GeqLimbs(const Limbs& a, const Limbs& b) {
  for (int i = 3; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return true;
}

constexpr Limbs AddLimbs(const Limbs& a, const Limbs& b, uint64_t& carry) {
  Limbs r{};
  uint64_t c = 0;
  for (int i = 0; i < 4; ++i) {
    uint64_t s = a[i] + c;
    uint64_t c1 = s < c ? 1 : 0;
    uint64_t s2 = s + b[i];
    uint64_t c2 = s2 < s ? 1 : 0;
    r[i] = s2;
    c = c1 + c2;
  }
  carry = c;
  return r;
}

constexpr Limbs SubLimbs(const Limbs& a, const Limbs& b, uint64_t& borrow) {
  Limbs r{};
  uint64_t br = 0;
  for (int i = 0; i < 4; ++i) {
    uint64_t d = a[i] - b[i];
    uint64_t b1 = a[i] < b[i] ? 1 : 0;
    uint64_t d2 = d - br;
    uint64_t b2 = d < br ? 1 : 0;
    r[i] = d2;
    br = b1 + b2;
  }
  borrow = br;
  return r;
}

constexpr Limbs AddSmall(const Limbs& a, uint64_t v) {
  uint64_t carry = 0;
  return AddLimbs(a, Limbs{v, 0, 0, 0}, carry);
}

constexpr Limbs SubSmall(const Limbs& a, uint64_t v) {
  uint64_t borrow = 0;
  return SubLimbs(a, Limbs{v, 0, 0, 0}, borrow);
}

constexpr Limbs ShiftRight(const Limbs& a, unsigned k) {
  Limbs r{};
  for (int i = 0; i < 4; ++i) {
    r[i] = a[i] >> k;
    if (i + 1 < 4 && k > 0) r[i] |= a[i + 1] << (64 - k);
  }
  return r;
}

// 2^k mod m for an odd modulus m < 2^256.
constexpr Limbs PowerOfTwoMod(int k, const Limbs& m) {
  Limbs x{1, 0, 0, 0};
  for (int i = 0; i < k; ++i) {
    uint64_t carry = 0;
    x = AddLimbs(x, x, carry);
    if (carry || GeqLimbs(x, m)) {
      uint64_t borrow = 0;
      x = SubLimbs(x, m, borrow);
    }
  }
  return x;
}

// -m^{-1} mod 2^64 for odd m, by Newton iteration.
constexpr uint64_t NegInverse64(uint64_t m) {
  uint64_t inv = 1;
  for (int i = 0; i < 7; ++i) inv *= 2 - m * inv;
  return ~inv + 1;
}

constexpr int BitLength(const Limbs& a) {
  for (int i = 3; i >= 0; --i) {
    if (a[i] != 0) {
      int bits = 64;
      while (((a[i] >> (bits - 1)) & 1) == 0) --bits;
      return i * 64 + bits;
    }
  }
  return 0;
}

constexpr bool TestBit(const Limbs& a, int i) { return (a[i / 64] >> (i % 64)) & 1; }

inline Limbs LimbsFromBytesBE(std::span<const uint8_t> bytes) {
  Limbs v{};
  for (size_t i = 0; i < 32; ++i) {
    v[(31 - i) / 8] |= static_cast<uint64_t>(bytes[i]) << (8 * ((31 - i) % 8));
  }
  return v;
}

inline std::array<uint8_t, 32> LimbsToBytesBE(const Limbs& v) {
  std::array<uint8_t, 32> out{};
  for (size_t i = 0; i < 32; ++i) {
    out[i] = static_cast<uint8_t>(v[(31 - i) / 8] >> (8 * ((31 - i) % 8)));
  }
  return out;
}

inline mpz_class MpzFromLimbs(const Limbs& v) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 4, -1, sizeof(uint64_t), 0, 0, v.data());
  return r;
}

// `v` must be in [0, 2^256).
inline Limbs LimbsFromMpz(const mpz_class& v) {
  Limbs out{};
  size_t count = 0;
  mpz_export(out.data(), &count, -1, sizeof(uint64_t), 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace zkrange::algebra
