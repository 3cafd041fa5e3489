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
#include <string>

#include "algebra/limbs.h"
#include "algebra/rng.h"
#include "errors.h"

namespace zkrange::algebra {

// Prime field element with a modulus below 2^256, stored in Montgomery form
// over four 64-bit limbs. `Tag` supplies `kModulus` (little-endian limbs) and
// `kName`. Arithmetic is variable time.
template <class Tag>
class MontField {
 public:
  static constexpr Limbs kModulus = Tag::kModulus;
  static constexpr size_t kBytes = 32;

  constexpr MontField() = default;

  static MontField Zero() { return MontField(); }
  static MontField One() { return FromMont(kR); }

  static MontField FromU64(uint64_t v) { return FromCanonical({v, 0, 0, 0}); }

  static MontField FromI64(int64_t v) {
    if (v >= 0) return FromU64(static_cast<uint64_t>(v));
    return -FromU64(static_cast<uint64_t>(-(v + 1)) + 1);
  }

  // `v` must already be reduced.
  static MontField FromCanonical(const Limbs& v) {
    MontField out;
    out.v_ = MontMul(v, kR2);
    return out;
  }

  // Any integer, reduced modulo the field prime.
  static MontField FromMpz(const mpz_class& v) {
    mpz_class r = v % Modulus();
    if (r < 0) r += Modulus();
    return FromCanonical(LimbsFromMpz(r));
  }

  // Big-endian 32 octets; rejects values >= modulus.
  static MontField FromBytes(std::span<const uint8_t> bytes) {
    if (bytes.size() != kBytes) {
      throw Error(ErrorCode::kMalformed, std::string(Tag::kName) +
                                             ": field element must be 32 octets");
    }
    Limbs v = LimbsFromBytesBE(bytes);
    if (GeqLimbs(v, kModulus)) {
      throw Error(ErrorCode::kMalformed,
                  std::string(Tag::kName) + ": non-canonical field element");
    }
    return FromCanonical(v);
  }

  // Big-endian octets of any length, reduced modulo the prime.
  static MontField FromBytesWide(std::span<const uint8_t> bytes) {
    mpz_class v;
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    return FromMpz(v);
  }

  // Uniform modulo p up to a 2^-256 statistical bias.
  static MontField Random(Rng& rng) {
    std::array<uint8_t, 64> buf{};
    rng.Fill(buf);
    return FromBytesWide(buf);
  }

  static MontField RandomNonZero(Rng& rng) {
    for (;;) {
      MontField v = Random(rng);
      if (!v.IsZero()) return v;
    }
  }

  static const mpz_class& Modulus() {
    static const mpz_class m = MpzFromLimbs(kModulus);
    return m;
  }

  Limbs ToCanonical() const { return MontMul(v_, Limbs{1, 0, 0, 0}); }
  mpz_class ToMpz() const { return MpzFromLimbs(ToCanonical()); }

  std::array<uint8_t, kBytes> ToBytes() const {
    return LimbsToBytesBE(ToCanonical());
  }

  bool IsZero() const { return IsZeroLimbs(v_); }
  bool IsOne() const { return v_ == kR; }

  friend bool operator==(const MontField& a, const MontField& b) {
    return a.v_ == b.v_;
  }

  friend MontField operator+(const MontField& a, const MontField& b) {
    return FromMont(AddMod(a.v_, b.v_));
  }

  friend MontField operator-(const MontField& a, const MontField& b) {
    return FromMont(SubMod(a.v_, b.v_));
  }

  MontField operator-() const { return Zero() - *this; }

  friend MontField operator*(const MontField& a, const MontField& b) {
    return FromMont(MontMul(a.v_, b.v_));
  }

  MontField& operator+=(const MontField& o) { return *this = *this + o; }
  MontField& operator-=(const MontField& o) { return *this = *this - o; }
  MontField& operator*=(const MontField& o) { return *this = *this * o; }

  MontField Square() const { return *this * *this; }
  MontField Double() const { return *this + *this; }

  // Exponent given as canonical little-endian limbs.
  MontField Pow(const Limbs& e) const {
    MontField result = One();
    for (int i = 255; i >= 0; --i) {
      result = result.Square();
      if ((e[i / 64] >> (i % 64)) & 1) result = result * *this;
    }
    return result;
  }

  MontField Pow(const mpz_class& e) const {
    MontField result = One();
    mpz_class ee = e;
    MontField base = *this;
    if (ee < 0) {
      base = base.Inverse();
      ee = -ee;
    }
    for (long i = static_cast<long>(mpz_sizeinbase(ee.get_mpz_t(), 2)) - 1;
         i >= 0; --i) {
      result = result.Square();
      if (mpz_tstbit(ee.get_mpz_t(), i)) result = result * base;
    }
    return result;
  }

  // Throws on zero.
  MontField Inverse() const {
    if (IsZero()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(Tag::kName) + ": inverse of zero");
    }
    mpz_class v = ToMpz();
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), Modulus().get_mpz_t());
    return FromCanonical(LimbsFromMpz(inv));
  }

  // Euler criterion; zero counts as a square.
  bool IsSquare() const {
    if (IsZero()) return true;
    return Pow(kHalfOrder).IsOne();
  }

  // Only valid for p = 3 (mod 4). Returns false when no root exists.
  bool Sqrt(MontField& out) const {
    MontField root = Pow(kSqrtExponent);
    if (root.Square() != *this) return false;
    out = root;
    return true;
  }

  bool IsOdd() const { return ToCanonical()[0] & 1; }

  std::string ToHex() const { return ToMpz().get_str(16); }

 private:
  static constexpr uint64_t kInv = NegInverse64(kModulus[0]);
  static constexpr Limbs kR = PowerOfTwoMod(256, kModulus);
  static constexpr Limbs kR2 = PowerOfTwoMod(512, kModulus);
  static constexpr Limbs kHalfOrder = ShiftRight(SubSmall(kModulus, 1), 1);
  static constexpr Limbs kSqrtExponent = ShiftRight(AddSmall(kModulus, 1), 2);

  static MontField FromMont(const Limbs& v) {
    MontField out;
    out.v_ = v;
    return out;
  }

  // CIOS Montgomery multiplication.
  static Limbs MontMul(const Limbs& a, const Limbs& b) {
    using u128 = unsigned __int128;
    uint64_t t[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      uint64_t carry = 0;
      for (int j = 0; j < 4; ++j) {
        u128 cs = static_cast<u128>(a[j]) * b[i] + t[j] + carry;
        t[j] = static_cast<uint64_t>(cs);
        carry = static_cast<uint64_t>(cs >> 64);
      }
      u128 cs = static_cast<u128>(t[4]) + carry;
      t[4] = static_cast<uint64_t>(cs);
      t[5] = static_cast<uint64_t>(cs >> 64);

      uint64_t m = t[0] * kInv;
      cs = static_cast<u128>(m) * kModulus[0] + t[0];
      carry = static_cast<uint64_t>(cs >> 64);
      for (int j = 1; j < 4; ++j) {
        cs = static_cast<u128>(m) * kModulus[j] + t[j] + carry;
        t[j - 1] = static_cast<uint64_t>(cs);
        carry = static_cast<uint64_t>(cs >> 64);
      }
      cs = static_cast<u128>(t[4]) + carry;
      t[3] = static_cast<uint64_t>(cs);
      t[4] = t[5] + static_cast<uint64_t>(cs >> 64);
    }
    return Reduce(Limbs{t[0], t[1], t[2], t[3]}, t[4]);
  }

  // Branch-free: subtract the modulus once when (carry, v) >= p.
  static Limbs Reduce(const Limbs& v, uint64_t carry) {
    using u128 = unsigned __int128;
    Limbs d;
    uint64_t br = 0;
    for (int i = 0; i < 4; ++i) {
      u128 x = static_cast<u128>(v[i]) - kModulus[i] - br;
      d[i] = static_cast<uint64_t>(x);
      br = static_cast<uint64_t>(x >> 64) & 1;
    }
    uint64_t keep = 0 - ((br & (carry ^ 1)) & 1);
    Limbs r;
    for (int i = 0; i < 4; ++i) r[i] = (v[i] & keep) | (d[i] & ~keep);
    return r;
  }

  static Limbs AddMod(const Limbs& a, const Limbs& b) {
    using u128 = unsigned __int128;
    Limbs s;
    uint64_t c = 0;
    for (int i = 0; i < 4; ++i) {
      u128 x = static_cast<u128>(a[i]) + b[i] + c;
      s[i] = static_cast<uint64_t>(x);
      c = static_cast<uint64_t>(x >> 64);
    }
    return Reduce(s, c);
  }

  static Limbs SubMod(const Limbs& a, const Limbs& b) {
    using u128 = unsigned __int128;
    Limbs d;
    uint64_t br = 0;
    for (int i = 0; i < 4; ++i) {
      u128 x = static_cast<u128>(a[i]) - b[i] - br;
      d[i] = static_cast<uint64_t>(x);
      br = static_cast<uint64_t>(x >> 64) & 1;
    }
    uint64_t mask = 0 - br;
    uint64_t c = 0;
    for (int i = 0; i < 4; ++i) {
      u128 x = static_cast<u128>(d[i]) + (kModulus[i] & mask) + c;
      d[i] = static_cast<uint64_t>(x);
      c = static_cast<uint64_t>(x >> 64);
    }
    return d;
  }

  Limbs v_{0, 0, 0, 0};
};

}  // namespace zkrange::algebra
