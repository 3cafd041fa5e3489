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

// BN254 (alt_bn128) pairing group: G1 over Fp, G2 on the sextic D-twist over
// Fp2, and Gt inside Fp12 = Fp2[w]/(w^6 - xi) with xi = 9 + i.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "algebra/mont_field.h"
#include "algebra/weierstrass.h"

namespace zkrange::algebra::bn254 {

struct FpTag {
  static constexpr Limbs kModulus = {0x3c208c16d87cfd47ULL, 0x97816a916871ca8dULL,
                                     0xb85045b68181585dULL, 0x30644e72e131a029ULL};
  static constexpr const char* kName = "bn254.Fp";
};

struct FrTag {
  static constexpr Limbs kModulus = {0x43e1f593f0000001ULL, 0x2833e84879b97091ULL,
                                     0xb85045b68181585dULL, 0x30644e72e131a029ULL};
  static constexpr const char* kName = "bn254.Fr";
};

using Fp = MontField<FpTag>;
using Fr = MontField<FrTag>;

// Fp[i]/(i^2 + 1).
struct Fp2 {
  Fp c0, c1;

  static Fp2 Zero() { return {}; }
  static Fp2 One() { return {Fp::One(), Fp::Zero()}; }

  bool IsZero() const { return c0.IsZero() && c1.IsZero(); }
  friend bool operator==(const Fp2& a, const Fp2& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
  friend Fp2 operator+(const Fp2& a, const Fp2& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
  friend Fp2 operator-(const Fp2& a, const Fp2& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
  Fp2 operator-() const { return {-c0, -c1}; }
  friend Fp2 operator*(const Fp2& a, const Fp2& b) {
    Fp t0 = a.c0 * b.c0;
    Fp t1 = a.c1 * b.c1;
    return {t0 - t1, (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
  }
  Fp2 Scale(const Fp& s) const { return {c0 * s, c1 * s}; }
  Fp2 Square() const { return {(c0 + c1) * (c0 - c1), (c0 * c1).Double()}; }
  Fp2 Double() const { return {c0.Double(), c1.Double()}; }
  Fp2 Conjugate() const { return {c0, -c1}; }
  // Multiplication by xi = 9 + i.
  Fp2 MulByXi() const {
    Fp nine_c0 = c0.Double().Double().Double() + c0;
    Fp nine_c1 = c1.Double().Double().Double() + c1;
    return {nine_c0 - c1, c0 + nine_c1};
  }
  Fp2 Inverse() const {
    Fp inv = (c0.Square() + c1.Square()).Inverse();
    return {c0 * inv, -(c1 * inv)};
  }
  Fp2 Pow(const mpz_class& e) const;
};

// Fp12 = Fp2[w]/(w^6 - xi); c[k] is the coefficient of w^k.
class Fp12 {
 public:
  std::array<Fp2, 6> c{};

  static Fp12 One() {
    Fp12 r;
    r.c[0] = Fp2::One();
    return r;
  }
  bool IsOne() const;
  friend bool operator==(const Fp12& a, const Fp12& b) { return a.c == b.c; }
  friend Fp12 operator*(const Fp12& a, const Fp12& b);
  Fp12 Square() const;
  // Granger-Scott squaring; valid only on the cyclotomic subgroup.
  Fp12 CyclotomicSquare() const;
  // Frobenius of order two over Fp6 (w -> -w); the inverse on Gt.
  Fp12 Conjugate() const;
  Fp12 Frobenius() const;
  Fp12 FrobeniusSquare() const { return Frobenius().Frobenius(); }
  Fp12 Inverse() const;
  Fp12 Pow(const mpz_class& e) const;
  Fp12 PowLimbs(const Limbs& e) const;
};

struct G1Curve {
  using Field = Fp;
  static Fp B() { return Fp::FromU64(3); }
};

struct G2Curve {
  using Field = Fp2;
  static Fp2 B();  // 3 / xi
};

using G1 = JacobianPoint<G1Curve>;
using G2 = JacobianPoint<G2Curve>;

const G1& G1Generator();
const G2& G2Generator();

inline G1 operator*(const G1& p, const Fr& s) { return p.Mul(s.ToCanonical()); }
inline G2 operator*(const G2& p, const Fr& s) { return p.Mul(s.ToCanonical()); }

// Order-r subgroup membership on the twist (the twist has a cofactor).
bool IsInG2(const G2& q);

// G2 points travel uncompressed: x.c1 | x.c0 | y.c1 | y.c0, 32 octets each.
inline constexpr size_t kG2Bytes = 128;
std::array<uint8_t, kG2Bytes> EncodeG2(const G2& q);
G2 DecodeG2(std::span<const uint8_t> bytes);

// Element of the order-r target group.
class Gt {
 public:
  // Compressed size: the four Fp2 coordinates kept by cyclotomic compression.
  static constexpr size_t kEncodedBytes = 256;

  Gt() : f_(Fp12::One()) {}
  explicit Gt(const Fp12& f) : f_(f) {}

  static Gt Identity() { return Gt(); }
  bool IsIdentity() const { return f_.IsOne(); }

  friend Gt operator*(const Gt& a, const Gt& b) { return Gt(a.f_ * b.f_); }
  friend bool operator==(const Gt& a, const Gt& b) { return a.f_ == b.f_; }
  Gt Inverse() const { return Gt(f_.Conjugate()); }
  Gt Pow(const Fr& e) const { return Gt(f_.PowLimbs(e.ToCanonical())); }

  const Fp12& value() const { return f_; }

  // Karabina-style compression of a cyclotomic element: keeps
  // (g2, g3, g4, g5) = coefficients of (w, w^4, w^2, w^5).
  std::array<uint8_t, kEncodedBytes> Encode() const;
  // Decompresses, then requires order r and a canonical re-encoding.
  static Gt Decode(std::span<const uint8_t> bytes);

 private:
  Fp12 f_;
};

// Line coefficients of the Miller loop for a fixed G2 argument. Each slot
// holds (lambda, lambda * x_T - y_T), or nothing for a skipped line.
class G2Prepared {
 public:
  struct Line {
    bool present = false;
    Fp2 lambda, mu;
  };

  explicit G2Prepared(const G2& q);

  bool IsIdentity() const { return identity_; }
  const std::vector<Line>& lines() const { return lines_; }

 private:
  bool identity_ = false;
  std::vector<Line> lines_;
};

// Optimal ate pairing e: G1 x G2 -> Gt. Identity inputs map to 1.
Gt Pairing(const G1& p, const G2& q);

// Product of pairings sharing one final exponentiation.
Gt MultiPairing(std::span<const G1> ps, std::span<const G2> qs);
Gt MultiPairing(std::span<const G1> ps, std::span<const G2Prepared* const> qs);

// Exposed for cross-checking the two final-exponentiation routes.
Fp12 MillerLoop(const G1& p, const G2& q);
Fp12 FinalExponentiation(const Fp12& f);

const mpz_class& FieldModulus();
const mpz_class& GroupOrder();

}  // namespace zkrange::algebra::bn254
