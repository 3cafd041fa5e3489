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

#include "algebra/bn254.h"

#include <algorithm>

#include "errors.h"

namespace zkrange::algebra::bn254 {

namespace {

constexpr uint64_t kU = 4965661367192848881ULL;

const Fp2& Xi() {
  static const Fp2 xi{Fp::FromU64(9), Fp::One()};
  return xi;
}

Fp2 MulXi(const Fp2& a) { return a.MulByXi(); }

// gamma[k] = xi^(k (p - 1) / 6)
const std::array<Fp2, 6>& FrobeniusCoeffs() {
  static const std::array<Fp2, 6> g = [] {
    std::array<Fp2, 6> out;
    mpz_class e = (FieldModulus() - 1) / 6;
    Fp2 base = Xi().Pow(e);
    out[0] = Fp2::One();
    for (int k = 1; k < 6; ++k) out[k] = out[k - 1] * base;
    return out;
  }();
  return g;
}

// Twisted Frobenius on G2: psi^-1 o pi_p o psi.
void TwistFrobenius(const Fp2& x, const Fp2& y, Fp2& ox, Fp2& oy) {
  const auto& g = FrobeniusCoeffs();
  ox = x.Conjugate() * g[2];
  oy = y.Conjugate() * g[3];
}

Fp2 ReadFp2(std::span<const uint8_t> b) {
  return {Fp::FromBytes(b.subspan(0, 32)), Fp::FromBytes(b.subspan(32, 32))};
}

void WriteFp2(const Fp2& v, uint8_t* out) {
  auto a = v.c0.ToBytes();
  auto b = v.c1.ToBytes();
  std::copy(a.begin(), a.end(), out);
  std::copy(b.begin(), b.end(), out + 32);
}

// Sparse line value yP + a w + b w^3, folded into f.
void MulByLine(Fp12& f, const Fp& yp, const Fp2& a, const Fp2& b) {
  Fp12 r;
  const auto& c = f.c;
  // multiply every coefficient by (yp + a w + b w^3)
  for (int k = 0; k < 6; ++k) r.c[k] = c[k].Scale(yp);
  for (int k = 0; k < 6; ++k) {
    Fp2 t = c[k] * a;
    int j = k + 1;
    if (j >= 6) {
      r.c[j - 6] = r.c[j - 6] + MulXi(t);
    } else {
      r.c[j] = r.c[j] + t;
    }
    Fp2 s = c[k] * b;
    j = k + 3;
    if (j >= 6) {
      r.c[j - 6] = r.c[j - 6] + MulXi(s);
    } else {
      r.c[j] = r.c[j] + s;
    }
  }
  f = r;
}

struct AffineG2 {
  Fp2 x, y;
  bool inf = false;
};

// Tangent at T (doubles T); returns false for a vertical line.
G2Prepared::Line DoubleStep(AffineG2& t) {
  if (t.inf || t.y.IsZero()) {
    t.inf = true;
    return {};
  }
  Fp2 x2 = t.x.Square();
  Fp2 lambda = (x2.Double() + x2) * t.y.Double().Inverse();
  G2Prepared::Line line{true, lambda, lambda * t.x - t.y};
  Fp2 nx = lambda.Square() - t.x.Double();
  Fp2 ny = lambda * (t.x - nx) - t.y;
  t.x = nx;
  t.y = ny;
  return line;
}

// Chord through T and Q (T += Q). Vertical lines live in Fp6 and vanish
// under the final exponentiation, so they are skipped.
G2Prepared::Line AddStep(AffineG2& t, const AffineG2& q) {
  if (q.inf) return {};
  if (t.inf) {
    t = q;
    return {};
  }
  if (t.x == q.x) {
    if (t.y == q.y) return DoubleStep(t);
    t.inf = true;
    return {};
  }
  Fp2 lambda = (q.y - t.y) * (q.x - t.x).Inverse();
  G2Prepared::Line line{true, lambda, lambda * t.x - t.y};
  Fp2 nx = lambda.Square() - t.x - q.x;
  Fp2 ny = lambda * (t.x - nx) - t.y;
  t.x = nx;
  t.y = ny;
  return line;
}

const mpz_class& LoopCount() {
  static const mpz_class v = mpz_class(6) * mpz_class(std::to_string(kU)) + 2;
  return v;
}

Fp12 CyclotomicPowU(const Fp12& f) {
  Fp12 r = Fp12::One();
  for (int i = 63; i >= 0; --i) {
    r = r.CyclotomicSquare();
    if ((kU >> i) & 1) r = r * f;
  }
  return r;
}

Fp12 MillerLoopPrepared(std::span<const G1> ps, std::span<const G2Prepared* const> qs) {
  ZKR_ENFORCE(ps.size() == qs.size(), ErrorCode::kInvalidArgument,
              "pairing input length mismatch");
  struct Term {
    Fp xp, yp;
    const G2Prepared* q;
  };
  std::vector<Term> terms;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].IsIdentity() || qs[i]->IsIdentity()) continue;
    Term term;
    ps[i].ToAffine(term.xp, term.yp);
    term.q = qs[i];
    terms.push_back(term);
  }
  Fp12 f = Fp12::One();
  if (terms.empty()) return f;
  auto apply = [&](size_t slot) {
    for (auto& term : terms) {
      const auto& line = term.q->lines()[slot];
      if (line.present) MulByLine(f, term.yp, -line.lambda.Scale(term.xp), line.mu);
    }
  };
  const mpz_class& n = LoopCount();
  long top = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
  size_t slot = 0;
  for (long i = top - 1; i >= 0; --i) {
    f = f.Square();
    apply(slot++);
    if (mpz_tstbit(n.get_mpz_t(), i)) apply(slot++);
  }
  apply(slot++);
  apply(slot++);
  return f;
}

Fp12 MillerLoopMany(std::span<const G1> ps, std::span<const G2> qs) {
  ZKR_ENFORCE(ps.size() == qs.size(), ErrorCode::kInvalidArgument,
              "pairing input length mismatch");
  std::vector<G2Prepared> prepared;
  prepared.reserve(qs.size());
  std::vector<const G2Prepared*> ptrs;
  for (const auto& q : qs) prepared.emplace_back(q);
  for (const auto& q : prepared) ptrs.push_back(&q);
  return MillerLoopPrepared(ps, ptrs);
}

}  // namespace

G2Prepared::G2Prepared(const G2& q) {
  if (q.IsIdentity()) {
    identity_ = true;
    return;
  }
  AffineG2 base, t, q1, q2neg;
  q.ToAffine(base.x, base.y);
  t = base;
  TwistFrobenius(base.x, base.y, q1.x, q1.y);
  TwistFrobenius(q1.x, q1.y, q2neg.x, q2neg.y);
  q2neg.y = -q2neg.y;
  const mpz_class& n = LoopCount();
  long top = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
  for (long i = top - 1; i >= 0; --i) {
    lines_.push_back(DoubleStep(t));
    if (mpz_tstbit(n.get_mpz_t(), i)) lines_.push_back(AddStep(t, base));
  }
  lines_.push_back(AddStep(t, q1));
  lines_.push_back(AddStep(t, q2neg));
}

const mpz_class& FieldModulus() { return Fp::Modulus(); }
const mpz_class& GroupOrder() { return Fr::Modulus(); }

Fp2 Fp2::Pow(const mpz_class& e) const {
  Fp2 r = One();
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    r = r.Square();
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
  }
  return r;
}

bool Fp12::IsOne() const {
  if (!(c[0] == Fp2::One())) return false;
  for (int k = 1; k < 6; ++k) {
    if (!c[k].IsZero()) return false;
  }
  return true;
}

// Tower view: f = A + B w with A = (c0, c2, c4), B = (c1, c3, c5) over
// Fp6 = Fp2[v]/(v^3 - xi), v = w^2.
namespace {

struct Fp6 {
  Fp2 x0, x1, x2;
};

Fp6 Add6(const Fp6& a, const Fp6& b) { return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2}; }
Fp6 Sub6(const Fp6& a, const Fp6& b) { return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2}; }
Fp6 MulV(const Fp6& a) { return {MulXi(a.x2), a.x0, a.x1}; }

Fp6 Mul6(const Fp6& a, const Fp6& b) {
  Fp2 v0 = a.x0 * b.x0;
  Fp2 v1 = a.x1 * b.x1;
  Fp2 v2 = a.x2 * b.x2;
  Fp6 r;
  r.x0 = v0 + MulXi((a.x1 + a.x2) * (b.x1 + b.x2) - v1 - v2);
  r.x1 = (a.x0 + a.x1) * (b.x0 + b.x1) - v0 - v1 + MulXi(v2);
  r.x2 = (a.x0 + a.x2) * (b.x0 + b.x2) - v0 - v2 + v1;
  return r;
}

Fp6 Even(const Fp12& f) { return {f.c[0], f.c[2], f.c[4]}; }
Fp6 Odd(const Fp12& f) { return {f.c[1], f.c[3], f.c[5]}; }

Fp12 Join(const Fp6& a, const Fp6& b) {
  Fp12 r;
  r.c[0] = a.x0;
  r.c[2] = a.x1;
  r.c[4] = a.x2;
  r.c[1] = b.x0;
  r.c[3] = b.x1;
  r.c[5] = b.x2;
  return r;
}

}  // namespace

Fp12 operator*(const Fp12& a, const Fp12& b) {
  Fp6 a0 = Even(a), a1 = Odd(a), b0 = Even(b), b1 = Odd(b);
  Fp6 t0 = Mul6(a0, b0);
  Fp6 t1 = Mul6(a1, b1);
  Fp6 mid = Sub6(Sub6(Mul6(Add6(a0, a1), Add6(b0, b1)), t0), t1);
  return Join(Add6(t0, MulV(t1)), mid);
}

Fp12 Fp12::Square() const {
  Fp6 a = Even(*this), b = Odd(*this);
  Fp6 ab = Mul6(a, b);
  Fp6 t = Mul6(Add6(a, b), Add6(a, MulV(b)));
  Fp6 even = Sub6(Sub6(t, ab), MulV(ab));
  return Join(even, Add6(ab, ab));
}

// View f as g0 + g1 w + g2 w^2 over Fp4 = Fp2[s]/(s^2 - xi), s = w^3,
// with g_k = c[k] + c[k+3] s.
Fp12 Fp12::CyclotomicSquare() const {
  auto sq4 = [](const Fp2& x, const Fp2& y, Fp2& ox, Fp2& oy) {
    Fp2 xx = x.Square();
    Fp2 yy = y.Square();
    ox = xx + MulXi(yy);
    oy = (x + y).Square() - xx - yy;
  };
  Fp2 a0, a1, b0, b1, d0, d1;
  sq4(c[0], c[3], a0, a1);  // g0^2
  sq4(c[1], c[4], b0, b1);  // g1^2
  sq4(c[2], c[5], d0, d1);  // g2^2
  Fp12 r;
  // 3 g0^2 - 2 conj(g0)
  r.c[0] = (a0 - c[0]).Double() + a0;
  r.c[3] = (a1 + c[3]).Double() + a1;
  // 3 s g2^2 + 2 conj(g1)
  Fp2 s0 = MulXi(d1);
  r.c[1] = (s0 + c[1]).Double() + s0;
  r.c[4] = (d0 - c[4]).Double() + d0;
  // 3 g1^2 - 2 conj(g2)
  r.c[2] = (b0 - c[2]).Double() + b0;
  r.c[5] = (b1 + c[5]).Double() + b1;
  return r;
}

Fp12 Fp12::Conjugate() const {
  Fp12 r = *this;
  for (int k = 1; k < 6; k += 2) r.c[k] = -r.c[k];
  return r;
}

Fp12 Fp12::Frobenius() const {
  const auto& g = FrobeniusCoeffs();
  Fp12 r;
  for (int k = 0; k < 6; ++k) r.c[k] = c[k].Conjugate() * g[k];
  return r;
}

Fp12 Fp12::Inverse() const {
  // f * conj(f) lies in Fp6 = Fp2[v]/(v^3 - xi), v = w^2.
  Fp12 n = *this * Conjugate();
  const Fp2& x0 = n.c[0];
  const Fp2& x1 = n.c[2];
  const Fp2& x2 = n.c[4];
  Fp2 a = x0.Square() - MulXi(x1 * x2);
  Fp2 b = MulXi(x2.Square()) - x0 * x1;
  Fp2 cc = x1.Square() - x0 * x2;
  Fp2 d = x0 * a + MulXi(x2 * b + x1 * cc);
  ZKR_ENFORCE(!d.IsZero(), ErrorCode::kInvalidArgument, "Fp12 inverse of zero");
  Fp2 dinv = d.Inverse();
  Fp12 ninv;
  ninv.c[0] = a * dinv;
  ninv.c[2] = b * dinv;
  ninv.c[4] = cc * dinv;
  return Conjugate() * ninv;
}

Fp12 Fp12::Pow(const mpz_class& e) const {
  if (e < 0) return Inverse().Pow(-e);
  Fp12 r = One();
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    r = r.Square();
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
  }
  return r;
}

Fp12 Fp12::PowLimbs(const Limbs& e) const {
  std::array<Fp12, 16> table;
  table[0] = One();
  for (int i = 1; i < 16; ++i) table[i] = table[i - 1] * *this;
  Fp12 r = One();
  bool started = false;
  for (int w = 63; w >= 0; --w) {
    if (started) r = r.Square().Square().Square().Square();
    unsigned nib = static_cast<unsigned>((e[w / 16] >> (4 * (w % 16))) & 0xF);
    if (nib) {
      r = r * table[nib];
      started = true;
    }
  }
  return r;
}

Fp2 G2Curve::B() {
  static const Fp2 b = Fp2{Fp::FromU64(3), Fp::Zero()} * Xi().Inverse();
  return b;
}

const G1& G1Generator() {
  static const G1 g = G1::FromAffine(Fp::FromU64(1), Fp::FromU64(2));
  return g;
}

const G2& G2Generator() {
  static const G2 g = G2::FromAffine(
      Fp2{Fp::FromMpz(mpz_class("108570469990230571359445707622328294813707563595785"
                                "18086990519993285655852781")),
          Fp::FromMpz(mpz_class("115597320329863871079910040213922857839258128618211"
                                "92530917403151452391805634"))},
      Fp2{Fp::FromMpz(mpz_class("849565392312343141760497324748927243841819058726360"
                                "0148770280649306958101930")),
          Fp::FromMpz(mpz_class("408236787586343368133220340314543556831685132759340"
                                "1208105741076214120093531"))});
  return g;
}

bool IsInG2(const G2& q) {
  if (q.IsIdentity()) return true;
  Fp2 x, y;
  q.ToAffine(x, y);
  if (!G2::IsOnCurve(x, y)) return false;
  return q.Mul(FrTag::kModulus).IsIdentity();
}

std::array<uint8_t, kG2Bytes> EncodeG2(const G2& q) {
  std::array<uint8_t, kG2Bytes> out{};
  if (q.IsIdentity()) return out;
  Fp2 x, y;
  q.ToAffine(x, y);
  auto put = [&](const Fp& v, size_t off) {
    auto b = v.ToBytes();
    std::copy(b.begin(), b.end(), out.begin() + off);
  };
  put(x.c1, 0);
  put(x.c0, 32);
  put(y.c1, 64);
  put(y.c0, 96);
  return out;
}

G2 DecodeG2(std::span<const uint8_t> bytes) {
  ZKR_ENFORCE(bytes.size() == kG2Bytes, ErrorCode::kMalformed,
              "G2 encoding must be 128 octets");
  Fp2 x{Fp::FromBytes(bytes.subspan(32, 32)), Fp::FromBytes(bytes.subspan(0, 32))};
  Fp2 y{Fp::FromBytes(bytes.subspan(96, 32)), Fp::FromBytes(bytes.subspan(64, 32))};
  ZKR_ENFORCE(G2::IsOnCurve(x, y), ErrorCode::kMalformed, "G2 point not on curve");
  G2 q = G2::FromAffine(x, y);
  ZKR_ENFORCE(q.Mul(FrTag::kModulus).IsIdentity(), ErrorCode::kMalformed,
              "G2 point outside the prime-order subgroup");
  return q;
}

Fp12 MillerLoop(const G1& p, const G2& q) {
  return MillerLoopMany(std::span<const G1>(&p, 1), std::span<const G2>(&q, 1));
}

Fp12 FinalExponentiation(const Fp12& in) {
  // easy part: (p^6 - 1)(p^2 + 1)
  Fp12 t1 = in.Conjugate() * in.Inverse();
  t1 = t1.FrobeniusSquare() * t1;

  // hard part: (p^4 - p^2 + 1) / r
  Fp12 fp = t1.Frobenius();
  Fp12 fp2 = t1.FrobeniusSquare();
  Fp12 fp3 = fp2.Frobenius();

  Fp12 fu = CyclotomicPowU(t1);
  Fp12 fu2 = CyclotomicPowU(fu);
  Fp12 fu3 = CyclotomicPowU(fu2);

  Fp12 y3 = fu.Frobenius();
  Fp12 fu2p = fu2.Frobenius();
  Fp12 fu3p = fu3.Frobenius();
  Fp12 y2 = fu2.FrobeniusSquare();

  Fp12 y0 = fp * fp2 * fp3;
  Fp12 y1 = t1.Conjugate();
  Fp12 y5 = fu2.Conjugate();
  y3 = y3.Conjugate();
  Fp12 y4 = (fu * fu2p).Conjugate();
  Fp12 y6 = (fu3 * fu3p).Conjugate();

  Fp12 t0 = y6.Square() * y4 * y5;
  Fp12 s1 = y3 * y5 * t0;
  t0 = t0 * y2;
  s1 = s1.Square() * t0;
  s1 = s1.Square();
  t0 = s1 * y1;
  s1 = s1 * y0;
  t0 = t0.Square();
  return t0 * s1;
}

Gt Pairing(const G1& p, const G2& q) {
  return Gt(FinalExponentiation(MillerLoop(p, q)));
}

Gt MultiPairing(std::span<const G1> ps, std::span<const G2> qs) {
  return Gt(FinalExponentiation(MillerLoopMany(ps, qs)));
}

Gt MultiPairing(std::span<const G1> ps, std::span<const G2Prepared* const> qs) {
  return Gt(FinalExponentiation(MillerLoopPrepared(ps, qs)));
}

// Coefficient layout by power of w: c0=g0, c1=g2, c2=g4, c3=g1, c4=g3, c5=g5.
std::array<uint8_t, Gt::kEncodedBytes> Gt::Encode() const {
  std::array<uint8_t, kEncodedBytes> out{};
  if (IsIdentity()) return out;
  WriteFp2(f_.c[1], out.data());        // g2
  WriteFp2(f_.c[4], out.data() + 64);   // g3
  WriteFp2(f_.c[2], out.data() + 128);  // g4
  WriteFp2(f_.c[5], out.data() + 192);  // g5
  return out;
}

Gt Gt::Decode(std::span<const uint8_t> bytes) {
  ZKR_ENFORCE(bytes.size() == kEncodedBytes, ErrorCode::kMalformed,
              "Gt encoding must be 256 octets");
  if (std::all_of(bytes.begin(), bytes.end(), [](uint8_t b) { return b == 0; })) {
    return Identity();
  }
  Fp2 g2 = ReadFp2(bytes.subspan(0, 64));
  Fp2 g3 = ReadFp2(bytes.subspan(64, 64));
  Fp2 g4 = ReadFp2(bytes.subspan(128, 64));
  Fp2 g5 = ReadFp2(bytes.subspan(192, 64));
  Fp2 g1;
  if (!g2.IsZero()) {
    Fp2 g4sq = g4.Square();
    Fp2 num = MulXi(g5.Square()) + g4sq.Double() + g4sq - g3.Double();
    g1 = num * g2.Double().Double().Inverse();
  } else {
    ZKR_ENFORCE(!g3.IsZero(), ErrorCode::kMalformed, "Gt encoding not decodable");
    g1 = (g4 * g5).Double() * g3.Inverse();
  }
  Fp2 t = g1.Square().Double() + g2 * g5 - (g3 * g4).Double() - g3 * g4;
  Fp2 g0 = MulXi(t) + Fp2::One();
  Fp12 f;
  f.c[0] = g0;
  f.c[1] = g2;
  f.c[2] = g4;
  f.c[3] = g1;
  f.c[4] = g3;
  f.c[5] = g5;
  Gt out(f);
  ZKR_ENFORCE(!out.IsIdentity(), ErrorCode::kMalformed, "non-canonical Gt identity");
  ZKR_ENFORCE(f.PowLimbs(FrTag::kModulus).IsOne(), ErrorCode::kMalformed,
              "Gt element outside the order-r subgroup");
  return out;
}

}  // namespace zkrange::algebra::bn254
