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

#include "boudot/boudot.h"

#include <algorithm>
#include <cassert>

#include "algebra/integer.h"
#include "errors.h"
#include "wire.h"

namespace zkrange::boudot {

namespace {

using algebra::ByteReader;
using algebra::ByteWriter;
using algebra::Rng;
using commit::Transcript;

mpz_class Pow2(unsigned long k) { return mpz_class(1) << k; }

// Uniform in [lo, hi].
mpz_class Sample(Rng& rng, const mpz_class& lo, const mpz_class& hi) {
  mpz_class v = rng.RandomInRange(lo, hi);
  assert(v >= lo && v <= hi);
  return v;
}

mpz_class Ceil2tBits(const BoudotParams& p) { return Pow2(2 * p.t); }

bool InUnitGroup(const BoudotParams& p, const mpz_class& v) { return p.group().IsElement(v); }

void AbsorbParams(Transcript& t, const BoudotParams& p) {
  t.AbsorbNatural(p.group().n());
  t.AbsorbNatural(p.fo.g);
  t.AbsorbNatural(p.fo.h);
  t.AbsorbU32(p.t);
  t.AbsorbU32(p.l);
  t.AbsorbU32(p.s());
  t.AbsorbU32(p.s1);
  t.AbsorbU32(p.s2);
}

void AbsorbSs(Transcript& t, const SsStatement& st) {
  for (const auto* v : {&st.g1, &st.h1, &st.g2, &st.h2, &st.e, &st.f}) t.AbsorbNatural(*v);
  t.AbsorbNatural(st.b);
}

// g1^a h1^b E^-c
mpz_class Recommit(const algebra::RsaGroup& grp, const mpz_class& g, const mpz_class& h,
                   const mpz_class& e, const mpz_class& a, const mpz_class& b,
                   const mpz_class& c) {
  return grp.Mul(grp.Commit(g, h, a, b), grp.Pow(e, -c));
}

mpz_class LiChallenge(const BoudotParams& p, const mpz_class& big_c) {
  mpz_class c;
  mpz_fdiv_r_2exp(c.get_mpz_t(), big_c.get_mpz_t(), p.t);
  return c;
}

struct Bounds {
  mpz_class square;  // bound on x1 = floor(sqrt(B - A))
  mpz_class li;      // bound on x2 <= 2 x1
};

Bounds WtBounds(const Range& range) {
  mpz_class root = algebra::IsqrtFloor(range.b - range.a);
  return {root > 0 ? root : mpz_class(1), root > 0 ? mpz_class(2 * root) : mpz_class(1)};
}

void Decompose(const mpz_class& offset, bool unchecked, mpz_class& x1, mpz_class& x2) {
  if (offset < 0) {
    ZKR_ENFORCE(unchecked, ErrorCode::kWitnessOutOfRange, "witness out of range");
    x1 = 0;
    x2 = offset;
    return;
  }
  x1 = algebra::IsqrtFloor(offset);
  x2 = offset - x1 * x1;
}

// r2 = target - r1 with both in (-bound, bound).
void SplitRandomness(Rng& rng, const mpz_class& target, const mpz_class& bound,
                     mpz_class& r1, mpz_class& r2) {
  for (;;) {
    r1 = Sample(rng, -bound + 1, bound - 1);
    r2 = target - r1;
    if (r2 > -bound && r2 < bound) return;
  }
}

LiProof ProveLiImpl(const BoudotParams& p, const mpz_class& e, const mpz_class& x,
                    const mpz_class& r, const mpz_class& b, Rng& rng, Transcript t,
                    int max_iterations, bool unchecked) {
  const auto& grp = p.group();
  t.AbsorbNatural(e);
  t.AbsorbNatural(b);
  mpz_class w_hi = Pow2(p.t + p.l) * b - 1;
  mpz_class eta_hi = Pow2(p.t + p.l + p.s()) * grp.n() - 1;
  LiProof proof;
  for (int it = 0; it < max_iterations; ++it) {
    mpz_class omega = Sample(rng, 0, w_hi);
    mpz_class eta = Sample(rng, -eta_hi, eta_hi);
    Transcript fork = t;
    fork.AbsorbNatural(grp.Commit(p.fo.g, p.fo.h, omega, eta));
    proof.big_c = fork.ChallengeBits("C", 2 * p.t);
    mpz_class c = LiChallenge(p, proof.big_c);
    proof.d1 = omega + x * c;
    proof.d2 = eta + r * c;
    if (proof.d1 >= c * b && proof.d1 <= w_hi) return proof;
  }
  ZKR_ENFORCE(unchecked, ErrorCode::kInternal, "larger-interval proof iteration cap exceeded");
  return proof;
}

WtProof ProveWtImpl(const BoudotParams& p, const Range& range, const mpz_class& e,
                    const mpz_class& x, const mpz_class& r, const mpz_class& r_bound, Rng& rng,
                    Transcript t, bool unchecked, int li_iterations) {
  const auto& grp = p.group();
  const auto& g = p.fo.g;
  const auto& h = p.fo.h;
  if (!unchecked) {
    ZKR_ENFORCE(x >= range.a && x <= range.b, ErrorCode::kWitnessOutOfRange,
                "witness out of range");
  }
  ZKR_ENFORCE(abs(r) < r_bound, ErrorCode::kInvalidArgument, "randomness exceeds its bound");
  Bounds bounds = WtBounds(range);

  mpz_class xa1, xa2, xb1, xb2;
  Decompose(x - range.a, unchecked, xa1, xa2);
  Decompose(range.b - x, unchecked, xb1, xb2);
  mpz_class ra1, ra2, rb1, rb2;
  SplitRandomness(rng, r, r_bound, ra1, ra2);
  SplitRandomness(rng, -r, r_bound, rb1, rb2);

  WtProof proof;
  proof.e_a1 = grp.Commit(g, h, xa1 * xa1, ra1);
  proof.e_a2 = grp.Commit(g, h, xa2, ra2);
  proof.e_b1 = grp.Commit(g, h, xb1 * xb1, rb1);
  proof.e_b2 = grp.Commit(g, h, xb2, rb2);

  t.AbsorbSigned(range.a);
  t.AbsorbSigned(range.b);
  t.AbsorbNatural(e);
  for (const auto* v : {&proof.e_a1, &proof.e_a2, &proof.e_b1, &proof.e_b2}) t.AbsorbNatural(*v);

  auto fork = [&](const char* label) {
    Transcript f = t;
    f.AbsorbLabel(label);
    return f;
  };
  mpz_class bx = std::max<mpz_class>(abs(range.a), abs(range.b));
  proof.opening = ProveOpening(p, e, x, r, bx, r_bound, rng, fork("open"));
  proof.s_a = ProveSquare(p, proof.e_a1, xa1, ra1, bounds.square, rng, fork("sq/a"));
  proof.s_b = ProveSquare(p, proof.e_b1, xb1, rb1, bounds.square, rng, fork("sq/b"));
  proof.li_a = ProveLiImpl(p, proof.e_a2, xa2, ra2, bounds.li, rng, fork("li/a"),
                           li_iterations, unchecked);
  proof.li_b = ProveLiImpl(p, proof.e_b2, xb2, rb2, bounds.li, rng, fork("li/b"),
                           li_iterations, unchecked);
  return proof;
}

Transcript SdTranscript(const BoudotParams& p, const Range& range, uint32_t t_exp,
                        const mpz_class& e, const mpz_class& e_prime) {
  Transcript t("boudot/sd/v1");
  AbsorbParams(t, p);
  t.AbsorbSigned(range.a);
  t.AbsorbSigned(range.b);
  t.AbsorbU32(t_exp);
  t.AbsorbNatural(e);
  t.AbsorbNatural(e_prime);
  return t;
}

SdProof ProveSdImpl(const BoudotParams& p, const Range& range, const mpz_class& e,
                    const mpz_class& x, const mpz_class& r, Rng& rng, bool unchecked,
                    int li_iterations) {
  ZKR_ENFORCE(range.a <= range.b, ErrorCode::kInvalidArgument, "empty range");
  if (!unchecked) {
    ZKR_ENFORCE(x >= range.a && x <= range.b, ErrorCode::kWitnessOutOfRange,
                "witness out of range");
  }
  SdProof proof;
  proof.t_exp = ScalingExponent(p, range);
  mpz_class scale = Pow2(proof.t_exp);
  proof.e_prime = p.group().Pow(e, scale);
  Range scaled{scale * range.a, scale * range.b};
  mpz_class r_bound = scale * Pow2(p.s()) * p.group().n();
  Transcript t = SdTranscript(p, range, proof.t_exp, e, proof.e_prime);
  proof.wt = ProveWtImpl(p, scaled, proof.e_prime, scale * x, scale * r, r_bound, rng, t,
                         unchecked, li_iterations);
  return proof;
}

// ---- codec -----------------------------------------------------------------

size_t MaxIntBytes(const BoudotParams& p) {
  return 4 * ((algebra::BitLength(p.group().n()) + 7) / 8) + 1024;
}

void PutSs(ByteWriter& w, const SsProof& s) {
  w.PutNatural(s.c);
  w.PutSigned(s.d);
  w.PutSigned(s.d1);
  w.PutSigned(s.d2);
}

SsProof GetSs(const BoudotParams& p, ByteReader& r) {
  size_t m = MaxIntBytes(p);
  SsProof s;
  s.c = r.GetNatural(m);
  s.d = r.GetSigned(m);
  s.d1 = r.GetSigned(m);
  s.d2 = r.GetSigned(m);
  return s;
}

void PutLi(ByteWriter& w, const LiProof& li) {
  w.PutNatural(li.big_c);
  w.PutSigned(li.d1);
  w.PutSigned(li.d2);
}

LiProof GetLi(const BoudotParams& p, ByteReader& r) {
  size_t m = MaxIntBytes(p);
  LiProof li;
  li.big_c = r.GetNatural(m);
  li.d1 = r.GetSigned(m);
  li.d2 = r.GetSigned(m);
  return li;
}

}  // namespace

// ---- setup -----------------------------------------------------------------

BoudotParams BoudotFromModulus(const algebra::RsaModulus& modulus, Rng& rng) {
  BoudotParams p{commit::FoSetup(modulus, rng, 80)};
  return p;
}

BoudotParams BoudotSetup(int modulus_bits, Rng& rng) {
  algebra::SafePrimeOptions opts;
  opts.insecure_small = modulus_bits / 2 < 512;
  return BoudotFromModulus(algebra::GenRsaModulus(modulus_bits, rng, opts), rng);
}

std::vector<uint8_t> SerializeParams(const BoudotParams& p) {
  ByteWriter w;
  wire::WriteHeader(w, wire::Kind::kParams, wire::Scheme::kBoudot);
  w.PutNatural(p.group().n());
  w.PutNatural(p.fo.g);
  w.PutNatural(p.fo.h);
  for (int v : {p.t, p.l, p.s(), p.s1, p.s2}) w.PutU32(static_cast<uint32_t>(v));
  return w.Take();
}

BoudotParams ParseParams(std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  wire::ReadHeader(r, wire::Kind::kParams, wire::Scheme::kBoudot);
  mpz_class n = r.GetNatural(4096);
  ZKR_ENFORCE(n > 3 && mpz_odd_p(n.get_mpz_t()), ErrorCode::kMalformed, "bad modulus");
  algebra::RsaGroup grp(n);
  mpz_class g = grp.Decode(r);
  mpz_class h = grp.Decode(r);
  BoudotParams p{commit::FoParams{grp, g, h, 80}};
  uint32_t vals[5];
  for (auto& v : vals) {
    v = r.GetU32();
    ZKR_ENFORCE(v >= 1 && v <= 1024, ErrorCode::kMalformed, "parameter out of range");
  }
  p.t = static_cast<int>(vals[0]);
  p.l = static_cast<int>(vals[1]);
  p.fo.s = static_cast<int>(vals[2]);
  p.s1 = static_cast<int>(vals[3]);
  p.s2 = static_cast<int>(vals[4]);
  r.ExpectEnd();
  return p;
}

// ---- same secret -----------------------------------------------------------

SsProof ProveSs(const BoudotParams& p, const SsStatement& st, const mpz_class& x,
                const mpz_class& r1, const mpz_class& r2, Rng& rng, Transcript t) {
  const auto& grp = p.group();
  mpz_class omega = Sample(rng, 1, Pow2(p.l + p.t) * st.b - 1);
  mpz_class eta1 = Sample(rng, 1, Pow2(p.l + p.t + p.s1) * grp.n() - 1);
  mpz_class eta2 = Sample(rng, 1, Pow2(p.l + p.t + p.s2) * grp.n() - 1);
  AbsorbSs(t, st);
  t.AbsorbNatural(grp.Commit(st.g1, st.h1, omega, eta1));
  t.AbsorbNatural(grp.Commit(st.g2, st.h2, omega, eta2));
  SsProof proof;
  proof.c = t.ChallengeBits("c", 2 * p.t);
  proof.d = omega + proof.c * x;
  proof.d1 = eta1 + proof.c * r1;
  proof.d2 = eta2 + proof.c * r2;
  return proof;
}

bool VerifySs(const BoudotParams& p, const SsStatement& st, const SsProof& proof, Transcript t) {
  const auto& grp = p.group();
  if (proof.c < 0 || proof.c >= Ceil2tBits(p)) return false;
  for (const auto* v : {&st.g1, &st.h1, &st.g2, &st.h2, &st.e, &st.f}) {
    if (!InUnitGroup(p, *v)) return false;
  }
  AbsorbSs(t, st);
  t.AbsorbNatural(Recommit(grp, st.g1, st.h1, st.e, proof.d, proof.d1, proof.c));
  t.AbsorbNatural(Recommit(grp, st.g2, st.h2, st.f, proof.d, proof.d2, proof.c));
  return t.ChallengeBits("c", 2 * p.t) == proof.c;
}

// ---- square ----------------------------------------------------------------

SquareProof ProveSquare(const BoudotParams& p, const mpz_class& e, const mpz_class& x,
                        const mpz_class& r1, const mpz_class& b, Rng& rng, Transcript t) {
  const auto& grp = p.group();
  mpz_class bound = Pow2(p.s()) * grp.n();
  mpz_class r2 = Sample(rng, -bound + 1, bound - 1);
  SquareProof proof;
  proof.f = grp.Commit(p.fo.g, p.fo.h, x, r2);
  mpz_class r3 = r1 - r2 * x;
  // F = g^x h^r2 and E = F^x h^r3
  SsStatement st{p.fo.g, p.fo.h, proof.f, p.fo.h, proof.f, e, b};
  proof.ss = ProveSs(p, st, x, r2, r3, rng, t);
  return proof;
}

bool VerifySquare(const BoudotParams& p, const mpz_class& e, const mpz_class& b,
                  const SquareProof& proof, Transcript t) {
  if (!InUnitGroup(p, proof.f)) return false;
  SsStatement st{p.fo.g, p.fo.h, proof.f, p.fo.h, proof.f, e, b};
  return VerifySs(p, st, proof.ss, t);
}

// ---- larger interval -------------------------------------------------------

LiProof ProveLi(const BoudotParams& p, const mpz_class& e, const mpz_class& x,
                const mpz_class& r, const mpz_class& b, Rng& rng, Transcript t,
                int max_iterations) {
  return ProveLiImpl(p, e, x, r, b, rng, t, max_iterations, false);
}

bool VerifyLi(const BoudotParams& p, const mpz_class& e, const mpz_class& b,
              const LiProof& proof, Transcript t) {
  if (proof.big_c < 0 || proof.big_c >= Ceil2tBits(p)) return false;
  if (!InUnitGroup(p, e)) return false;
  mpz_class c = LiChallenge(p, proof.big_c);
  if (proof.d1 < c * b || proof.d1 > Pow2(p.t + p.l) * b - 1) return false;
  t.AbsorbNatural(e);
  t.AbsorbNatural(b);
  t.AbsorbNatural(Recommit(p.group(), p.fo.g, p.fo.h, e, proof.d1, proof.d2, c));
  return t.ChallengeBits("C", 2 * p.t) == proof.big_c;
}

// ---- opening ---------------------------------------------------------------

OpeningProof ProveOpening(const BoudotParams& p, const mpz_class& e, const mpz_class& x,
                          const mpz_class& r, const mpz_class& bx, const mpz_class& br,
                          Rng& rng, Transcript t) {
  mpz_class omega = Sample(rng, 1, Pow2(p.l + p.t) * std::max<mpz_class>(bx, 1) - 1);
  mpz_class eta = Sample(rng, 1, Pow2(p.l + p.t) * std::max<mpz_class>(br, 1) - 1);
  t.AbsorbNatural(e);
  t.AbsorbNatural(p.group().Commit(p.fo.g, p.fo.h, omega, eta));
  OpeningProof proof;
  proof.c = t.ChallengeBits("c", 2 * p.t);
  proof.d = omega + proof.c * x;
  proof.d1 = eta + proof.c * r;
  return proof;
}

bool VerifyOpening(const BoudotParams& p, const mpz_class& e, const OpeningProof& proof,
                   Transcript t) {
  if (proof.c < 0 || proof.c >= Ceil2tBits(p)) return false;
  if (!InUnitGroup(p, e)) return false;
  t.AbsorbNatural(e);
  t.AbsorbNatural(Recommit(p.group(), p.fo.g, p.fo.h, e, proof.d, proof.d1, proof.c));
  return t.ChallengeBits("c", 2 * p.t) == proof.c;
}

// ---- with tolerance --------------------------------------------------------

WtProof ProveWt(const BoudotParams& p, const Range& range, const mpz_class& e,
                const mpz_class& x, const mpz_class& r, const mpz_class& r_bound, Rng& rng,
                Transcript t) {
  return ProveWtImpl(p, range, e, x, r, r_bound, rng, t, false, kMaxLiIterations);
}

bool VerifyWt(const BoudotParams& p, const Range& range, const mpz_class& e,
              const WtProof& proof, Transcript t) {
  const auto& grp = p.group();
  for (const auto* v : {&e, &proof.e_a1, &proof.e_a2, &proof.e_b1, &proof.e_b2}) {
    if (!InUnitGroup(p, *v)) return false;
  }
  mpz_class e_a = grp.Div(e, grp.Pow(p.fo.g, range.a));
  mpz_class e_b = grp.Div(grp.Pow(p.fo.g, range.b), e);
  if (proof.e_a2 != grp.Div(e_a, proof.e_a1) || proof.e_b2 != grp.Div(e_b, proof.e_b1)) {
    return false;
  }
  Bounds bounds = WtBounds(range);
  t.AbsorbSigned(range.a);
  t.AbsorbSigned(range.b);
  t.AbsorbNatural(e);
  for (const auto* v : {&proof.e_a1, &proof.e_a2, &proof.e_b1, &proof.e_b2}) t.AbsorbNatural(*v);
  auto fork = [&](const char* label) {
    Transcript f = t;
    f.AbsorbLabel(label);
    return f;
  };
  return VerifyOpening(p, e, proof.opening, fork("open")) &&
         VerifySquare(p, proof.e_a1, bounds.square, proof.s_a, fork("sq/a")) &&
         VerifySquare(p, proof.e_b1, bounds.square, proof.s_b, fork("sq/b")) &&
         VerifyLi(p, proof.e_a2, bounds.li, proof.li_a, fork("li/a")) &&
         VerifyLi(p, proof.e_b2, bounds.li, proof.li_b, fork("li/b"));
}

// ---- exact range -----------------------------------------------------------

uint32_t ScalingExponent(const BoudotParams& p, const Range& range) {
  return static_cast<uint32_t>(2 * (p.t + p.l + 1) + algebra::BitLength(range.b - range.a));
}

SdProof ProveSd(const BoudotParams& p, const Range& range, const mpz_class& e,
                const mpz_class& x, const mpz_class& r, Rng& rng) {
  return ProveSdImpl(p, range, e, x, r, rng, false, kMaxLiIterations);
}

bool VerifySd(const BoudotParams& p, const Range& range, const mpz_class& e,
              const SdProof& proof) {
  if (range.a > range.b) return false;
  if (proof.t_exp != ScalingExponent(p, range)) return false;
  if (!InUnitGroup(p, e)) return false;
  mpz_class scale = Pow2(proof.t_exp);
  if (proof.e_prime != p.group().Pow(e, scale)) return false;
  Range scaled{scale * range.a, scale * range.b};
  Transcript t = SdTranscript(p, range, proof.t_exp, e, proof.e_prime);
  return VerifyWt(p, scaled, proof.e_prime, proof.wt, t);
}

BoudotBundle Prove(const BoudotParams& p, const Range& range, const mpz_class& x, Rng& rng) {
  ZKR_ENFORCE(x >= range.a && x <= range.b, ErrorCode::kWitnessOutOfRange,
              "witness out of range");
  commit::FoCommitment c = commit::FoCommit(p.fo, x, rng);
  return {c.element, ProveSd(p, range, c.element, x, c.r, rng)};
}

bool Verify(const BoudotParams& p, const Range& range, const BoudotBundle& bundle) {
  return VerifySd(p, range, bundle.e, bundle.sd);
}

std::vector<uint8_t> SerializeBundle(const BoudotParams& p, const BoudotBundle& bundle) {
  const auto& grp = p.group();
  ByteWriter w;
  wire::WriteHeader(w, wire::Kind::kProof, wire::Scheme::kBoudot);
  grp.Encode(w, bundle.e);
  const SdProof& sd = bundle.sd;
  grp.Encode(w, sd.e_prime);
  const WtProof& wt = sd.wt;
  for (const auto* v : {&wt.e_a1, &wt.e_a2, &wt.e_b1, &wt.e_b2}) grp.Encode(w, *v);
  for (const auto* s : {&wt.s_a, &wt.s_b}) {
    grp.Encode(w, s->f);
    PutSs(w, s->ss);
  }
  PutLi(w, wt.li_a);
  PutLi(w, wt.li_b);
  w.PutNatural(wt.opening.c);
  w.PutSigned(wt.opening.d);
  w.PutSigned(wt.opening.d1);
  w.PutU32(sd.t_exp);
  return w.Take();
}

BoudotBundle ParseBundle(const BoudotParams& p, std::span<const uint8_t> bytes) {
  const auto& grp = p.group();
  ByteReader r(bytes);
  wire::ReadHeader(r, wire::Kind::kProof, wire::Scheme::kBoudot);
  BoudotBundle b;
  b.e = grp.Decode(r);
  SdProof& sd = b.sd;
  sd.e_prime = grp.Decode(r);
  WtProof& wt = sd.wt;
  for (auto* v : {&wt.e_a1, &wt.e_a2, &wt.e_b1, &wt.e_b2}) *v = grp.Decode(r);
  for (auto* s : {&wt.s_a, &wt.s_b}) {
    s->f = grp.Decode(r);
    s->ss = GetSs(p, r);
  }
  wt.li_a = GetLi(p, r);
  wt.li_b = GetLi(p, r);
  size_t m = MaxIntBytes(p);
  wt.opening.c = r.GetNatural(m);
  wt.opening.d = r.GetSigned(m);
  wt.opening.d1 = r.GetSigned(m);
  sd.t_exp = r.GetU32();
  r.ExpectEnd();
  return b;
}

namespace testing {

SdProof ProveSdUnchecked(const BoudotParams& p, const Range& range, const mpz_class& e,
                         const mpz_class& x, const mpz_class& r, Rng& rng, int li_iterations) {
  return ProveSdImpl(p, range, e, x, r, rng, true, li_iterations);
}

}  // namespace testing

}  // namespace zkrange::boudot
