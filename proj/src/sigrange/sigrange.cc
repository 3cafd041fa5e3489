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

#include "sigrange/sigrange.h"

#include <algorithm>

#include "algebra/codec.h"
#include "algebra/point_codec.h"
#include "errors.h"
#include "wire.h"

namespace zkrange::sigrange {

namespace {

using algebra::ByteReader;
using algebra::ByteWriter;
using algebra::Rng;
using commit::Transcript;
namespace bn = algebra::bn254;

const G1& Gen1() { return bn::G1Generator(); }
const G2& Gen2() { return bn::G2Generator(); }
const bn::G2Prepared& Gen2Prepared() {
  static const bn::G2Prepared g(bn::G2Generator());
  return g;
}
const G1& PedersenH() { return commit::DefaultBn254Pedersen().h; }

G1 Commit(const Fr& m, const Fr& r) { return commit::DefaultBn254Pedersen().Commit(m, r); }

void AbsorbGt(Transcript& t, const Gt& v) { t.Absorb(v.Encode()); }
void AbsorbG2(Transcript& t, const G2& q) { t.Absorb(bn::EncodeG2(q)); }

// e(V, y)^c e(V, g2)^-z_delta e(g1, g2)^z_tau as one product of two pairings.
Gt DigitCheck(const bn::G2Prepared& y, const G1& v, const Fr& c, const Fr& z_delta,
              const Fr& z_tau) {
  std::vector<G1> ps = {v * c, Gen1() * z_tau + v * (-z_delta)};
  std::vector<const bn::G2Prepared*> qs = {&y, &Gen2Prepared()};
  return bn::MultiPairing(ps, qs);
}

// e(V, g2)^-s e(g1, g2)^t.
Gt DigitCommitment(const G1& v, const Fr& s, const Fr& t) {
  std::vector<G1> ps = {v * (-s) + Gen1() * t};
  std::vector<const bn::G2Prepared*> qs = {&Gen2Prepared()};
  return bn::MultiPairing(ps, qs);
}

Fr NonZeroKey(Rng& rng) { return Fr::RandomNonZero(rng); }

void PutPoint(ByteWriter& w, const G1& p) { w.PutBytes(algebra::EncodePoint(p)); }
G1 GetPoint(ByteReader& r) {
  return algebra::DecodePoint<bn::G1Curve>(r.GetBytes(algebra::kCompressedPointBytes));
}
void PutScalar(ByteWriter& w, const Fr& s) { w.PutBytes(s.ToBytes()); }
Fr GetScalar(ByteReader& r) { return Fr::FromBytes(r.GetBytes(Fr::kBytes)); }
void PutGt(ByteWriter& w, const Gt& v) {
  w.PutU32(Gt::kEncodedBytes);
  w.PutBytes(v.Encode());
}
Gt GetGt(ByteReader& r) {
  ZKR_ENFORCE(r.GetU32() == Gt::kEncodedBytes, ErrorCode::kMalformed, "bad Gt length");
  return Gt::Decode(r.GetBytes(Gt::kEncodedBytes));
}

void PutRangeProof(ByteWriter& w, const RangeProof& p) {
  for (const auto& v : p.v) PutPoint(w, v);
  for (const auto& a : p.a) PutGt(w, a);
  PutPoint(w, p.d);
  PutScalar(w, p.c);
  PutScalar(w, p.z_gamma);
  for (const auto& z : p.z_delta) PutScalar(w, z);
  for (const auto& z : p.z_tau) PutScalar(w, z);
}

RangeProof GetRangeProof(ByteReader& r, uint32_t l) {
  RangeProof p;
  for (uint32_t j = 0; j < l; ++j) p.v.push_back(GetPoint(r));
  for (uint32_t j = 0; j < l; ++j) p.a.push_back(GetGt(r));
  p.d = GetPoint(r);
  p.c = GetScalar(r);
  p.z_gamma = GetScalar(r);
  for (uint32_t j = 0; j < l; ++j) p.z_delta.push_back(GetScalar(r));
  for (uint32_t j = 0; j < l; ++j) p.z_tau.push_back(GetScalar(r));
  return p;
}

void AbsorbRangeStatement(Transcript& t, const RangeParams& params, const G1& c) {
  t.AbsorbPoint(Gen1());
  t.AbsorbPoint(PedersenH());
  AbsorbG2(t, params.y);
  t.AbsorbU32(params.u);
  t.AbsorbU32(params.l);
  t.AbsorbPoint(c);
}

Transcript ArbitraryTranscript(const RangeParams& params, const Range& range, const G1& c) {
  Transcript t("ccs/range/v1");
  t.AbsorbU32(params.u);
  t.AbsorbU32(params.l);
  t.AbsorbSigned(range.a);
  t.AbsorbSigned(range.b);
  t.AbsorbPoint(c);
  return t;
}

Transcript Fork(const Transcript& t, const char* label) {
  Transcript f = t;
  f.AbsorbLabel(label);
  return f;
}

bool RangeFits(const RangeParams& params, const Range& range) {
  return range.a < range.b && range.b - range.a <= params.Capacity();
}

mpz_class CeilRoot(const mpz_class& w, uint32_t l) {
  mpz_class root;
  mpz_root(root.get_mpz_t(), w.get_mpz_t(), l);
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), root.get_mpz_t(), l);
  if (p < w) ++root;
  return root;
}

}  // namespace

// ---- Boneh-Boyen -----------------------------------------------------------

BbKeyPair BbKeyGen(Rng& rng) {
  Fr x = NonZeroKey(rng);
  return {x, Gen2() * x};
}

G1 BbSign(const Fr& x, const Fr& m) {
  Fr e = x + m;
  ZKR_ENFORCE(!e.IsZero(), ErrorCode::kInvalidArgument, "unsignable message");
  return Gen1() * e.Inverse();
}

bool BbVerify(const G2& y, const Fr& m, const G1& sigma) {
  bn::G2Prepared ym(y + Gen2() * m);
  std::vector<G1> ps = {sigma, -Gen1()};
  std::vector<const bn::G2Prepared*> qs = {&ym, &Gen2Prepared()};
  return bn::MultiPairing(ps, qs).IsIdentity();
}

// ---- set membership --------------------------------------------------------

SmParams SetupSm(std::span<const Fr> set, Rng& rng) {
  ZKR_ENFORCE(!set.empty(), ErrorCode::kInvalidArgument, "empty set");
  for (size_t i = 0; i < set.size(); ++i) {
    for (size_t j = i + 1; j < set.size(); ++j) {
      ZKR_ENFORCE(!(set[i] == set[j]), ErrorCode::kInvalidArgument, "duplicate set element");
    }
  }
  for (;;) {
    Fr x = NonZeroKey(rng);
    bool clash = std::any_of(set.begin(), set.end(), [&](const Fr& m) { return (x + m).IsZero(); });
    if (clash) continue;
    SmParams params;
    params.y = Gen2() * x;
    params.elements.assign(set.begin(), set.end());
    for (const Fr& m : set) params.signatures.push_back(BbSign(x, m));
    return params;
  }
}

namespace {

Transcript SmTranscript(const SmParams& params, const G1& c) {
  Transcript t("ccs/sm/v1");
  t.AbsorbPoint(Gen1());
  t.AbsorbPoint(PedersenH());
  AbsorbG2(t, params.y);
  t.AbsorbPoint(c);
  return t;
}

Fr SmChallenge(Transcript t, const G1& v, const Gt& a, const G1& d) {
  t.AbsorbPoint(v);
  AbsorbGt(t, a);
  t.AbsorbPoint(d);
  return t.ChallengeScalar<Fr>("c");
}

}  // namespace

SmProof ProveSm(const SmParams& params, const G1& c, const Fr& delta, const Fr& gamma,
                Rng& rng) {
  auto it = std::find(params.elements.begin(), params.elements.end(), delta);
  ZKR_ENFORCE(it != params.elements.end(), ErrorCode::kWitnessOutOfRange, "not a member");
  const G1& sig = params.signatures[it - params.elements.begin()];
  Fr tau = Fr::RandomNonZero(rng);
  Fr s = Fr::Random(rng), t = Fr::Random(rng), m = Fr::Random(rng);
  SmProof proof;
  proof.v = sig * tau;
  proof.a = DigitCommitment(proof.v, s, t);
  proof.d = Commit(s, m);
  proof.c = SmChallenge(SmTranscript(params, c), proof.v, proof.a, proof.d);
  proof.z_delta = s - delta * proof.c;
  proof.z_tau = t - tau * proof.c;
  proof.z_gamma = m - gamma * proof.c;
  return proof;
}

bool VerifySm(const SmParams& params, const G1& c, const SmProof& proof) {
  if (proof.v.IsIdentity()) return false;
  if (!(SmChallenge(SmTranscript(params, c), proof.v, proof.a, proof.d) == proof.c)) return false;
  G1 rhs = c * proof.c + Commit(proof.z_delta, proof.z_gamma);
  if (!(rhs == proof.d)) return false;
  return DigitCheck(bn::G2Prepared(params.y), proof.v, proof.c, proof.z_delta, proof.z_tau) == proof.a;
}

// ---- range -----------------------------------------------------------------

mpz_class RangeParams::Capacity() const {
  mpz_class cap;
  mpz_ui_pow_ui(cap.get_mpz_t(), u, l);
  return cap;
}

RangeParams SetupRange(uint32_t u, uint32_t l, Rng& rng) {
  ZKR_ENFORCE(u >= 2 && u <= kMaxBase, ErrorCode::kInvalidArgument, "base out of range");
  ZKR_ENFORCE(l >= 1 && l <= kMaxDigits, ErrorCode::kInvalidArgument, "digit count out of range");
  RangeParams params;
  params.u = u;
  params.l = l;
  ZKR_ENFORCE(params.Capacity() < bn::GroupOrder(), ErrorCode::kInvalidArgument,
              "u^l must be below the group order");
  for (;;) {
    Fr x = NonZeroKey(rng);
    bool clash = false;
    for (uint32_t i = 0; i < u && !clash; ++i) clash = (x + Fr::FromU64(i)).IsZero();
    if (clash) continue;
    params.y = Gen2() * x;
    for (uint32_t i = 0; i < u; ++i) params.table.push_back(BbSign(x, Fr::FromU64(i)));
    return params;
  }
}

bool ValidateTable(const RangeParams& params) {
  if (params.table.size() != params.u) return false;
  for (uint32_t i = 0; i < params.u; ++i) {
    if (!BbVerify(params.y, Fr::FromU64(i), params.table[i])) return false;
  }
  return true;
}

std::vector<uint32_t> Digits(const mpz_class& delta, uint32_t u, uint32_t l) {
  ZKR_ENFORCE(u >= 2 && l >= 1, ErrorCode::kInvalidArgument, "bad base or digit count");
  mpz_class cap;
  mpz_ui_pow_ui(cap.get_mpz_t(), u, l);
  ZKR_ENFORCE(delta >= 0 && delta < cap, ErrorCode::kWitnessOutOfRange, "witness out of range");
  std::vector<uint32_t> out(l);
  mpz_class rest = delta;
  for (uint32_t j = 0; j < l; ++j) {
    out[j] = static_cast<uint32_t>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), u));
  }
  return out;
}

RangeProof ProveRange(const RangeParams& params, const G1& c, const mpz_class& delta,
                      const Fr& gamma, Rng& rng, Transcript t) {
  std::vector<uint32_t> digits = Digits(delta, params.u, params.l);
  RangeProof proof;
  std::vector<Fr> s(params.l), tt(params.l), tau(params.l);
  Fr s_sum = Fr::Zero(), m_sum = Fr::Zero(), uj = Fr::One();
  Fr u = Fr::FromU64(params.u);
  for (uint32_t j = 0; j < params.l; ++j) {
    tau[j] = Fr::RandomNonZero(rng);
    proof.v.push_back(params.table[digits[j]] * tau[j]);
    s[j] = Fr::Random(rng);
    tt[j] = Fr::Random(rng);
    m_sum = m_sum + Fr::Random(rng);
    proof.a.push_back(DigitCommitment(proof.v[j], s[j], tt[j]));
    s_sum = s_sum + uj * s[j];
    uj = uj * u;
  }
  proof.d = Commit(s_sum, m_sum);

  AbsorbRangeStatement(t, params, c);
  for (const auto& v : proof.v) t.AbsorbPoint(v);
  for (const auto& a : proof.a) AbsorbGt(t, a);
  t.AbsorbPoint(proof.d);
  proof.c = t.ChallengeScalar<Fr>("c");

  for (uint32_t j = 0; j < params.l; ++j) {
    proof.z_delta.push_back(s[j] - Fr::FromU64(digits[j]) * proof.c);
    proof.z_tau.push_back(tt[j] - tau[j] * proof.c);
  }
  proof.z_gamma = m_sum - gamma * proof.c;
  return proof;
}

bool VerifyRange(const RangeParams& params, const G1& c, const RangeProof& proof, Transcript t) {
  size_t l = params.l;
  if (proof.v.size() != l || proof.a.size() != l || proof.z_delta.size() != l ||
      proof.z_tau.size() != l) {
    return false;
  }
  for (const auto& v : proof.v) {
    if (v.IsIdentity()) return false;
  }
  AbsorbRangeStatement(t, params, c);
  for (const auto& v : proof.v) t.AbsorbPoint(v);
  for (const auto& a : proof.a) AbsorbGt(t, a);
  t.AbsorbPoint(proof.d);
  if (!(t.ChallengeScalar<Fr>("c") == proof.c)) return false;

  Fr z_sum = Fr::Zero(), uj = Fr::One();
  Fr u = Fr::FromU64(params.u);
  for (size_t j = 0; j < l; ++j) {
    z_sum = z_sum + uj * proof.z_delta[j];
    uj = uj * u;
  }
  if (!(c * proof.c + Commit(z_sum, proof.z_gamma) == proof.d)) return false;
  bn::G2Prepared y(params.y);
  for (size_t j = 0; j < l; ++j) {
    if (!(DigitCheck(y, proof.v[j], proof.c, proof.z_delta[j], proof.z_tau[j]) ==
          proof.a[j])) {
      return false;
    }
  }
  return true;
}

// ---- arbitrary range -------------------------------------------------------

ArbitraryProof ProveArbitrary(const RangeParams& params, const Range& range, const G1& c,
                              const mpz_class& delta, const Fr& gamma, Rng& rng) {
  ZKR_ENFORCE(RangeFits(params, range), ErrorCode::kInvalidArgument,
              "range empty or wider than u^l");
  ZKR_ENFORCE(delta >= range.a && delta < range.b, ErrorCode::kWitnessOutOfRange,
              "witness out of range");
  mpz_class cap = params.Capacity();
  Transcript root = ArbitraryTranscript(params, range, c);
  ArbitraryProof proof;
  proof.lower = ProveRange(params, c - Gen1() * Fr::FromMpz(range.a), delta - range.a, gamma,
                           rng, Fork(root, "lower"));
  proof.upper = ProveRange(params, c + Gen1() * Fr::FromMpz(cap - range.b),
                           delta - range.b + cap, gamma, rng, Fork(root, "upper"));
  return proof;
}

bool VerifyArbitrary(const RangeParams& params, const Range& range, const G1& c,
                     const ArbitraryProof& proof) {
  if (!RangeFits(params, range)) return false;
  mpz_class cap = params.Capacity();
  Transcript root = ArbitraryTranscript(params, range, c);
  return VerifyRange(params, c - Gen1() * Fr::FromMpz(range.a), proof.lower,
                     Fork(root, "lower")) &&
         VerifyRange(params, c + Gen1() * Fr::FromMpz(cap - range.b), proof.upper,
                     Fork(root, "upper"));
}

SigRangeBundle Prove(const RangeParams& params, const Range& range, const mpz_class& delta,
                     Rng& rng) {
  ZKR_ENFORCE(delta >= range.a && delta < range.b, ErrorCode::kWitnessOutOfRange,
              "witness out of range");
  Fr gamma = Fr::Random(rng);
  G1 c = Commit(Fr::FromMpz(delta), gamma);
  return {c, ProveArbitrary(params, range, c, delta, gamma, rng)};
}

bool Verify(const RangeParams& params, const Range& range, const SigRangeBundle& bundle) {
  return VerifyArbitrary(params, range, bundle.c, bundle.proof);
}

// ---- sizes -----------------------------------------------------------------

size_t RangeProofBytes(uint32_t l) {
  constexpr size_t kPoint = algebra::kCompressedPointBytes;
  constexpr size_t kScalar = Fr::kBytes;
  constexpr size_t kGt = 4 + Gt::kEncodedBytes;
  return l * (kPoint + kGt + 2 * kScalar) + kPoint + 2 * kScalar;
}

size_t BundleBytes(uint32_t l) {
  return wire::kHeaderBytes + algebra::kCompressedPointBytes + 2 * RangeProofBytes(l);
}

BaseDigits OptimalParams(const mpz_class& a, const mpz_class& b) {
  ZKR_ENFORCE(b > a, ErrorCode::kInvalidArgument, "empty range");
  mpz_class width = b - a;
  bool found = false;
  BaseDigits best{0, 0};
  mpz_class best_cost;
  for (uint32_t l = 1; l <= kMaxDigits; ++l) {
    mpz_class u = std::max<mpz_class>(2, CeilRoot(width, l));
    if (u > kMaxBase) continue;
    mpz_class cap;
    mpz_pow_ui(cap.get_mpz_t(), u.get_mpz_t(), l);
    if (cap >= bn::GroupOrder()) continue;
    mpz_class cost = mpz_class(static_cast<unsigned long>(BundleBytes(l))) +
                     u * static_cast<unsigned long>(algebra::kCompressedPointBytes);
    if (!found || cost < best_cost) {
      found = true;
      best_cost = cost;
      best = {static_cast<uint32_t>(u.get_ui()), l};
    }
  }
  ZKR_ENFORCE(found, ErrorCode::kInvalidArgument, "range too wide");
  return best;
}

// ---- codec -----------------------------------------------------------------

std::vector<uint8_t> SerializeParams(const RangeParams& params) {
  ByteWriter w;
  wire::WriteHeader(w, wire::Kind::kParams, wire::Scheme::kSigRange);
  w.PutU32(params.u);
  w.PutU32(params.l);
  w.PutBytes(bn::EncodeG2(params.y));
  for (const auto& a : params.table) PutPoint(w, a);
  return w.Take();
}

RangeParams ParseParams(std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  wire::ReadHeader(r, wire::Kind::kParams, wire::Scheme::kSigRange);
  RangeParams params;
  params.u = r.GetU32();
  params.l = r.GetU32();
  ZKR_ENFORCE(params.u >= 2 && params.u <= kMaxBase && params.l >= 1 && params.l <= kMaxDigits,
              ErrorCode::kMalformed, "bad base or digit count");
  ZKR_ENFORCE(params.Capacity() < bn::GroupOrder(), ErrorCode::kMalformed, "u^l too large");
  params.y = bn::DecodeG2(r.GetBytes(bn::kG2Bytes));
  ZKR_ENFORCE(!params.y.IsIdentity(), ErrorCode::kMalformed, "identity key");
  for (uint32_t i = 0; i < params.u; ++i) params.table.push_back(GetPoint(r));
  r.ExpectEnd();
  ZKR_ENFORCE(ValidateTable(params), ErrorCode::kMalformed, "invalid signature table");
  return params;
}

std::vector<uint8_t> SerializeBundle(const SigRangeBundle& bundle) {
  ByteWriter w;
  wire::WriteHeader(w, wire::Kind::kProof, wire::Scheme::kSigRange);
  PutPoint(w, bundle.c);
  PutRangeProof(w, bundle.proof.lower);
  PutRangeProof(w, bundle.proof.upper);
  return w.Take();
}

SigRangeBundle ParseBundle(const RangeParams& params, std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  wire::ReadHeader(r, wire::Kind::kProof, wire::Scheme::kSigRange);
  SigRangeBundle b;
  b.c = GetPoint(r);
  b.proof.lower = GetRangeProof(r, params.l);
  b.proof.upper = GetRangeProof(r, params.l);
  r.ExpectEnd();
  return b;
}

}  // namespace zkrange::sigrange
