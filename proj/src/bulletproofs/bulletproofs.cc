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

#include "bulletproofs/bulletproofs.h"

#include <bit>
#include <string>

#include "algebra/codec.h"
#include "algebra/map_to_group.h"
#include "algebra/multiexp.h"
#include "algebra/point_codec.h"
#include "commit/commitment.h"
#include "errors.h"
#include "wire.h"

namespace zkrange::bulletproofs {

namespace {

using algebra::ByteReader;
using algebra::ByteWriter;
using algebra::Rng;
using algebra::secp256k1::Curve;
using commit::Transcript;

Point MultiExp(std::span<const Point> bases, std::span<const Scalar> exps) {
  return algebra::MultiExp<Curve, Scalar>(bases, exps);
}

bool IsPowerOfTwo(size_t n) { return n != 0 && (n & (n - 1)) == 0; }
size_t Log2(size_t n) { return static_cast<size_t>(std::countr_zero(n)); }

std::vector<Scalar> Powers(const Scalar& k, size_t n) {
  std::vector<Scalar> out(n);
  Scalar acc = Scalar::One();
  for (size_t i = 0; i < n; ++i) {
    out[i] = acc;
    acc = acc * k;
  }
  return out;
}

void AbsorbIpStatement(Transcript& t, size_t n, const Point& p, const Scalar& c) {
  t.AbsorbLabel("ip");
  t.AbsorbU32(static_cast<uint32_t>(n));
  t.AbsorbPoint(p);
  t.AbsorbScalar(c);
}

// Round challenges x_j; false on shape errors.
bool IpChallenges(size_t n, const Point& p, const Scalar& c, const IpProof& proof,
                  Transcript& t, Scalar& w, std::vector<Scalar>& xs) {
  if (!IsPowerOfTwo(n) || proof.ls.size() != Log2(n) || proof.rs.size() != proof.ls.size()) {
    return false;
  }
  AbsorbIpStatement(t, n, p, c);
  w = t.ChallengeScalar<Scalar>("w");
  xs.clear();
  for (size_t j = 0; j < proof.ls.size(); ++j) {
    t.AbsorbPoint(proof.ls[j]);
    t.AbsorbPoint(proof.rs[j]);
    xs.push_back(t.ChallengeScalar<Scalar>("x"));
  }
  return true;
}

// hscale empty means all ones.
bool VerifyIpMultiexpScaled(std::span<const Point> gvec, std::span<const Point> hvec,
                            std::span<const Scalar> hscale, const Point& u, const Point& p,
                            const Scalar& c, const IpProof& proof, Transcript& t) {
  size_t n = gvec.size();
  if (hvec.size() != n) return false;
  Scalar w;
  std::vector<Scalar> xs;
  if (!IpChallenges(n, p, c, proof, t, w, xs)) return false;
  std::vector<Scalar> s = FoldExponents(xs, n);

  std::vector<Point> bases;
  std::vector<Scalar> exps;
  size_t k = xs.size();
  bases.reserve(2 * n + 2 * k + 2);
  exps.reserve(2 * n + 2 * k + 2);
  for (size_t i = 0; i < n; ++i) {
    bases.push_back(gvec[i]);
    exps.push_back(proof.a * s[i]);
  }
  for (size_t i = 0; i < n; ++i) {
    bases.push_back(hvec[i]);
    Scalar e = proof.b * s[n - 1 - i];  // s_i^-1
    exps.push_back(hscale.empty() ? e : e * hscale[i]);
  }
  bases.push_back(u);
  exps.push_back(w * (proof.a * proof.b - c));
  bases.push_back(p);
  exps.push_back(-Scalar::One());
  for (size_t j = 0; j < k; ++j) {
    Scalar x2 = xs[j].Square();
    bases.push_back(proof.ls[j]);
    exps.push_back(-x2);
    bases.push_back(proof.rs[j]);
    exps.push_back(-x2.Inverse());
  }
  return MultiExp(bases, exps).IsIdentity();
}

Transcript RpTranscript(const BulletproofParams& params, const RpProof& proof) {
  Transcript t("bp/rp/v1");
  t.AbsorbU32(static_cast<uint32_t>(params.n));
  t.AbsorbPoint(params.g);
  t.AbsorbPoint(params.h);
  t.AbsorbPoint(params.u);
  t.AbsorbPoint(proof.v);
  return t;
}

// y^-i for i < n, 1 on the padding.
std::vector<Scalar> HPrimeScale(const Scalar& y, size_t n, size_t m) {
  std::vector<Scalar> out = Powers(y.Inverse(), n);
  out.resize(m, Scalar::One());
  return out;
}

void PutPoint(ByteWriter& w, const Point& p) { w.PutBytes(algebra::EncodePoint(p)); }
Point GetPoint(ByteReader& r) {
  return algebra::DecodePoint<Curve>(r.GetBytes(algebra::kCompressedPointBytes));
}
void PutScalar(ByteWriter& w, const Scalar& s) { w.PutBytes(s.ToBytes()); }
Scalar GetScalar(ByteReader& r) { return Scalar::FromBytes(r.GetBytes(Scalar::kBytes)); }

}  // namespace

// ---- setup -----------------------------------------------------------------

Generators ComputeGenerators(size_t n) {
  ZKR_ENFORCE(n >= 1 && n <= kMaxIpLength, ErrorCode::kInvalidArgument, "bad generator count");
  const auto& ped = commit::DefaultSecp256k1Pedersen();
  Generators gens{ped.g, ped.h, {}, {}};
  for (size_t i = 0; i < n; ++i) {
    gens.gvec.push_back(algebra::MapToGroup<Curve>("bp/g/" + std::to_string(i)));
    gens.hvec.push_back(algebra::MapToGroup<Curve>("bp/h/" + std::to_string(i)));
  }
  return gens;
}

BulletproofParams SetupRpBits(size_t n) {
  ZKR_ENFORCE(n >= 1 && n <= kMaxRangeBits, ErrorCode::kInvalidArgument,
              "range bit length out of bounds");
  Generators gens = ComputeGenerators(std::bit_ceil(n));
  BulletproofParams params;
  params.g = gens.g;
  params.h = gens.h;
  params.gvec = std::move(gens.gvec);
  params.hvec = std::move(gens.hvec);
  params.u = algebra::MapToGroup<Curve>("bp/u/v1");
  params.n = n;
  return params;
}

BulletproofParams SetupRp(const mpz_class& a, const mpz_class& b) {
  ZKR_ENFORCE(a == 0, ErrorCode::kUnsupported, "only ranges [0, 2^n) are supported");
  ZKR_ENFORCE(b > 0 && mpz_popcount(b.get_mpz_t()) == 1, ErrorCode::kInvalidArgument,
              "b must be a power of 2");
  size_t n = mpz_sizeinbase(b.get_mpz_t(), 2) - 1;
  ZKR_ENFORCE(n >= 1, ErrorCode::kInvalidArgument, "b must be at least 2");
  return SetupRpBits(n);
}

Scalar DeltaYz(const Scalar& y, const Scalar& z, size_t n) {
  Scalar sum_y = Scalar::Zero(), acc = Scalar::One();
  for (size_t i = 0; i < n; ++i) {
    sum_y = sum_y + acc;
    acc = acc * y;
  }
  mpz_class two_n = (mpz_class(1) << n) - 1;  // <1^n, 2^n>
  Scalar z2 = z.Square();
  return (z - z2) * sum_y - z2 * z * Scalar::FromMpz(two_n);
}

Scalar InnerProduct(std::span<const Scalar> a, std::span<const Scalar> b) {
  ZKR_ENFORCE(a.size() == b.size(), ErrorCode::kInvalidArgument, "length mismatch");
  Scalar acc = Scalar::Zero();
  for (size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

// ---- inner-product argument ------------------------------------------------

IpProof ProveIp(std::span<const Point> gvec_in, std::span<const Point> hvec_in, const Point& u,
                const Point& p, const Scalar& c, std::vector<Scalar> a, std::vector<Scalar> b,
                Transcript& t) {
  size_t n = gvec_in.size();
  ZKR_ENFORCE(IsPowerOfTwo(n), ErrorCode::kInvalidArgument, "length must be a power of two");
  ZKR_ENFORCE(hvec_in.size() == n && a.size() == n && b.size() == n,
              ErrorCode::kInvalidArgument, "length mismatch");
  std::vector<Point> g(gvec_in.begin(), gvec_in.end());
  std::vector<Point> h(hvec_in.begin(), hvec_in.end());
  AbsorbIpStatement(t, n, p, c);
  Point uw = u * t.ChallengeScalar<Scalar>("w");

  IpProof proof;
  while (n > 1) {
    size_t half = n / 2;
    std::span<const Scalar> a_lo(a.data(), half), a_hi(a.data() + half, half);
    std::span<const Scalar> b_lo(b.data(), half), b_hi(b.data() + half, half);
    Scalar c_l = InnerProduct(a_lo, b_hi);
    Scalar c_r = InnerProduct(a_hi, b_lo);

    std::vector<Point> bases;
    std::vector<Scalar> exps;
    bases.insert(bases.end(), g.begin() + half, g.begin() + n);
    bases.insert(bases.end(), h.begin(), h.begin() + half);
    bases.push_back(uw);
    exps.insert(exps.end(), a_lo.begin(), a_lo.end());
    exps.insert(exps.end(), b_hi.begin(), b_hi.end());
    exps.push_back(c_l);
    Point l = MultiExp(bases, exps);

    bases.clear();
    exps.clear();
    bases.insert(bases.end(), g.begin(), g.begin() + half);
    bases.insert(bases.end(), h.begin() + half, h.begin() + n);
    bases.push_back(uw);
    exps.insert(exps.end(), a_hi.begin(), a_hi.end());
    exps.insert(exps.end(), b_lo.begin(), b_lo.end());
    exps.push_back(c_r);
    Point r = MultiExp(bases, exps);

    proof.ls.push_back(l);
    proof.rs.push_back(r);
    t.AbsorbPoint(l);
    t.AbsorbPoint(r);
    Scalar x = t.ChallengeScalar<Scalar>("x");
    Scalar xi = x.Inverse();

    for (size_t i = 0; i < half; ++i) {
      g[i] = g[i] * xi + g[half + i] * x;
      h[i] = h[i] * x + h[half + i] * xi;
      a[i] = a[i] * x + a[half + i] * xi;
      b[i] = b[i] * xi + b[half + i] * x;
    }
    n = half;
  }
  proof.a = a[0];
  proof.b = b[0];
  return proof;
}

bool VerifyIp(std::span<const Point> gvec, std::span<const Point> hvec, const Point& u,
              const Point& p, const Scalar& c, const IpProof& proof, Transcript& t) {
  size_t n = gvec.size();
  if (hvec.size() != n) return false;
  Scalar w;
  std::vector<Scalar> xs;
  if (!IpChallenges(n, p, c, proof, t, w, xs)) return false;
  Point uw = u * w;
  Point pp = p + uw * c;
  std::vector<Point> g(gvec.begin(), gvec.end());
  std::vector<Point> h(hvec.begin(), hvec.end());
  for (size_t j = 0; j < xs.size(); ++j) {
    size_t half = n / 2;
    Scalar x = xs[j], xi = x.Inverse();
    for (size_t i = 0; i < half; ++i) {
      g[i] = g[i] * xi + g[half + i] * x;
      h[i] = h[i] * x + h[half + i] * xi;
    }
    Scalar x2 = x.Square();
    pp = proof.ls[j] * x2 + pp + proof.rs[j] * x2.Inverse();
    n = half;
  }
  return pp == g[0] * proof.a + h[0] * proof.b + uw * (proof.a * proof.b);
}

bool VerifyIpMultiexp(std::span<const Point> gvec, std::span<const Point> hvec, const Point& u,
                      const Point& p, const Scalar& c, const IpProof& proof, Transcript& t) {
  return VerifyIpMultiexpScaled(gvec, hvec, {}, u, p, c, proof, t);
}

std::vector<Scalar> FoldExponents(std::span<const Scalar> xs, size_t n) {
  size_t k = xs.size();
  ZKR_ENFORCE(IsPowerOfTwo(n) && Log2(n) == k, ErrorCode::kInvalidArgument,
              "challenge count must be log2(n)");
  std::vector<Scalar> s(n);
  Scalar s0 = Scalar::One();
  for (const Scalar& x : xs) s0 = s0 * x;
  s[0] = s0.Inverse();
  for (size_t i = 1; i < n; ++i) {
    // Highest set bit of i at position pos belongs to round k - 1 - pos.
    size_t pos = std::bit_width(i) - 1;
    s[i] = s[i - (size_t{1} << pos)] * xs[k - 1 - pos].Square();
  }
  return s;
}

// ---- range proof -----------------------------------------------------------

namespace internal {

BitVectors MakeBitVectors(const mpz_class& v, size_t n, Rng& rng) {
  BitVectors bv;
  for (size_t i = 0; i < n; ++i) {
    bool bit = mpz_tstbit(v.get_mpz_t(), i);
    bv.a_l.push_back(bit ? Scalar::One() : Scalar::Zero());
    bv.a_r.push_back(bit ? Scalar::Zero() : -Scalar::One());
    bv.s_l.push_back(Scalar::Random(rng));
    bv.s_r.push_back(Scalar::Random(rng));
  }
  return bv;
}

TPoly ComputeT(const BitVectors& bv, const Scalar& y, const Scalar& z) {
  size_t n = bv.a_l.size();
  std::vector<Scalar> yn = Powers(y, n), twos = Powers(Scalar::FromU64(2), n);
  Scalar z2 = z.Square();
  TPoly tp{Scalar::Zero(), Scalar::Zero(), Scalar::Zero()};
  for (size_t i = 0; i < n; ++i) {
    Scalar l0 = bv.a_l[i] - z;
    Scalar r0 = yn[i] * (bv.a_r[i] + z) + z2 * twos[i];
    Scalar ys_r = yn[i] * bv.s_r[i];
    tp.t0 = tp.t0 + l0 * r0;
    tp.t1 = tp.t1 + l0 * ys_r + bv.s_l[i] * r0;
    tp.t2 = tp.t2 + bv.s_l[i] * ys_r;
  }
  return tp;
}

void EvaluateLR(const BitVectors& bv, const Scalar& y, const Scalar& z, const Scalar& x,
                std::vector<Scalar>& l, std::vector<Scalar>& r) {
  size_t n = bv.a_l.size();
  std::vector<Scalar> yn = Powers(y, n), twos = Powers(Scalar::FromU64(2), n);
  Scalar z2 = z.Square();
  l.resize(n);
  r.resize(n);
  for (size_t i = 0; i < n; ++i) {
    l[i] = bv.a_l[i] - z + bv.s_l[i] * x;
    r[i] = yn[i] * (bv.a_r[i] + z + bv.s_r[i] * x) + z2 * twos[i];
  }
}

}  // namespace internal

RpProof ProveRp(const BulletproofParams& params, const mpz_class& v, Rng& rng) {
  size_t n = params.n, m = params.m();
  ZKR_ENFORCE(v >= 0 && v < (mpz_class(1) << n), ErrorCode::kWitnessOutOfRange,
              "witness out of range");
  const Point& g = params.g;
  const Point& h = params.h;
  RpProof proof;
  Scalar gamma = Scalar::Random(rng);
  proof.v = g * Scalar::FromMpz(v) + h * gamma;

  internal::BitVectors bv = internal::MakeBitVectors(v, n, rng);
  Scalar alpha = Scalar::Random(rng), rho = Scalar::Random(rng);
  std::span<const Point> gn(params.gvec.data(), n), hn(params.hvec.data(), n);
  std::vector<Point> bases(gn.begin(), gn.end());
  bases.insert(bases.end(), hn.begin(), hn.end());
  bases.push_back(h);
  auto commit_pair = [&](const std::vector<Scalar>& x1, const std::vector<Scalar>& x2,
                         const Scalar& blind) {
    std::vector<Scalar> exps(x1);
    exps.insert(exps.end(), x2.begin(), x2.end());
    exps.push_back(blind);
    return MultiExp(bases, exps);
  };
  proof.a = commit_pair(bv.a_l, bv.a_r, alpha);
  proof.s = commit_pair(bv.s_l, bv.s_r, rho);

  Transcript t = RpTranscript(params, proof);
  t.AbsorbPoint(proof.a);
  t.AbsorbPoint(proof.s);
  Scalar y = t.ChallengeScalar<Scalar>("y");
  Scalar z = t.ChallengeScalar<Scalar>("z");

  internal::TPoly tp = internal::ComputeT(bv, y, z);
  Scalar tau1 = Scalar::Random(rng), tau2 = Scalar::Random(rng);
  proof.t1 = g * tp.t1 + h * tau1;
  proof.t2 = g * tp.t2 + h * tau2;
  t.AbsorbPoint(proof.t1);
  t.AbsorbPoint(proof.t2);
  Scalar x = t.ChallengeScalar<Scalar>("x");

  std::vector<Scalar> l, r;
  internal::EvaluateLR(bv, y, z, x, l, r);
  proof.t_hat = InnerProduct(l, r);
  proof.tau_x = tau2 * x.Square() + tau1 * x + z.Square() * gamma;
  proof.mu = alpha + rho * x;
  t.AbsorbScalar(proof.tau_x);
  t.AbsorbScalar(proof.mu);
  t.AbsorbScalar(proof.t_hat);

  std::vector<Scalar> scale = HPrimeScale(y, n, m);
  std::vector<Point> hprime(m);
  for (size_t i = 0; i < m; ++i) hprime[i] = i < n ? params.hvec[i] * scale[i] : params.hvec[i];
  l.resize(m, Scalar::Zero());
  r.resize(m, Scalar::Zero());
  std::vector<Point> pb(params.gvec);
  pb.insert(pb.end(), hprime.begin(), hprime.end());
  std::vector<Scalar> pe(l);
  pe.insert(pe.end(), r.begin(), r.end());
  Point p = MultiExp(pb, pe);
  proof.ip = ProveIp(params.gvec, hprime, params.u, p, proof.t_hat, std::move(l), std::move(r), t);
  return proof;
}

RpVerdict VerifyRpDetailed(const BulletproofParams& params, const RpProof& proof,
                           IpVerifier mode) {
  size_t n = params.n, m = params.m();
  const Point& g = params.g;
  const Point& h = params.h;
  Transcript t = RpTranscript(params, proof);
  t.AbsorbPoint(proof.a);
  t.AbsorbPoint(proof.s);
  Scalar y = t.ChallengeScalar<Scalar>("y");
  Scalar z = t.ChallengeScalar<Scalar>("z");
  t.AbsorbPoint(proof.t1);
  t.AbsorbPoint(proof.t2);
  Scalar x = t.ChallengeScalar<Scalar>("x");
  t.AbsorbScalar(proof.tau_x);
  t.AbsorbScalar(proof.mu);
  t.AbsorbScalar(proof.t_hat);

  RpVerdict verdict;
  Scalar z2 = z.Square(), x2 = x.Square();
  {
    std::vector<Point> bases = {g, h, proof.v, proof.t1, proof.t2};
    std::vector<Scalar> exps = {proof.t_hat - DeltaYz(y, z, n), proof.tau_x, -z2, -x, -x2};
    verdict.poly_ok = MultiExp(bases, exps).IsIdentity();
  }

  // P = A S^x g^-z h^(z + z^2 2^i y^-i) h^-mu over the first n positions.
  std::vector<Scalar> scale = HPrimeScale(y, n, m);
  std::vector<Point> bases = {proof.a, proof.s, h};
  std::vector<Scalar> exps = {Scalar::One(), x, -proof.mu};
  Scalar two_i = Scalar::One(), two = Scalar::FromU64(2);
  for (size_t i = 0; i < n; ++i) {
    bases.push_back(params.gvec[i]);
    exps.push_back(-z);
    bases.push_back(params.hvec[i]);
    exps.push_back(z + z2 * two_i * scale[i]);
    two_i = two_i * two;
  }
  Point p = MultiExp(bases, exps);

  if (mode == IpVerifier::kMultiexp) {
    verdict.ip_ok = VerifyIpMultiexpScaled(params.gvec, params.hvec, scale, params.u, p,
                                           proof.t_hat, proof.ip, t);
  } else {
    std::vector<Point> hprime(m);
    for (size_t i = 0; i < m; ++i) hprime[i] = i < n ? params.hvec[i] * scale[i] : params.hvec[i];
    verdict.ip_ok = VerifyIp(params.gvec, hprime, params.u, p, proof.t_hat, proof.ip, t);
  }
  return verdict;
}

bool VerifyRp(const BulletproofParams& params, const RpProof& proof, IpVerifier mode) {
  return VerifyRpDetailed(params, proof, mode).ok();
}

// ---- codec -----------------------------------------------------------------

size_t ProofSize(size_t n) {
  size_t rounds = Log2(std::bit_ceil(n));
  return wire::kHeaderBytes + 4 + (2 * rounds + 5) * algebra::kCompressedPointBytes +
         5 * Scalar::kBytes + 2 * 4;
}

size_t ProofSize(const RpProof& proof) {
  return wire::kHeaderBytes + 4 + (proof.ip.ls.size() + proof.ip.rs.size() + 5) *
         algebra::kCompressedPointBytes + 5 * Scalar::kBytes + 2 * 4;
}

std::vector<uint8_t> SerializeProof(const BulletproofParams& params, const RpProof& proof) {
  ByteWriter w;
  wire::WriteHeader(w, wire::Kind::kProof, wire::Scheme::kBulletproofs);
  w.PutU32(static_cast<uint32_t>(params.n));
  for (const Point* p : {&proof.v, &proof.a, &proof.s, &proof.t1, &proof.t2}) PutPoint(w, *p);
  PutScalar(w, proof.tau_x);
  PutScalar(w, proof.mu);
  PutScalar(w, proof.t_hat);
  w.PutU32(static_cast<uint32_t>(proof.ip.ls.size()));
  for (const auto& l : proof.ip.ls) PutPoint(w, l);
  w.PutU32(static_cast<uint32_t>(proof.ip.rs.size()));
  for (const auto& r : proof.ip.rs) PutPoint(w, r);
  PutScalar(w, proof.ip.a);
  PutScalar(w, proof.ip.b);
  return w.Take();
}

RpProof ParseProof(const BulletproofParams& params, std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  wire::ReadHeader(r, wire::Kind::kProof, wire::Scheme::kBulletproofs);
  ZKR_ENFORCE(r.GetU32() == params.n, ErrorCode::kMalformed, "bit length mismatch");
  RpProof proof;
  for (Point* p : {&proof.v, &proof.a, &proof.s, &proof.t1, &proof.t2}) *p = GetPoint(r);
  proof.tau_x = GetScalar(r);
  proof.mu = GetScalar(r);
  proof.t_hat = GetScalar(r);
  size_t rounds = Log2(params.m());
  ZKR_ENFORCE(r.GetU32() == rounds, ErrorCode::kMalformed, "bad L count");
  for (size_t j = 0; j < rounds; ++j) proof.ip.ls.push_back(GetPoint(r));
  ZKR_ENFORCE(r.GetU32() == rounds, ErrorCode::kMalformed, "bad R count");
  for (size_t j = 0; j < rounds; ++j) proof.ip.rs.push_back(GetPoint(r));
  proof.ip.a = GetScalar(r);
  proof.ip.b = GetScalar(r);
  r.ExpectEnd();
  return proof;
}

std::vector<uint8_t> SerializeParams(const BulletproofParams& params) {
  ByteWriter w;
  wire::WriteHeader(w, wire::Kind::kParams, wire::Scheme::kBulletproofs);
  w.PutU32(static_cast<uint32_t>(params.n));
  return w.Take();
}

BulletproofParams ParseParams(std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  wire::ReadHeader(r, wire::Kind::kParams, wire::Scheme::kBulletproofs);
  uint32_t n = r.GetU32();
  r.ExpectEnd();
  ZKR_ENFORCE(n >= 1 && n <= kMaxRangeBits, ErrorCode::kMalformed, "bad bit length");
  return SetupRpBits(n);
}

}  // namespace zkrange::bulletproofs
