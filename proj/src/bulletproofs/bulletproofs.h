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

// Bulletproofs range proofs for [0, 2^n) on secp256k1: NUMS generators, the
// recursive inner-product argument with a folding verifier and a single
// multi-exponentiation verifier, and the range-proof argument.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "algebra/rng.h"
#include "algebra/secp256k1.h"
#include "commit/transcript.h"

namespace zkrange::bulletproofs {

using algebra::secp256k1::Point;
using algebra::secp256k1::Scalar;

inline constexpr size_t kMaxIpLength = 1 << 12;
inline constexpr size_t kMaxRangeBits = 128;

struct Generators {
  Point g, h;
  std::vector<Point> gvec, hvec;
};

// g: standard generator; h: MapToGroup("zkrange/h/v1"); gvec[i], hvec[i]:
// MapToGroup("bp/g/<i>"), MapToGroup("bp/h/<i>"), i from 0.
Generators ComputeGenerators(size_t n);

// gvec and hvec have length m = n rounded up to a power of two; the padding
// positions carry zero vector entries.
struct BulletproofParams {
  Point g, h;
  std::vector<Point> gvec, hvec;
  Point u;  // MapToGroup("bp/u/v1")
  size_t n = 0;
  size_t m() const { return gvec.size(); }
};

// Range [a, b) with a = 0 and b = 2^n. Errors: "b must be a power of 2"
// (kInvalidArgument); a != 0 is kUnsupported.
BulletproofParams SetupRp(const mpz_class& a, const mpz_class& b);
BulletproofParams SetupRpBits(size_t n);

// (z - z^2) <1^n, y^n> - z^3 <1^n, 2^n>.
Scalar DeltaYz(const Scalar& y, const Scalar& z, size_t n);
Scalar InnerProduct(std::span<const Scalar> a, std::span<const Scalar> b);

// ---- inner-product argument ------------------------------------------------

struct IpProof {
  std::vector<Point> ls, rs;
  Scalar a, b;
};

// Proves knowledge of a, b with P = gvec^a hvec^b and <a, b> = c. The first
// challenge w scales u to u^w; rounds use x_j = Hash(L_j, R_j).
IpProof ProveIp(std::span<const Point> gvec, std::span<const Point> hvec, const Point& u,
                const Point& p, const Scalar& c, std::vector<Scalar> a, std::vector<Scalar> b,
                commit::Transcript& t);
// Folds the generators round by round.
bool VerifyIp(std::span<const Point> gvec, std::span<const Point> hvec, const Point& u,
              const Point& p, const Scalar& c, const IpProof& proof, commit::Transcript& t);
// One multi-exponentiation of size 2n + 2 log2(n) + 2.
bool VerifyIpMultiexp(std::span<const Point> gvec, std::span<const Point> hvec, const Point& u,
                      const Point& p, const Scalar& c, const IpProof& proof,
                      commit::Transcript& t);
// s_i = prod_j x_j^(+1 if bit j of i, counted from the top, is set, else -1).
std::vector<Scalar> FoldExponents(std::span<const Scalar> xs, size_t n);

// ---- range proof -----------------------------------------------------------

struct RpProof {
  Point v, a, s, t1, t2;
  Scalar tau_x, mu, t_hat;
  IpProof ip;
};

enum class IpVerifier { kFolding, kMultiexp };

struct RpVerdict {
  bool poly_ok = false;  // t_hat equation
  // Inner-product argument against P = A S^x g^-z h'^(z y^n + z^2 2^n) h^-mu,
  // which also covers the commitment consistency of A and S.
  bool ip_ok = false;
  bool ok() const { return poly_ok && ip_ok; }
};

// V = g^v h^gamma with fresh gamma. kWitnessOutOfRange unless 0 <= v < 2^n.
RpProof ProveRp(const BulletproofParams& params, const mpz_class& v, algebra::Rng& rng);
RpVerdict VerifyRpDetailed(const BulletproofParams& params, const RpProof& proof,
                           IpVerifier mode = IpVerifier::kMultiexp);
bool VerifyRp(const BulletproofParams& params, const RpProof& proof,
              IpVerifier mode = IpVerifier::kMultiexp);

// Exact serialized octets for an n-bit proof: 2 ceil(log2 n) + 5 points,
// 5 scalars, header, n and the two counts.
size_t ProofSize(size_t n);
size_t ProofSize(const RpProof& proof);

std::vector<uint8_t> SerializeProof(const BulletproofParams& params, const RpProof& proof);
// kMalformed on framing errors or an n that differs from the parameters.
RpProof ParseProof(const BulletproofParams& params, std::span<const uint8_t> bytes);

std::vector<uint8_t> SerializeParams(const BulletproofParams& params);
// Parameters are derived, so only n travels; generators are recomputed.
BulletproofParams ParseParams(std::span<const uint8_t> bytes);

namespace internal {

// Prover-side vectors before blinding.
struct BitVectors {
  std::vector<Scalar> a_l, a_r, s_l, s_r;
};

BitVectors MakeBitVectors(const mpz_class& v, size_t n, algebra::Rng& rng);

struct TPoly {
  Scalar t0, t1, t2;
};

// t0 = <a_L - z 1, y^n o (a_R + z 1) + z^2 2^n>,
// t1 = <a_L - z 1, y^n o s_R> + <s_L, y^n o (a_R + z 1) + z^2 2^n>,
// t2 = <s_L, y^n o s_R>.
TPoly ComputeT(const BitVectors& bv, const Scalar& y, const Scalar& z);
// l = a_L - z 1 + s_L x, r = y^n o (a_R + z 1 + s_R x) + z^2 2^n.
void EvaluateLR(const BitVectors& bv, const Scalar& y, const Scalar& z, const Scalar& x,
                std::vector<Scalar>& l, std::vector<Scalar>& r);

}  // namespace internal

}  // namespace zkrange::bulletproofs
