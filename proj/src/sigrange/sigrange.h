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

// Set-membership and u-ary range proofs from blinded Boneh-Boyen signatures
// on BN254. Signatures and blinded signatures live in G1, the verification
// key in G2; commitments are Pedersen in G1.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "algebra/bn254.h"
#include "algebra/rng.h"
#include "commit/commitment.h"
#include "commit/transcript.h"

namespace zkrange::sigrange {

using algebra::bn254::Fr;
using algebra::bn254::G1;
using algebra::bn254::G2;
using algebra::bn254::Gt;

// ---- Boneh-Boyen -----------------------------------------------------------

struct BbKeyPair {
  Fr x;  // secret
  G2 y;  // g2^x
};

BbKeyPair BbKeyGen(algebra::Rng& rng);
// g1^(1/(x+m)); kInvalidArgument "unsignable message" when x + m = 0.
G1 BbSign(const Fr& x, const Fr& m);
// e(sigma, y g2^m) == e(g1, g2).
bool BbVerify(const G2& y, const Fr& m, const G1& sigma);

// ---- set membership --------------------------------------------------------

struct SmParams {
  G2 y;
  std::vector<Fr> elements;
  std::vector<G1> signatures;  // signatures[i] signs elements[i]
};

// Fresh key, one signature per element; the key is discarded.
SmParams SetupSm(std::span<const Fr> set, algebra::Rng& rng);

struct SmProof {
  G1 v;
  Gt a;
  G1 d;
  Fr z_delta, z_tau, z_gamma;
  Fr c;
};

// C = g^delta h^gamma. kInvalidArgument "not a member" if delta is not in the set.
SmProof ProveSm(const SmParams& params, const G1& c, const Fr& delta, const Fr& gamma,
                algebra::Rng& rng);
bool VerifySm(const SmParams& params, const G1& c, const SmProof& proof);

// ---- range [0, u^l) --------------------------------------------------------

inline constexpr uint32_t kMaxBase = 1u << 16;
inline constexpr uint32_t kMaxDigits = 64;

struct RangeParams {
  uint32_t u = 0;
  uint32_t l = 0;
  G2 y;
  std::vector<G1> table;  // table[i] = g1^(1/(x+i)), i in [0, u)

  mpz_class Capacity() const;  // u^l
};

RangeParams SetupRange(uint32_t u, uint32_t l, algebra::Rng& rng);
// All table entries pass BbVerify.
bool ValidateTable(const RangeParams& params);

// Little-endian base-u digits of delta; requires 0 <= delta < u^l.
std::vector<uint32_t> Digits(const mpz_class& delta, uint32_t u, uint32_t l);

struct RangeProof {
  std::vector<G1> v;
  std::vector<Gt> a;
  G1 d;
  Fr c;
  Fr z_gamma;
  std::vector<Fr> z_delta;
  std::vector<Fr> z_tau;
};

RangeProof ProveRange(const RangeParams& params, const G1& c, const mpz_class& delta,
                      const Fr& gamma, algebra::Rng& rng,
                      commit::Transcript t = commit::Transcript("ccs/rp/v1"));
bool VerifyRange(const RangeParams& params, const G1& c, const RangeProof& proof,
                 commit::Transcript t = commit::Transcript("ccs/rp/v1"));

// ---- arbitrary half-open range [a, b) --------------------------------------

struct Range {
  mpz_class a, b;
};

// delta - a in [0, u^l) on C / g^a, and delta - b + u^l in [0, u^l) on
// C g^(u^l - b).
struct ArbitraryProof {
  RangeProof lower;
  RangeProof upper;
};

ArbitraryProof ProveArbitrary(const RangeParams& params, const Range& range, const G1& c,
                              const mpz_class& delta, const Fr& gamma, algebra::Rng& rng);
bool VerifyArbitrary(const RangeParams& params, const Range& range, const G1& c,
                     const ArbitraryProof& proof);

// Commitment together with its proof.
struct SigRangeBundle {
  G1 c;
  ArbitraryProof proof;
};

SigRangeBundle Prove(const RangeParams& params, const Range& range, const mpz_class& delta,
                     algebra::Rng& rng);
bool Verify(const RangeParams& params, const Range& range, const SigRangeBundle& bundle);

// ---- sizes and parameter choice --------------------------------------------

// Serialized octets of one RangeProof with l digits.
size_t RangeProofBytes(uint32_t l);
// Serialized octets of a bundle with l digits (header, C, two proofs).
size_t BundleBytes(uint32_t l);

struct BaseDigits {
  uint32_t u;
  uint32_t l;
};

// Minimizes bundle size plus signature-table size (33 octets per digit value)
// over l in [1, 64] with u = max(2, ceil(width^(1/l))). Ties go to smaller l.
BaseDigits OptimalParams(const mpz_class& a, const mpz_class& b);

// ---- codec -----------------------------------------------------------------

std::vector<uint8_t> SerializeParams(const RangeParams& params);
// Also validates every table signature.
RangeParams ParseParams(std::span<const uint8_t> bytes);

std::vector<uint8_t> SerializeBundle(const SigRangeBundle& bundle);
SigRangeBundle ParseBundle(const RangeParams& params, std::span<const uint8_t> bytes);

}  // namespace zkrange::sigrange
