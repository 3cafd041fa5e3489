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

// Square-decomposition range proof over a Fujisaki-Okamoto commitment:
// same-secret, square, larger-interval, with-tolerance, and the exact-range
// composition.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "algebra/codec.h"
#include "algebra/rng.h"
#include "algebra/rsa_group.h"
#include "commit/commitment.h"
#include "commit/transcript.h"

namespace zkrange::boudot {

inline constexpr int kDefaultModulusBits = 2048;
inline constexpr int kTestModulusBits = 512;
inline constexpr int kMaxLiIterations = 1 << 16;

struct BoudotParams {
  commit::FoParams fo;  // n, g, h and s
  int t = 128;
  int l = 80;
  int s1 = 80;
  int s2 = 80;

  const algebra::RsaGroup& group() const { return fo.group; }
  int s() const { return fo.s; }
};

// Fresh safe-prime modulus. Sizes below 2048 bits are for tests only.
BoudotParams BoudotSetup(int modulus_bits, algebra::Rng& rng);
BoudotParams BoudotFromModulus(const algebra::RsaModulus& modulus, algebra::Rng& rng);

std::vector<uint8_t> SerializeParams(const BoudotParams& p);
BoudotParams ParseParams(std::span<const uint8_t> bytes);

// Closed interval [a, b].
struct Range {
  mpz_class a, b;
};

struct SsProof {
  mpz_class c;  // 2t bits
  mpz_class d, d1, d2;
};

struct SquareProof {
  mpz_class f;
  SsProof ss;
};

struct LiProof {
  mpz_class big_c;  // 2t bits; c = C mod 2^t
  mpz_class d1, d2;
};

struct OpeningProof {
  mpz_class c;  // 2t bits
  mpz_class d, d1;
};

struct WtProof {
  mpz_class e_a1, e_a2, e_b1, e_b2;
  SquareProof s_a, s_b;
  LiProof li_a, li_b;
  OpeningProof opening;
};

struct SdProof {
  mpz_class e_prime;
  WtProof wt;
  uint32_t t_exp = 0;  // T
};

// Commitment E together with its range proof.
struct BoudotBundle {
  mpz_class e;
  SdProof sd;
};

// ---- building blocks -------------------------------------------------------

// E = g1^x h1^r1 and F = g2^x h2^r2 with 0 <= x < b.
struct SsStatement {
  mpz_class g1, h1, g2, h2, e, f;
  mpz_class b;
};

SsProof ProveSs(const BoudotParams& p, const SsStatement& st, const mpz_class& x,
                const mpz_class& r1, const mpz_class& r2, algebra::Rng& rng,
                commit::Transcript t = commit::Transcript("boudot/ss/v1"));
bool VerifySs(const BoudotParams& p, const SsStatement& st, const SsProof& proof,
              commit::Transcript t = commit::Transcript("boudot/ss/v1"));

// E = g^(x^2) h^r1 with 0 <= x < b.
SquareProof ProveSquare(const BoudotParams& p, const mpz_class& e, const mpz_class& x,
                        const mpz_class& r1, const mpz_class& b, algebra::Rng& rng,
                        commit::Transcript t = commit::Transcript("boudot/sq/v1"));
bool VerifySquare(const BoudotParams& p, const mpz_class& e, const mpz_class& b,
                  const SquareProof& proof,
                  commit::Transcript t = commit::Transcript("boudot/sq/v1"));

// E = g^x h^r with x in [0, b]; proves x in [-2^(t+l) b, 2^(t+l) b].
LiProof ProveLi(const BoudotParams& p, const mpz_class& e, const mpz_class& x,
                const mpz_class& r, const mpz_class& b, algebra::Rng& rng,
                commit::Transcript t = commit::Transcript("boudot/li/v1"),
                int max_iterations = kMaxLiIterations);
bool VerifyLi(const BoudotParams& p, const mpz_class& e, const mpz_class& b,
              const LiProof& proof, commit::Transcript t = commit::Transcript("boudot/li/v1"));

// Knowledge of (x, r) with E = g^x h^r, |x| <= bx, |r| <= br.
OpeningProof ProveOpening(const BoudotParams& p, const mpz_class& e, const mpz_class& x,
                          const mpz_class& r, const mpz_class& bx, const mpz_class& br,
                          algebra::Rng& rng,
                          commit::Transcript t = commit::Transcript("boudot/open/v1"));
bool VerifyOpening(const BoudotParams& p, const mpz_class& e, const OpeningProof& proof,
                   commit::Transcript t = commit::Transcript("boudot/open/v1"));

// x in [a - theta, b + theta], theta = 2^(t+l+1) sqrt(b - a). `r_bound`
// bounds |r|; split randomness is sampled in (-r_bound, r_bound).
WtProof ProveWt(const BoudotParams& p, const Range& range, const mpz_class& e,
                const mpz_class& x, const mpz_class& r, const mpz_class& r_bound,
                algebra::Rng& rng, commit::Transcript t = commit::Transcript("boudot/wt/v1"));
bool VerifyWt(const BoudotParams& p, const Range& range, const mpz_class& e,
              const WtProof& proof, commit::Transcript t = commit::Transcript("boudot/wt/v1"));

// T = 2(t + l + 1) + bitlen(b - a).
uint32_t ScalingExponent(const BoudotParams& p, const Range& range);

// ---- exact range -----------------------------------------------------------

// Requires x in [a, b]; otherwise kWitnessOutOfRange.
SdProof ProveSd(const BoudotParams& p, const Range& range, const mpz_class& e,
                const mpz_class& x, const mpz_class& r, algebra::Rng& rng);
bool VerifySd(const BoudotParams& p, const Range& range, const mpz_class& e,
              const SdProof& proof);

// Commits to x with fresh randomness and proves x in [a, b].
BoudotBundle Prove(const BoudotParams& p, const Range& range, const mpz_class& x,
                   algebra::Rng& rng);
bool Verify(const BoudotParams& p, const Range& range, const BoudotBundle& bundle);

std::vector<uint8_t> SerializeBundle(const BoudotParams& p, const BoudotBundle& bundle);
// Throws kMalformed on any framing or element error.
BoudotBundle ParseBundle(const BoudotParams& p, std::span<const uint8_t> bytes);

namespace testing {

// Prover without the range precondition, for soundness tests. The
// decomposition of a negative offset uses x1 = 0, x2 = offset, and the
// larger-interval loop stops after `li_iterations` attempts.
SdProof ProveSdUnchecked(const BoudotParams& p, const Range& range, const mpz_class& e,
                         const mpz_class& x, const mpz_class& r, algebra::Rng& rng,
                         int li_iterations = 64);

}  // namespace testing

}  // namespace zkrange::boudot
