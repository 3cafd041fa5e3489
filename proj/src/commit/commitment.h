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

#include <span>
#include <vector>

#include "algebra/bn254.h"
#include "algebra/map_to_group.h"
#include "algebra/multiexp.h"
#include "algebra/rng.h"
#include "algebra/rsa_group.h"
#include "algebra/secp256k1.h"
#include "errors.h"

namespace zkrange::commit {

inline constexpr const char* kPedersenHLabel = "zkrange/h/v1";
inline constexpr const char* kPairingHLabel = "zkrange/sigrange/h/v1";

// Pedersen commitment g^m h^r in a prime-order curve group.
template <class Curve, class Scalar>
struct PedersenParams {
  using Point = algebra::JacobianPoint<Curve>;
  Point g, h;

  Point Commit(const Scalar& m, const Scalar& r) const {
    std::vector<Point> bases = {g, h};
    std::vector<Scalar> exps = {m, r};
    return algebra::MultiExp<Curve, Scalar>(bases, exps);
  }
  bool Open(const Point& c, const Scalar& m, const Scalar& r) const {
    return Commit(m, r) == c;
  }
};

using Secp256k1Pedersen = PedersenParams<algebra::secp256k1::Curve, algebra::secp256k1::Scalar>;
using Bn254Pedersen = PedersenParams<algebra::bn254::G1Curve, algebra::bn254::Fr>;

// g = standard generator, h = MapToGroup("zkrange/h/v1").
const Secp256k1Pedersen& DefaultSecp256k1Pedersen();
// g = G1 generator, h = MapToGroup on BN254 G1 ("zkrange/sigrange/h/v1").
const Bn254Pedersen& DefaultBn254Pedersen();

// prod g_i^a_i * prod h_i^b_i as one multi-exponentiation.
template <class Curve, class Scalar>
algebra::JacobianPoint<Curve> VectorCommit(std::span<const algebra::JacobianPoint<Curve>> gvec,
                                           std::span<const algebra::JacobianPoint<Curve>> hvec,
                                           std::span<const Scalar> a,
                                           std::span<const Scalar> b) {
  ZKR_ENFORCE(!gvec.empty() && gvec.size() == hvec.size() && gvec.size() == a.size() &&
                  a.size() == b.size(),
              ErrorCode::kInvalidArgument, "vector commitment length mismatch");
  std::vector<algebra::JacobianPoint<Curve>> bases(gvec.begin(), gvec.end());
  bases.insert(bases.end(), hvec.begin(), hvec.end());
  std::vector<Scalar> exps(a.begin(), a.end());
  exps.insert(exps.end(), b.begin(), b.end());
  return algebra::MultiExp<Curve, Scalar>(bases, exps);
}

// Fujisaki-Okamoto commitment g^m h^r mod n over a safe-prime RSA modulus.
struct FoParams {
  algebra::RsaGroup group;
  mpz_class g, h;
  int s = 80;

  // Randomness interval [2^-s n + 1, 2^s n - 1]; the lower end is 1 since
  // 2^-s n < 1 is never an integer bound.
  mpz_class RandomnessHi() const { return (group.n() << s) - 1; }
  mpz_class Commit(const mpz_class& m, const mpz_class& r) const {
    return group.Commit(g, h, m, r);
  }
  bool Open(const mpz_class& c, const mpz_class& m, const mpz_class& r) const {
    return Commit(m, r) == c;
  }
};

struct FoCommitment {
  mpz_class element;
  mpz_class r;
};

// h random square, g = h^e with e discarded.
FoParams FoSetup(const algebra::RsaModulus& modulus, algebra::Rng& rng, int s = 80);

FoCommitment FoCommit(const FoParams& params, const mpz_class& m, algebra::Rng& rng);

}  // namespace zkrange::commit
