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

#include "commit/commitment.h"

namespace zkrange::commit {

const Secp256k1Pedersen& DefaultSecp256k1Pedersen() {
  static const Secp256k1Pedersen p{
      algebra::secp256k1::Generator(),
      algebra::MapToGroup<algebra::secp256k1::Curve>(kPedersenHLabel)};
  return p;
}

const Bn254Pedersen& DefaultBn254Pedersen() {
  static const Bn254Pedersen p{algebra::bn254::G1Generator(),
                               algebra::MapToGroup<algebra::bn254::G1Curve>(kPairingHLabel)};
  return p;
}

FoParams FoSetup(const algebra::RsaModulus& modulus, algebra::Rng& rng, int s) {
  algebra::RsaGroup group(modulus.n);
  mpz_class h = group.RandomSquare(rng);
  mpz_class g;
  do {
    mpz_class e = 1 + rng.RandomBelow(modulus.n - 1);
    g = group.Pow(h, e);
  } while (g == 1 || g == h);
  return FoParams{group, g, h, s};
}

FoCommitment FoCommit(const FoParams& params, const mpz_class& m, algebra::Rng& rng) {
  mpz_class r = rng.RandomInRange(1, params.RandomnessHi());
  return {params.Commit(m, r), r};
}

}  // namespace zkrange::commit
