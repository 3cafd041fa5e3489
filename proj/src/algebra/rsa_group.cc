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

#include "algebra/rsa_group.h"

#include "errors.h"

namespace zkrange::algebra {

RsaModulus GenRsaModulus(int bits, Rng& rng, const SafePrimeOptions& opts) {
  ZKR_ENFORCE(bits >= 8 && bits % 2 == 0, ErrorCode::kInvalidArgument,
              "RSA modulus size must be even");
  for (;;) {
    mpz_class p = GenSafePrime(bits / 2, rng, opts);
    mpz_class q = GenSafePrime(bits / 2, rng, opts);
    if (p == q) continue;
    mpz_class n = p * q;
    if (static_cast<int>(BitLength(n)) != bits) continue;
    return {n, bits};
  }
}

mpz_class RsaGroup::Pow(const mpz_class& base, const mpz_class& e) const {
  mpz_class r;
  if (e < 0) {
    mpz_class inv = Inverse(base);
    mpz_class ne = -e;
    mpz_powm(r.get_mpz_t(), inv.get_mpz_t(), ne.get_mpz_t(), n_.get_mpz_t());
  } else {
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), n_.get_mpz_t());
  }
  return r;
}

mpz_class RsaGroup::Mul(const mpz_class& a, const mpz_class& b) const {
  mpz_class r = a * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n_.get_mpz_t());
  return r;
}

mpz_class RsaGroup::Inverse(const mpz_class& a) const {
  mpz_class r;
  ZKR_ENFORCE(mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n_.get_mpz_t()) != 0,
              ErrorCode::kInvalidArgument, "element not invertible mod n");
  return r;
}

bool RsaGroup::IsElement(const mpz_class& v) const {
  if (v < 1 || v >= n_) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), n_.get_mpz_t());
  return g == 1;
}

mpz_class RsaGroup::RandomSquare(Rng& rng) const {
  for (;;) {
    mpz_class v = rng.RandomBelow(n_);
    if (!IsElement(v)) continue;
    mpz_class s = Mul(v, v);
    if (s != 1) return s;
  }
}

mpz_class RsaGroup::Decode(ByteReader& r) const {
  mpz_class v = r.GetNatural((mpz_sizeinbase(n_.get_mpz_t(), 2) + 7) / 8);
  ZKR_ENFORCE(IsElement(v), ErrorCode::kMalformed, "not an element of Z_n*");
  return v;
}

}  // namespace zkrange::algebra
