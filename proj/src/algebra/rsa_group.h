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

#include "algebra/codec.h"
#include "algebra/integer.h"
#include "algebra/rng.h"

namespace zkrange::algebra {

// n = p' q' for safe primes p', q'. The factors are not retained.
struct RsaModulus {
  mpz_class n;
  int bits = 0;
};

RsaModulus GenRsaModulus(int bits, Rng& rng, const SafePrimeOptions& opts = {});

// Arithmetic in Z_n^*. Exponents are signed integers.
class RsaGroup {
 public:
  explicit RsaGroup(mpz_class n) : n_(std::move(n)) {}

  const mpz_class& n() const { return n_; }

  mpz_class Pow(const mpz_class& base, const mpz_class& e) const;
  mpz_class Mul(const mpz_class& a, const mpz_class& b) const;
  mpz_class Inverse(const mpz_class& a) const;
  mpz_class Div(const mpz_class& a, const mpz_class& b) const { return Mul(a, Inverse(b)); }
  // g^x h^r
  mpz_class Commit(const mpz_class& g, const mpz_class& h, const mpz_class& x,
                   const mpz_class& r) const {
    return Mul(Pow(g, x), Pow(h, r));
  }

  // 1 <= v < n and gcd(v, n) = 1.
  bool IsElement(const mpz_class& v) const;
  // Uniform unit, squared: lands in the subgroup of quadratic residues.
  mpz_class RandomSquare(Rng& rng) const;

  void Encode(ByteWriter& w, const mpz_class& v) const { w.PutNatural(v); }
  // Rejects anything outside Z_n^*.
  mpz_class Decode(ByteReader& r) const;

 private:
  mpz_class n_;
};

}  // namespace zkrange::algebra
