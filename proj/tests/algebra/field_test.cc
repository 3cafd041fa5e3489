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

#include <gmpxx.h>

#include "algebra/bn254.h"
#include "algebra/rng.h"
#include "algebra/secp256k1.h"
#include "errors.h"
#include "gtest/gtest.h"

namespace zkrange::algebra {
namespace {

template <class F>
class MontFieldTest : public ::testing::Test {};

using FieldTypes = ::testing::Types<secp256k1::Fp, secp256k1::Scalar, bn254::Fp, bn254::Fr>;
TYPED_TEST_SUITE(MontFieldTest, FieldTypes);

TYPED_TEST(MontFieldTest, MatchesMpzArithmetic) {
  using F = TypeParam;
  DeterministicRng rng(7);
  const mpz_class& p = F::Modulus();
  for (int i = 0; i < 200; ++i) {
    mpz_class a = rng.RandomBelow(p);
    mpz_class b = rng.RandomBelow(p);
    F fa = F::FromMpz(a);
    F fb = F::FromMpz(b);
    EXPECT_EQ((fa + fb).ToMpz(), mpz_class((a + b) % p));
    EXPECT_EQ((fa - fb).ToMpz(), mpz_class(((a - b) % p + p) % p));
    EXPECT_EQ((fa * fb).ToMpz(), mpz_class((a * b) % p));
    if (b != 0) EXPECT_EQ((fa * fb.Inverse()).ToMpz() * b % p, a);
  }
}

TYPED_TEST(MontFieldTest, EdgeValues) {
  using F = TypeParam;
  mpz_class pm1 = F::Modulus() - 1;
  F m1 = F::FromMpz(pm1);
  EXPECT_TRUE((m1 + F::One()).IsZero());
  EXPECT_EQ((m1 * m1).ToMpz(), 1);
  EXPECT_EQ(F::FromI64(-5).ToMpz(), F::Modulus() - 5);
  EXPECT_TRUE(F::Zero().IsZero());
  EXPECT_TRUE(F::One().IsOne());
}

TYPED_TEST(MontFieldTest, BytesRoundTripAndCanonicity) {
  using F = TypeParam;
  DeterministicRng rng(8);
  for (int i = 0; i < 20; ++i) {
    F a = F::Random(rng);
    auto b = a.ToBytes();
    EXPECT_EQ(F::FromBytes(b), a);
  }
  auto pb = LimbsToBytesBE(F::kModulus);
  EXPECT_THROW(F::FromBytes(pb), Error);
  std::array<uint8_t, 31> shortb{};
  EXPECT_THROW(F::FromBytes(shortb), Error);
}

TYPED_TEST(MontFieldTest, PowAndSqrt) {
  using F = TypeParam;
  DeterministicRng rng(9);
  for (int i = 0; i < 20; ++i) {
    F a = F::RandomNonZero(rng);
    mpz_class e = rng.RandomBits(200);
    mpz_class expect;
    mpz_powm(expect.get_mpz_t(), a.ToMpz().get_mpz_t(), e.get_mpz_t(),
             F::Modulus().get_mpz_t());
    EXPECT_EQ(a.Pow(e).ToMpz(), expect);
    EXPECT_EQ(a.Pow(LimbsFromMpz(e)).ToMpz(), expect);
    EXPECT_EQ(a.Pow(mpz_class(-e)) * a.Pow(e), F::One());
  }
}

TEST(FieldSqrt, PrimeFieldsCongruentThreeModFour) {
  DeterministicRng rng(10);
  int roots = 0;
  for (int i = 0; i < 50; ++i) {
    secp256k1::Fp a = secp256k1::Fp::Random(rng);
    secp256k1::Fp s;
    bool ok = a.Sqrt(s);
    int legendre = mpz_legendre(a.ToMpz().get_mpz_t(), secp256k1::Fp::Modulus().get_mpz_t());
    EXPECT_EQ(ok, legendre >= 0);
    EXPECT_EQ(a.IsSquare(), legendre >= 0);
    if (ok) {
      EXPECT_EQ(s.Square(), a);
      ++roots;
    }
    bn254::Fp b = bn254::Fp::Random(rng);
    bn254::Fp t;
    if (b.Sqrt(t)) EXPECT_EQ(t.Square(), b);
  }
  EXPECT_GT(roots, 10);
}

TEST(DeterministicRngTest, ReproducibleAndBounded) {
  DeterministicRng a(42), b(42), c(43);
  EXPECT_EQ(a.NextU64(), b.NextU64());
  EXPECT_NE(a.NextU64(), c.NextU64());
  mpz_class bound("1000000007");
  for (int i = 0; i < 100; ++i) {
    mpz_class v = a.RandomBelow(bound);
    EXPECT_GE(v, 0);
    EXPECT_LT(v, bound);
    mpz_class w = a.RandomInRange(-3, 3);
    EXPECT_GE(w, -3);
    EXPECT_LE(w, 3);
  }
}

}  // namespace
}  // namespace zkrange::algebra
