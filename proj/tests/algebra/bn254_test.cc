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

#include <vector>

#include "algebra/bn254.h"
#include "algebra/point_codec.h"
#include "algebra/rng.h"
#include "errors.h"
#include "gtest/gtest.h"

namespace zkrange::algebra::bn254 {
namespace {

Fp12 RandomFp12(Rng& rng) {
  Fp12 f;
  for (auto& c : f.c) c = {Fp::Random(rng), Fp::Random(rng)};
  return f;
}

TEST(Bn254Test, GeneratorsInPrimeOrderGroups) {
  Fp x, y;
  G1Generator().ToAffine(x, y);
  EXPECT_TRUE(G1::IsOnCurve(x, y));
  EXPECT_TRUE(G1Generator().Mul(FrTag::kModulus).IsIdentity());
  EXPECT_TRUE(IsInG2(G2Generator()));
  EXPECT_FALSE(G2Generator().IsIdentity());
}

TEST(Bn254Test, Fp12FieldAxioms) {
  DeterministicRng rng(20);
  for (int i = 0; i < 5; ++i) {
    Fp12 a = RandomFp12(rng), b = RandomFp12(rng), c = RandomFp12(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a.Square(), a * a);
    EXPECT_TRUE((a * a.Inverse()).IsOne());
    // Frobenius is the p-th power map.
    EXPECT_EQ(a.Frobenius(), a.Pow(FieldModulus()));
    // w -> -w is the p^6-th power map.
    mpz_class p6;
    mpz_pow_ui(p6.get_mpz_t(), FieldModulus().get_mpz_t(), 6);
    EXPECT_EQ(a.Conjugate(), a.Pow(p6));
  }
}

TEST(Bn254Test, FinalExponentiationMatchesNaivePower) {
  DeterministicRng rng(21);
  mpz_class p12;
  mpz_pow_ui(p12.get_mpz_t(), FieldModulus().get_mpz_t(), 12);
  mpz_class e = (p12 - 1) / GroupOrder();
  ASSERT_EQ(e * GroupOrder(), p12 - 1);
  for (int i = 0; i < 2; ++i) {
    Fp12 f = RandomFp12(rng);
    EXPECT_EQ(FinalExponentiation(f), f.Pow(e));
  }
}

TEST(Bn254Test, CyclotomicSquareMatchesSquare) {
  DeterministicRng rng(25);
  for (int i = 0; i < 10; ++i) {
    // (p^6 - 1)(p^2 + 1) power lands in the cyclotomic subgroup.
    Fp12 f = RandomFp12(rng);
    Fp12 g = f.Conjugate() * f.Inverse();
    g = g.FrobeniusSquare() * g;
    EXPECT_EQ(g.CyclotomicSquare(), g.Square());
    EXPECT_EQ(g.CyclotomicSquare().CyclotomicSquare(), g.Square().Square());
  }
  // A generic element is outside the subgroup and the shortcut differs.
  Fp12 f = RandomFp12(rng);
  EXPECT_NE(f.CyclotomicSquare(), f.Square());
}

TEST(Bn254Test, PreparedMatchesPlainPairing) {
  DeterministicRng rng(26);
  for (int i = 0; i < 3; ++i) {
    G1 p1 = G1Generator() * Fr::Random(rng), p2 = G1Generator() * Fr::Random(rng);
    G2 q1 = G2Generator() * Fr::Random(rng), q2 = G2Generator() * Fr::Random(rng);
    G2Prepared a(q1), b(q2);
    std::vector<G1> ps = {p1, p2};
    std::vector<G2> qs = {q1, q2};
    std::vector<const G2Prepared*> prep = {&a, &b};
    EXPECT_EQ(MultiPairing(ps, prep), Pairing(p1, q1) * Pairing(p2, q2));
    EXPECT_EQ(MultiPairing(ps, prep), MultiPairing(ps, qs));
  }
  G2Prepared id(G2::Identity());
  EXPECT_TRUE(id.IsIdentity());
  std::vector<G1> ps = {G1Generator()};
  std::vector<const G2Prepared*> prep = {&id};
  EXPECT_TRUE(MultiPairing(ps, prep).IsIdentity());
}

TEST(Bn254Test, PairingBilinearAndNonDegenerate) {
  DeterministicRng rng(22);
  const G1& p = G1Generator();
  const G2& q = G2Generator();
  Gt base = Pairing(p, q);
  EXPECT_FALSE(base.IsIdentity());
  EXPECT_TRUE(base.value().PowLimbs(FrTag::kModulus).IsOne());
  for (int i = 0; i < 2; ++i) {
    Fr a = Fr::Random(rng), b = Fr::Random(rng);
    Gt lhs = Pairing(p * a, q * b);
    EXPECT_EQ(lhs, base.Pow(a * b));
    EXPECT_EQ(Pairing(p * (a * b), q), lhs);
  }
  EXPECT_TRUE(Pairing(G1::Identity(), q).IsIdentity());
  EXPECT_TRUE(Pairing(p, G2::Identity()).IsIdentity());
  EXPECT_EQ(Pairing(-p, q), base.Inverse());
}

TEST(Bn254Test, MultiPairingIsProduct) {
  DeterministicRng rng(23);
  std::vector<G1> ps;
  std::vector<G2> qs;
  Gt expect;
  for (int i = 0; i < 3; ++i) {
    ps.push_back(G1Generator() * Fr::Random(rng));
    qs.push_back(G2Generator() * Fr::Random(rng));
    expect = expect * Pairing(ps.back(), qs.back());
  }
  EXPECT_EQ(MultiPairing(ps, qs), expect);
  // e(aP, Q) * e(-P, aQ) = 1
  Fr a = Fr::Random(rng);
  std::vector<G1> ps2 = {G1Generator() * a, -G1Generator()};
  std::vector<G2> qs2 = {G2Generator(), G2Generator() * a};
  EXPECT_TRUE(MultiPairing(ps2, qs2).IsIdentity());
}

TEST(Bn254Test, GtCompressionRoundTrip) {
  DeterministicRng rng(24);
  Gt base = Pairing(G1Generator(), G2Generator());
  for (int i = 0; i < 4; ++i) {
    Gt g = base.Pow(Fr::Random(rng));
    auto enc = g.Encode();
    EXPECT_EQ(Gt::Decode(enc), g);
  }
  auto id = Gt::Identity().Encode();
  EXPECT_TRUE(Gt::Decode(id).IsIdentity());
  auto enc = base.Encode();
  enc[100] ^= 1;
  EXPECT_THROW(Gt::Decode(enc), Error);
}

TEST(Bn254Test, G2CodecRoundTripAndRejects) {
  DeterministicRng rng(25);
  G2 q = G2Generator() * Fr::Random(rng);
  auto enc = EncodeG2(q);
  EXPECT_EQ(DecodeG2(enc), q);
  enc[127] ^= 1;
  EXPECT_THROW(DecodeG2(enc), Error);
}

TEST(Bn254Test, G1CompressedCodec) {
  DeterministicRng rng(26);
  G1 p = G1Generator() * Fr::Random(rng);
  EXPECT_EQ(DecodePoint<G1Curve>(EncodePoint(p)), p);
}

}  // namespace
}  // namespace zkrange::algebra::bn254
