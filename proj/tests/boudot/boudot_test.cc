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

#include "boudot/boudot.h"

#include <gtest/gtest.h>

#include "algebra/integer.h"
#include "errors.h"

namespace zkrange::boudot {
namespace {

using algebra::DeterministicRng;

class BoudotTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    DeterministicRng rng(2024);
    params_ = new BoudotParams(BoudotSetup(kTestModulusBits, rng));
  }
  static void TearDownTestSuite() {
    delete params_;
    params_ = nullptr;
  }

  const BoudotParams& p() const { return *params_; }
  const algebra::RsaGroup& grp() const { return params_->group(); }
  mpz_class Commit(const mpz_class& x, const mpz_class& r) const {
    return grp().Commit(p().fo.g, p().fo.h, x, r);
  }
  mpz_class RandomR() { return rng_.RandomInRange(1, p().fo.RandomnessHi()); }

  static BoudotParams* params_;
  DeterministicRng rng_{7};
};

BoudotParams* BoudotTest::params_ = nullptr;

// ---- same secret -----------------------------------------------------------

class SsTest : public BoudotTest {
 protected:
  // Independent pairs: (g, h) and (h^2, g).
  SsStatement Statement(const mpz_class& x, const mpz_class& r1, const mpz_class& r2,
                        const mpz_class& b) const {
    mpz_class g2 = grp().Mul(p().fo.h, p().fo.h);
    return {p().fo.g, p().fo.h, g2, p().fo.g, Commit(x, r1),
            grp().Commit(g2, p().fo.g, x, r2), b};
  }
};

TEST_F(SsTest, HonestAccepts) {
  mpz_class b = mpz_class(1) << 64;
  for (int i = 0; i < 100; ++i) {
    mpz_class x = rng_.RandomBelow(b);
    mpz_class r1 = RandomR(), r2 = RandomR();
    SsStatement st = Statement(x, r1, r2, b);
    SsProof proof = ProveSs(p(), st, x, r1, r2, rng_);
    ASSERT_TRUE(VerifySs(p(), st, proof)) << i;
  }
}

TEST_F(SsTest, ForgedSecondCommitmentRejects) {
  mpz_class b = 1000, x = 42, r1 = RandomR(), r2 = RandomR();
  SsStatement st = Statement(x, r1, r2, b);
  SsStatement forged = Statement(x + 1, r1, r2, b);
  forged.e = st.e;
  SsProof proof = ProveSs(p(), forged, x, r1, r2, rng_);
  EXPECT_FALSE(VerifySs(p(), forged, proof));
}

TEST_F(SsTest, TamperedResponseRejects) {
  mpz_class b = 1000, x = 42, r1 = RandomR(), r2 = RandomR();
  SsStatement st = Statement(x, r1, r2, b);
  SsProof proof = ProveSs(p(), st, x, r1, r2, rng_);
  SsProof bad = proof;
  bad.d += 1;
  EXPECT_FALSE(VerifySs(p(), st, bad));
  bad = proof;
  bad.d2 ^= 0x100;
  EXPECT_FALSE(VerifySs(p(), st, bad));
}

TEST_F(SsTest, SwappedCommitmentsReject) {
  mpz_class b = 1000, x = 42, r1 = RandomR(), r2 = RandomR();
  SsStatement st = Statement(x, r1, r2, b);
  SsProof proof = ProveSs(p(), st, x, r1, r2, rng_);
  SsStatement swapped = st;
  std::swap(swapped.e, swapped.f);
  EXPECT_FALSE(VerifySs(p(), swapped, proof));
}

TEST_F(SsTest, ChallengeOutOfRangeRejects) {
  mpz_class b = 1000, x = 1, r1 = RandomR(), r2 = RandomR();
  SsStatement st = Statement(x, r1, r2, b);
  SsProof proof = ProveSs(p(), st, x, r1, r2, rng_);
  proof.c += mpz_class(1) << (2 * p().t);
  EXPECT_FALSE(VerifySs(p(), st, proof));
}

// ---- square ----------------------------------------------------------------

TEST_F(BoudotTest, SquareOfZero) {
  mpz_class r = RandomR();
  mpz_class e = Commit(0, r);
  EXPECT_EQ(e, grp().Pow(p().fo.h, r));
  EXPECT_TRUE(VerifySquare(p(), e, 1, ProveSquare(p(), e, 0, r, 1, rng_)));
}

TEST_F(BoudotTest, SquareOfThree) {
  mpz_class r = RandomR();
  mpz_class e = Commit(9, r);
  EXPECT_TRUE(VerifySquare(p(), e, 4, ProveSquare(p(), e, 3, r, 4, rng_)));
}

TEST_F(BoudotTest, NonSquareRejects) {
  mpz_class r = RandomR();
  mpz_class e = Commit(10, r);
  EXPECT_FALSE(VerifySquare(p(), e, 4, ProveSquare(p(), e, 3, r, 4, rng_)));
}

TEST_F(BoudotTest, SquareRandom128) {
  mpz_class b = mpz_class(1) << 128;
  for (int i = 0; i < 10; ++i) {
    mpz_class x = rng_.RandomBelow(b), r = RandomR();
    mpz_class e = Commit(x * x, r);
    ASSERT_TRUE(VerifySquare(p(), e, b, ProveSquare(p(), e, x, r, b, rng_)));
  }
}

// ---- larger interval -------------------------------------------------------

TEST_F(BoudotTest, LargerIntervalEnds) {
  mpz_class b = 1000;
  for (mpz_class x : {mpz_class(0), b}) {
    mpz_class r = RandomR();
    mpz_class e = Commit(x, r);
    EXPECT_TRUE(VerifyLi(p(), e, b, ProveLi(p(), e, x, r, b, rng_))) << x.get_str();
  }
}

TEST_F(BoudotTest, LargerIntervalD1OutsideRejects) {
  mpz_class b = 1000, x = 500, r = RandomR();
  mpz_class e = Commit(x, r);
  LiProof proof = ProveLi(p(), e, x, r, b, rng_);
  ASSERT_TRUE(VerifyLi(p(), e, b, proof));
  LiProof high = proof;
  high.d1 = (mpz_class(1) << (p().t + p().l)) * b;
  EXPECT_FALSE(VerifyLi(p(), e, b, high));
  LiProof low = proof;
  low.d1 = -1;
  EXPECT_FALSE(VerifyLi(p(), e, b, low));
}

TEST_F(BoudotTest, LargerIntervalCapIsEnforced) {
  // A negative witness essentially never lands D1 in range.
  mpz_class b = 1000, x = -(mpz_class(1) << 300), r = RandomR();
  mpz_class e = Commit(x, r);
  try {
    ProveLi(p(), e, x, r, b, rng_, commit::Transcript("boudot/li/v1"), 8);
    FAIL() << "expected the iteration cap";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kInternal);
  }
}

// ---- with tolerance --------------------------------------------------------

TEST_F(BoudotTest, ToleranceEndpoints) {
  Range range{1000, 5000};
  mpz_class bound = p().fo.RandomnessHi() + 1;
  for (const mpz_class& x : {range.a, range.b}) {
    mpz_class r = RandomR();
    mpz_class e = Commit(x, r);
    WtProof proof = ProveWt(p(), range, e, x, r, bound, rng_);
    EXPECT_TRUE(VerifyWt(p(), range, e, proof)) << x.get_str();
  }
}

TEST_F(BoudotTest, ToleranceSubstitutedPieceRejects) {
  Range range{1000, 5000};
  mpz_class bound = p().fo.RandomnessHi() + 1;
  mpz_class x = 2345, r = RandomR();
  mpz_class e = Commit(x, r);
  WtProof proof = ProveWt(p(), range, e, x, r, bound, rng_);
  ASSERT_TRUE(VerifyWt(p(), range, e, proof));
  WtProof bad = proof;
  bad.e_a1 = grp().Mul(bad.e_a1, p().fo.g);
  EXPECT_FALSE(VerifyWt(p(), range, e, bad));
  bad = proof;
  bad.e_b1 = grp().Mul(bad.e_b1, p().fo.h);
  EXPECT_FALSE(VerifyWt(p(), range, e, bad));
}

TEST_F(BoudotTest, DecompositionIdentity) {
  for (int i = 0; i < 1000; ++i) {
    mpz_class a = rng_.RandomBits(40), b = a + rng_.RandomBits(60);
    mpz_class x = rng_.RandomInRange(a, b);
    mpz_class root = algebra::IsqrtFloor(x - a);
    mpz_class rem = x - a - root * root;
    ASSERT_EQ(root * root + rem, x - a);
    ASSERT_GE(rem, 0);
    ASSERT_LE(rem, 2 * root);
    mpz_class root_b = algebra::IsqrtFloor(b - x);
    mpz_class rem_b = b - x - root_b * root_b;
    ASSERT_GE(rem_b, 0);
    ASSERT_LE(rem_b, 2 * root_b);
  }
}

// ---- exact range -----------------------------------------------------------

TEST_F(BoudotTest, OverEighteen) {
  Range range{18, 200};
  BoudotBundle bundle = Prove(p(), range, 25, rng_);
  EXPECT_TRUE(Verify(p(), range, bundle));
  EXPECT_EQ(bundle.sd.t_exp, ScalingExponent(p(), range));
  EXPECT_EQ(bundle.sd.t_exp, 2u * (128 + 80 + 1) + 8);
}

TEST_F(BoudotTest, OutOfRangeWitnessRefused) {
  Range range{18, 200};
  for (int x : {17, 201}) {
    try {
      Prove(p(), range, x, rng_);
      FAIL() << x;
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::kWitnessOutOfRange);
    }
  }
}

TEST_F(BoudotTest, EdgeForgeriesReject) {
  for (int i = 0; i < 20; ++i) {
    mpz_class a = rng_.RandomBits(32);
    Range range{a, a + 1 + rng_.RandomBits(30)};
    mpz_class x = (i % 2 == 0) ? mpz_class(range.a - 1) : mpz_class(range.b + 1);
    mpz_class r = RandomR();
    mpz_class e = Commit(x, r);
    SdProof forged = testing::ProveSdUnchecked(p(), range, e, x, r, rng_, 8);
    ASSERT_FALSE(VerifySd(p(), range, e, forged)) << i;
  }
}

TEST_F(BoudotTest, Completeness) {
  for (int i = 0; i < 20; ++i) {
    mpz_class a = rng_.RandomBits(32) - (mpz_class(1) << 31);
    Range range{a, a + rng_.RandomBits(1 + i * 3)};
    mpz_class x = rng_.RandomInRange(range.a, range.b);
    BoudotBundle bundle = Prove(p(), range, x, rng_);
    ASSERT_TRUE(Verify(p(), range, bundle)) << i;
  }
}

TEST_F(BoudotTest, DegenerateRange) {
  Range range{77, 77};
  EXPECT_TRUE(Verify(p(), range, Prove(p(), range, 77, rng_)));
}

TEST_F(BoudotTest, WrongRangeOrScaleRejects) {
  Range range{18, 200};
  BoudotBundle bundle = Prove(p(), range, 25, rng_);
  EXPECT_FALSE(Verify(p(), Range{26, 200}, bundle));
  BoudotBundle bad = bundle;
  bad.sd.t_exp += 1;
  EXPECT_FALSE(Verify(p(), range, bad));
  bad = bundle;
  bad.sd.e_prime = grp().Mul(bad.sd.e_prime, p().fo.g);
  EXPECT_FALSE(Verify(p(), range, bad));
}

// ---- codec -----------------------------------------------------------------

TEST_F(BoudotTest, BundleRoundTripAndTamper) {
  Range range{18, 200};
  BoudotBundle bundle = Prove(p(), range, 99, rng_);
  std::vector<uint8_t> bytes = SerializeBundle(p(), bundle);
  BoudotBundle parsed = ParseBundle(p(), bytes);
  EXPECT_EQ(SerializeBundle(p(), parsed), bytes);
  EXPECT_TRUE(Verify(p(), range, parsed));

  for (int i = 0; i < 50; ++i) {
    std::vector<uint8_t> t = bytes;
    size_t pos = rng_.RandomBelow(t.size()).get_ui();
    t[pos] ^= static_cast<uint8_t>(1 + rng_.RandomBelow(255).get_ui());
    bool accepted = false;
    try {
      accepted = Verify(p(), range, ParseBundle(p(), t));
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::kMalformed);
    }
    ASSERT_FALSE(accepted) << "flip at " << pos;
  }

  std::vector<uint8_t> longer = bytes;
  longer.push_back(0);
  EXPECT_THROW(ParseBundle(p(), longer), Error);
  std::vector<uint8_t> shorter(bytes.begin(), bytes.end() - 1);
  EXPECT_THROW(ParseBundle(p(), shorter), Error);
}

TEST_F(BoudotTest, ParamsRoundTrip) {
  std::vector<uint8_t> bytes = SerializeParams(p());
  BoudotParams q = ParseParams(bytes);
  EXPECT_EQ(q.group().n(), grp().n());
  EXPECT_EQ(q.fo.g, p().fo.g);
  EXPECT_EQ(q.fo.h, p().fo.h);
  EXPECT_EQ(q.t, 128);
  EXPECT_EQ(q.l, 80);
  EXPECT_EQ(q.s(), 80);
  EXPECT_EQ(SerializeParams(q), bytes);
  Range range{18, 200};
  EXPECT_TRUE(Verify(q, range, Prove(p(), range, 30, rng_)));
}

}  // namespace
}  // namespace zkrange::boudot
