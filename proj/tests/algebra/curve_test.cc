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

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/obj_mac.h>

#include <vector>

#include "algebra/point_codec.h"
#include "algebra/rng.h"
#include "algebra/secp256k1.h"
#include "errors.h"
#include "gtest/gtest.h"

namespace zkrange::algebra {
namespace {

using secp256k1::Point;
using secp256k1::Scalar;

// Scalar multiplication of the base point computed by OpenSSL.
CompressedPoint OpenSslMulBase(const Scalar& k) {
  EC_GROUP* group = EC_GROUP_new_by_curve_name(NID_secp256k1);
  EC_POINT* r = EC_POINT_new(group);
  BN_CTX* ctx = BN_CTX_new();
  auto kb = k.ToBytes();
  BIGNUM* bn = BN_bin2bn(kb.data(), static_cast<int>(kb.size()), nullptr);
  EC_POINT_mul(group, r, bn, nullptr, nullptr, ctx);
  CompressedPoint out{};
  if (!EC_POINT_is_at_infinity(group, r)) {
    EC_POINT_point2oct(group, r, POINT_CONVERSION_COMPRESSED, out.data(), out.size(), ctx);
  }
  BN_free(bn);
  BN_CTX_free(ctx);
  EC_POINT_free(r);
  EC_GROUP_free(group);
  return out;
}

TEST(Secp256k1Test, GeneratorOnCurve) {
  secp256k1::Fp x, y;
  secp256k1::Generator().ToAffine(x, y);
  EXPECT_TRUE(Point::IsOnCurve(x, y));
  EXPECT_TRUE(secp256k1::Generator().Mul(secp256k1::ScalarTag::kModulus).IsIdentity());
}

TEST(Secp256k1Test, ScalarMulMatchesOpenSsl) {
  DeterministicRng rng(11);
  std::vector<Scalar> ks = {Scalar::One(), Scalar::FromU64(2), Scalar::FromU64(15),
                            Scalar::FromU64(16), -Scalar::One()};
  for (int i = 0; i < 25; ++i) ks.push_back(Scalar::Random(rng));
  for (const auto& k : ks) {
    EXPECT_EQ(EncodePoint(secp256k1::Generator() * k), OpenSslMulBase(k));
  }
}

TEST(Secp256k1Test, GroupLaw) {
  DeterministicRng rng(12);
  const Point& g = secp256k1::Generator();
  for (int i = 0; i < 10; ++i) {
    Scalar a = Scalar::Random(rng);
    Scalar b = Scalar::Random(rng);
    EXPECT_EQ(g * a + g * b, g * (a + b));
    EXPECT_EQ((g * a) * b, g * (a * b));
    EXPECT_TRUE((g * a - g * a).IsIdentity());
    EXPECT_EQ(g * a + g * a, (g * a).Double());
  }
  EXPECT_EQ(g + Point::Identity(), g);
  EXPECT_TRUE((g * Scalar::Zero()).IsIdentity());
}

TEST(PointCodecTest, RoundTripAndRejects) {
  DeterministicRng rng(13);
  for (int i = 0; i < 10; ++i) {
    Point p = secp256k1::Generator() * Scalar::Random(rng);
    auto enc = EncodePoint(p);
    EXPECT_EQ(DecodePoint<secp256k1::Curve>(enc), p);
  }
  CompressedPoint zero{};
  EXPECT_THROW(DecodePoint<secp256k1::Curve>(zero), Error);
  EXPECT_TRUE(DecodePoint<secp256k1::Curve>(zero, true).IsIdentity());
  auto enc = EncodePoint(secp256k1::Generator());
  enc[0] = 0x04;
  EXPECT_THROW(DecodePoint<secp256k1::Curve>(enc), Error);
  // x = 5 has no point on the curve (5^3 + 7 = 132 is a non-residue).
  CompressedPoint bad{};
  bad[0] = 0x02;
  bad[32] = 5;
  EXPECT_THROW(DecodePoint<secp256k1::Curve>(bad), Error);
  CompressedPoint big{};
  big[0] = 0x02;
  std::fill(big.begin() + 1, big.end(), 0xff);
  EXPECT_THROW(DecodePoint<secp256k1::Curve>(big), Error);
}

TEST(PointCodecTest, BatchToAffineMatchesSingle) {
  DeterministicRng rng(14);
  std::vector<Point> pts;
  for (int i = 0; i < 6; ++i) pts.push_back(secp256k1::Generator() * Scalar::Random(rng));
  pts.push_back(Point::Identity());
  std::vector<secp256k1::Fp> xs, ys;
  std::vector<bool> inf;
  BatchToAffine<secp256k1::Curve>(pts, xs, ys, inf);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    secp256k1::Fp x, y;
    pts[i].ToAffine(x, y);
    EXPECT_EQ(xs[i], x);
    EXPECT_EQ(ys[i], y);
    EXPECT_FALSE(inf[i]);
  }
  EXPECT_TRUE(inf.back());
}

}  // namespace
}  // namespace zkrange::algebra
