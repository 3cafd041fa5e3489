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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algebra/point_codec.h"
#include "algebra/sha256.h"

namespace zkrange::commit {

// Running Fiat-Shamir transcript. Every challenge hashes
//   BE32(|label|) || label || buffer || BE32(|clabel|) || clabel || BE32(ctr)
// and is then appended to the buffer (with its label), so later challenges
// bind earlier ones. Copying a transcript forks it.
class Transcript {
 public:
  explicit Transcript(std::string_view label) : label_(label) {}

  void Absorb(std::span<const uint8_t> bytes) {
    buffer_.insert(buffer_.end(), bytes.begin(), bytes.end());
  }
  void AbsorbLabel(std::string_view s);
  void AbsorbU32(uint32_t v);
  // BE32 length + magnitude, v >= 0.
  void AbsorbNatural(const mpz_class& v);
  void AbsorbSigned(const mpz_class& v);

  template <class Curve>
  void AbsorbPoint(const algebra::JacobianPoint<Curve>& p) {
    Absorb(algebra::EncodePoint(p));
  }
  template <class Field>
  void AbsorbScalar(const Field& s) {
    Absorb(s.ToBytes());
  }

  // Non-zero scalar; zero digests are re-derived with the next counter.
  template <class Field>
  Field ChallengeScalar(std::string_view clabel) {
    for (uint32_t ctr = 0;; ++ctr) {
      Field c = Field::FromBytesWide(Digest(clabel, ctr));
      if (c.IsZero()) continue;
      AbsorbLabel(clabel);
      AbsorbScalar(c);
      return c;
    }
  }

  // Uniform `bits`-bit integer: counter-mode digests, big-endian, truncated.
  mpz_class ChallengeBits(std::string_view clabel, size_t bits);

  const std::vector<uint8_t>& buffer() const { return buffer_; }

 private:
  algebra::Digest Digest(std::string_view clabel, uint32_t ctr) const;

  std::string label_;
  std::vector<uint8_t> buffer_;
};

}  // namespace zkrange::commit
