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

#include "commit/transcript.h"

#include "algebra/codec.h"

namespace zkrange::commit {

namespace {

void PutU32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 3; i >= 0; --i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void PutString(std::vector<uint8_t>& out, std::string_view s) {
  PutU32(out, static_cast<uint32_t>(s.size()));
  out.insert(out.end(), s.begin(), s.end());
}

}  // namespace

void Transcript::AbsorbLabel(std::string_view s) { PutString(buffer_, s); }

void Transcript::AbsorbU32(uint32_t v) { PutU32(buffer_, v); }

void Transcript::AbsorbNatural(const mpz_class& v) {
  algebra::ByteWriter w;
  w.PutNatural(v);
  Absorb(w.bytes());
}

void Transcript::AbsorbSigned(const mpz_class& v) {
  algebra::ByteWriter w;
  w.PutSigned(v);
  Absorb(w.bytes());
}

algebra::Digest Transcript::Digest(std::string_view clabel, uint32_t ctr) const {
  std::vector<uint8_t> msg;
  msg.reserve(label_.size() + buffer_.size() + clabel.size() + 12);
  PutString(msg, label_);
  msg.insert(msg.end(), buffer_.begin(), buffer_.end());
  PutString(msg, clabel);
  PutU32(msg, ctr);
  return algebra::Sha256(msg);
}

mpz_class Transcript::ChallengeBits(std::string_view clabel, size_t bits) {
  std::vector<uint8_t> stream;
  for (uint32_t ctr = 0; stream.size() * 8 < bits; ++ctr) {
    auto d = Digest(clabel, ctr);
    stream.insert(stream.end(), d.begin(), d.end());
  }
  mpz_class v = algebra::MpzFromBytes(stream);
  v >>= stream.size() * 8 - bits;
  AbsorbLabel(clabel);
  AbsorbNatural(v);
  return v;
}

}  // namespace zkrange::commit
