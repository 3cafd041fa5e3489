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

#include "algebra/codec.h"

#include "errors.h"

namespace zkrange::algebra {

std::vector<uint8_t> MpzToBytes(const mpz_class& v) {
  size_t n = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  if (v == 0) return {};
  std::vector<uint8_t> out(n);
  size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, v.get_mpz_t());
  out.resize(written);
  return out;
}

mpz_class MpzFromBytes(std::span<const uint8_t> b) {
  mpz_class v;
  if (!b.empty()) mpz_import(v.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
  return v;
}

std::string ToHex(std::span<const uint8_t> b) {
  static const char* kDigits = "0123456789abcdef";
  std::string s;
  s.reserve(2 * b.size());
  for (uint8_t c : b) {
    s.push_back(kDigits[c >> 4]);
    s.push_back(kDigits[c & 15]);
  }
  return s;
}

void ByteWriter::PutU32(uint32_t v) {
  for (int i = 3; i >= 0; --i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::PutNatural(const mpz_class& v) {
  ZKR_ENFORCE(v >= 0, ErrorCode::kInvalidArgument, "negative natural");
  auto b = MpzToBytes(v);
  PutU32(static_cast<uint32_t>(b.size()));
  PutBytes(b);
}

void ByteWriter::PutSigned(const mpz_class& v) {
  PutU8(v < 0 ? 1 : 0);
  PutNatural(abs(v));
}

uint8_t ByteReader::GetU8() { return GetBytes(1)[0]; }

uint32_t ByteReader::GetU32() {
  auto b = GetBytes(4);
  return (uint32_t{b[0]} << 24) | (uint32_t{b[1]} << 16) | (uint32_t{b[2]} << 8) | b[3];
}

std::span<const uint8_t> ByteReader::GetBytes(size_t n) {
  ZKR_ENFORCE(n <= remaining(), ErrorCode::kMalformed, "truncated input");
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

mpz_class ByteReader::GetNatural(size_t max_bytes) {
  uint32_t len = GetU32();
  ZKR_ENFORCE(len <= max_bytes, ErrorCode::kMalformed, "integer too long");
  auto b = GetBytes(len);
  ZKR_ENFORCE(len == 0 || b[0] != 0, ErrorCode::kMalformed,
              "non-canonical integer (leading zero)");
  return MpzFromBytes(b);
}

mpz_class ByteReader::GetSigned(size_t max_bytes) {
  uint8_t sign = GetU8();
  ZKR_ENFORCE(sign <= 1, ErrorCode::kMalformed, "bad sign octet");
  mpz_class v = GetNatural(max_bytes);
  ZKR_ENFORCE(!(sign == 1 && v == 0), ErrorCode::kMalformed, "negative zero");
  return sign ? mpz_class(-v) : v;
}

void ByteReader::ExpectEnd() const {
  ZKR_ENFORCE(pos_ == data_.size(), ErrorCode::kMalformed, "trailing octets");
}

}  // namespace zkrange::algebra
