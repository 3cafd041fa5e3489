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
#include <vector>

namespace zkrange::algebra {

// Appends canonical encodings to a growing buffer.
class ByteWriter {
 public:
  void PutU8(uint8_t v) { buf_.push_back(v); }
  void PutU32(uint32_t v);
  void PutBytes(std::span<const uint8_t> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
  // BE32 length followed by big-endian magnitude; v >= 0.
  void PutNatural(const mpz_class& v);
  // Sign octet (0 non-negative, 1 negative), then PutNatural(|v|).
  void PutSigned(const mpz_class& v);

  const std::vector<uint8_t>& bytes() const { return buf_; }
  std::vector<uint8_t> Take() { return std::move(buf_); }

 private:
  std::vector<uint8_t> buf_;
};

// Strict reader: every malformed or non-canonical field throws kMalformed.
class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  uint8_t GetU8();
  uint32_t GetU32();
  std::span<const uint8_t> GetBytes(size_t n);
  mpz_class GetNatural(size_t max_bytes = 1 << 16);
  mpz_class GetSigned(size_t max_bytes = 1 << 16);
  // Throws unless every octet was consumed.
  void ExpectEnd() const;
  size_t remaining() const { return data_.size() - pos_; }

 private:
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

std::vector<uint8_t> MpzToBytes(const mpz_class& v);
mpz_class MpzFromBytes(std::span<const uint8_t> b);

std::string ToHex(std::span<const uint8_t> b);

}  // namespace zkrange::algebra
