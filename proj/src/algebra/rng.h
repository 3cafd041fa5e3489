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

#include <array>
#include <cstdint>
#include <span>

namespace zkrange::algebra {

// Source of prover/setup randomness. Every randomized operation takes one
// explicitly so runs can be replayed from a seed.
class Rng {
 public:
  virtual ~Rng() = default;
  virtual void Fill(std::span<uint8_t> out) = 0;

  uint64_t NextU64();

  // Uniform in [0, 2^bits).
  mpz_class RandomBits(size_t bits);

  // Uniform in [0, bound); bound > 0. Rejection sampling, no bias.
  mpz_class RandomBelow(const mpz_class& bound);

  // Uniform in the closed interval [lo, hi]; lo <= hi.
  mpz_class RandomInRange(const mpz_class& lo, const mpz_class& hi);
};

// Operating-system CSPRNG (OpenSSL RAND_bytes).
class OsRng final : public Rng {
 public:
  void Fill(std::span<uint8_t> out) override;
};

// SHA-256 in counter mode over a 64-bit seed. Reproducible; meant for tests,
// benchmarks and the CLI's seeded demo mode, never for production secrets.
class DeterministicRng final : public Rng {
 public:
  explicit DeterministicRng(uint64_t seed);
  void Fill(std::span<uint8_t> out) override;

 private:
  std::array<uint8_t, 32> key_{};
  uint64_t counter_ = 0;
  std::array<uint8_t, 32> block_{};
  size_t block_pos_ = 32;
};

}  // namespace zkrange::algebra
