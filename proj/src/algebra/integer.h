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
#include <optional>

#include "algebra/rng.h"

namespace zkrange::algebra {

// Largest s with s^2 <= x. Throws on negative x.
mpz_class IsqrtFloor(const mpz_class& x);

inline constexpr int kPrimalityReps = 64;

struct SafePrimeOptions {
  // Permits sizes below 512 bits; such primes are for tests only.
  bool insecure_small = false;
  // Gives up (kInternal) after this many candidate windows when set.
  std::optional<uint64_t> max_windows;
};

// Prime p with (p - 1) / 2 prime and bit length exactly `bits`.
mpz_class GenSafePrime(int bits, Rng& rng, const SafePrimeOptions& opts = {});

bool IsSafePrime(const mpz_class& p, int reps = kPrimalityReps);

size_t BitLength(const mpz_class& v);

}  // namespace zkrange::algebra
