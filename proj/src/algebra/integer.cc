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

#include "algebra/integer.h"

#include <vector>

#include "errors.h"

namespace zkrange::algebra {

namespace {

constexpr uint64_t kWindow = 1 << 16;

const std::vector<unsigned long>& SmallPrimes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<unsigned long> out;
    std::vector<bool> composite(20000, false);
    for (unsigned long i = 3; i < composite.size(); i += 2) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < composite.size(); j += 2 * i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool FermatBase2(const mpz_class& p) {
  mpz_class r, e = p - 1, two = 2;
  mpz_powm(r.get_mpz_t(), two.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r == 1;
}

}  // namespace

mpz_class IsqrtFloor(const mpz_class& x) {
  ZKR_ENFORCE(x >= 0, ErrorCode::kInvalidArgument, "isqrt of a negative number");
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
  return s;
}

size_t BitLength(const mpz_class& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

bool IsSafePrime(const mpz_class& p, int reps) {
  if (p < 5) return false;
  mpz_class q = (p - 1) / 2;
  return mpz_probab_prime_p(q.get_mpz_t(), reps) > 0 &&
         mpz_probab_prime_p(p.get_mpz_t(), reps) > 0;
}

mpz_class GenSafePrime(int bits, Rng& rng, const SafePrimeOptions& opts) {
  ZKR_ENFORCE(bits >= 512 || (opts.insecure_small && bits >= 3),
              ErrorCode::kInvalidArgument, "safe prime size below 512 bits");
  if (bits < 16) {
    // Too small to sieve; plain enumeration from a random start.
    mpz_class lo = mpz_class(1) << (bits - 1);
    mpz_class hi = mpz_class(1) << bits;
    mpz_class start = lo + rng.RandomBelow(hi - lo);
    for (mpz_class p = start; p < hi; ++p) if (IsSafePrime(p)) return p;
    for (mpz_class p = lo; p < start; ++p) if (IsSafePrime(p)) return p;
    throw Error(ErrorCode::kInternal, "no safe prime of the requested size");
  }
  const auto& primes = SmallPrimes();
  std::vector<unsigned long> residues(primes.size());
  mpz_class q_lo = mpz_class(1) << (bits - 2);
  mpz_class q_hi = mpz_class(1) << (bits - 1);
  for (uint64_t window = 0;; ++window) {
    if (opts.max_windows && window >= *opts.max_windows) {
      throw Error(ErrorCode::kInternal, "safe prime search gave up");
    }
    // q odd in [2^(bits-2), 2^(bits-1)), p = 2q + 1 has exactly `bits` bits.
    mpz_class q0 = q_lo + rng.RandomBelow(q_hi - q_lo);
    if (mpz_even_p(q0.get_mpz_t())) q0 += 1;
    for (size_t k = 0; k < primes.size(); ++k) {
      residues[k] = mpz_fdiv_ui(q0.get_mpz_t(), primes[k]);
    }
    for (uint64_t step = 0; step < kWindow; ++step) {
      uint64_t delta = 2 * step;
      bool sieved = false;
      for (size_t k = 0; k < primes.size(); ++k) {
        unsigned long r = primes[k];
        if (mpz_cmp_ui(q_lo.get_mpz_t(), r) <= 0) break;
        unsigned long m = (residues[k] + delta) % r;
        // q = 0 or p = 2q + 1 = 0 (mod r)
        if (m == 0 || m == (r - 1) / 2) {
          sieved = true;
          break;
        }
      }
      if (sieved) continue;
      mpz_class q = q0 + delta;
      if (q >= q_hi) break;
      mpz_class p = 2 * q + 1;
      if (!FermatBase2(q) || !FermatBase2(p)) continue;
      if (IsSafePrime(p)) return p;
    }
  }
}

}  // namespace zkrange::algebra
