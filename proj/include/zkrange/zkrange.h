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

// C interface to the zkrange range-proof library.
//
// Ranges are half-open [a, b) and every integer crosses the boundary as a
// decimal string. Byte buffers returned by the library are released with
// zkr_bytes_free; handles with their matching *_free call. The message of the
// last failure on the calling thread is available from zkr_last_error.

#ifndef ZKRANGE_ZKRANGE_H_
#define ZKRANGE_ZKRANGE_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define ZKR_API __attribute__((visibility("default")))
#else
#define ZKR_API
#endif

typedef enum zkr_status {
  ZKR_OK = 0,
  ZKR_REJECT = 1,                  // well-formed proof, verifier says no
  ZKR_WITNESS_OUT_OF_RANGE = 2,
  ZKR_MALFORMED = 3,               // undecodable proof or parameter blob
  ZKR_INVALID_ARGUMENT = 4,
  ZKR_UNSUPPORTED = 5,
  ZKR_INTERNAL = 6,
} zkr_status;

typedef enum zkr_scheme {
  ZKR_SCHEME_BOUDOT = 1,
  ZKR_SCHEME_SIGRANGE = 2,
  ZKR_SCHEME_BULLETPROOFS = 3,
} zkr_scheme;

typedef struct zkr_rng zkr_rng;
typedef struct zkr_params zkr_params;

// Reproducible generator; for tests and demos only.
ZKR_API zkr_rng* zkr_rng_new_seeded(uint64_t seed);
// Operating-system randomness.
ZKR_API zkr_rng* zkr_rng_new_os(void);
ZKR_API void zkr_rng_free(zkr_rng* rng);

typedef struct zkr_setup_options {
  uint32_t modulus_bits;  // Boudot; 0 selects 2048
  uint32_t base;          // sigrange u; 0 with digits 0 selects the optimum
  uint32_t digits;        // sigrange l
} zkr_setup_options;

// Parameters for proving membership in [a, b). `options` may be NULL.
// Bulletproofs requires a = 0 and b a power of two.
ZKR_API zkr_status zkr_params_setup(zkr_scheme scheme, const char* a, const char* b,
                                    const zkr_setup_options* options, zkr_rng* rng,
                                    zkr_params** out);
ZKR_API zkr_status zkr_params_serialize(const zkr_params* params, uint8_t** out,
                                        size_t* out_len);
// The scheme is read from the blob header.
ZKR_API zkr_status zkr_params_parse(const uint8_t* data, size_t len, zkr_params** out);
ZKR_API zkr_scheme zkr_params_scheme(const zkr_params* params);
ZKR_API void zkr_params_free(zkr_params* params);

// Commits to `witness` and proves it lies in [a, b).
ZKR_API zkr_status zkr_prove(const zkr_params* params, const char* a, const char* b,
                             const char* witness, zkr_rng* rng, uint8_t** proof,
                             size_t* proof_len);
// ZKR_OK on accept, ZKR_REJECT on reject, ZKR_MALFORMED if undecodable.
ZKR_API zkr_status zkr_verify(const zkr_params* params, const char* a, const char* b,
                              const uint8_t* proof, size_t proof_len);

typedef struct zkr_bench_config {
  const char* const* schemes;  // "boudot", "sigrange", "bulletproofs", "bulletproofs-opt"
  size_t num_schemes;
  const int* range_bits;
  size_t num_range_bits;
  int repetitions;             // >= 3
  uint64_t seed;
  uint32_t modulus_bits;       // 0 selects 2048
  int fixed_interval;          // nonzero adds rows at the fixed comparison interval
  const char* output_dir;      // NULL: no files
} zkr_bench_config;

// Runs the benchmark. On success *markdown holds the result tables (free with
// zkr_bytes_free). Warnings for skipped rows go to stderr. A proof that fails
// to verify yields ZKR_INTERNAL.
ZKR_API zkr_status zkr_bench_run(const zkr_bench_config* config, char** markdown);

ZKR_API void zkr_bytes_free(void* data);
ZKR_API const char* zkr_last_error(void);
ZKR_API const char* zkr_status_string(zkr_status status);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // ZKRANGE_ZKRANGE_H_
