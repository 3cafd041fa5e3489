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

// Benchmark harness: proof size and median setup/prove/verify timings per
// scheme and range width.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zkrange::harness {

inline constexpr const char* kSchemeNames[] = {"boudot", "sigrange", "bulletproofs",
                                               "bulletproofs-opt"};

struct BenchConfig {
  std::vector<std::string> schemes;  // subset of kSchemeNames
  std::vector<int> range_bits;       // sweep [0, 2^k)
  int repetitions = 5;               // timed runs after one warm-up
  uint64_t rng_seed = 1;
  int modulus_bits = 2048;           // Boudot RSA modulus
  std::filesystem::path output_path; // empty: no files
};

struct BenchRow {
  std::string scheme;
  int range_bits = 0;
  size_t proof_size = 0;  // serialized octets
  double setup_ms = 0;
  double prove_ms = 0;
  double verify_ms = 0;
  int repetitions = 0;
};

// Fixed comparison interval, half-open.
inline const mpz_class kIntervalLow{"347184000"};
inline const mpz_class kIntervalHigh{"599644800"};

// Throws Error(kInvalidArgument) for a bad config and Error(kInternal) when a
// freshly generated proof fails to verify. Unsupported combinations are
// skipped with a warning on `warn`.
std::vector<BenchRow> RunBench(const BenchConfig& config, std::ostream& warn);

// One row per scheme at [kIntervalLow, kIntervalHigh); range_bits is |kIntervalHigh|.
std::vector<BenchRow> RunFixedInterval(const BenchConfig& config, std::ostream& warn);

void WriteCsv(const std::vector<BenchRow>& rows, std::ostream& out);
void WriteMarkdown(const std::vector<BenchRow>& rows, std::ostream& out);

// size.csv, prove.csv and verify.csv under `dir`, one series per scheme.
void EmitFigures(const std::vector<BenchRow>& rows, const std::filesystem::path& dir);

// bench.csv, interval.csv, bench.md and the three figure files.
void WriteOutputs(const std::vector<BenchRow>& sweep, const std::vector<BenchRow>& interval,
                  const std::filesystem::path& dir);

double Median(std::vector<double> v);

}  // namespace zkrange::harness
