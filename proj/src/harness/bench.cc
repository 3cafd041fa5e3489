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

#include "harness/bench.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>

#include "algebra/rng.h"
#include "boudot/boudot.h"
#include "bulletproofs/bulletproofs.h"
#include "errors.h"
#include "sigrange/sigrange.h"

namespace zkrange::harness {
namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double TimeMs(F&& f) {
  auto start = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Sample {
  double setup_ms = 0;
  double prove_ms = 0;
  double verify_ms = 0;
  size_t size = 0;
};

void Check(bool ok, const std::string& scheme, int bits) {
  ZKR_ENFORCE(ok, ErrorCode::kInternal,
              scheme + ": generated proof failed to verify at " + std::to_string(bits) +
                  " bits");
}

// One warm-up, then `reps` timed samples reduced to medians.
BenchRow Collect(const std::string& scheme, int bits, int reps,
                 const std::function<Sample()>& sample) {
  sample();
  std::vector<double> setup, prove, verify, size;
  for (int i = 0; i < reps; ++i) {
    Sample s = sample();
    setup.push_back(s.setup_ms);
    prove.push_back(s.prove_ms);
    verify.push_back(s.verify_ms);
    size.push_back(static_cast<double>(s.size));
  }
  BenchRow row;
  row.scheme = scheme;
  row.range_bits = bits;
  row.proof_size = static_cast<size_t>(Median(size));
  row.setup_ms = Median(setup);
  row.prove_ms = Median(prove);
  row.verify_ms = Median(verify);
  row.repetitions = reps;
  return row;
}

class Runner {
 public:
  Runner(const BenchConfig& config, std::ostream& warn)
      : config_(config), warn_(warn), rng_(config.rng_seed) {
    ZKR_ENFORCE(config.repetitions >= 3, ErrorCode::kInvalidArgument,
                "repetitions must be at least 3");
    for (const auto& s : config.schemes) {
      ZKR_ENFORCE(std::find(std::begin(kSchemeNames), std::end(kSchemeNames), s) !=
                      std::end(kSchemeNames),
                  ErrorCode::kInvalidArgument, "unknown scheme: " + s);
    }
  }

  // [a, b) half-open; `bits` labels the row.
  std::optional<BenchRow> Row(const std::string& scheme, const mpz_class& a,
                              const mpz_class& b, int bits) {
    try {
      if (scheme == "boudot") return Boudot(a, b, bits);
      if (scheme == "sigrange") return SigRange(a, b, bits);
      return Bulletproofs(scheme == "bulletproofs-opt", bits);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInternal) throw;
      warn_ << "warning: skipping " << scheme << " at " << bits << " bits: " << e.what()
            << "\n";
      return std::nullopt;
    }
  }

 private:
  // The modulus does not depend on the range, so it is set up once.
  const boudot::BoudotParams& BoudotParams() {
    if (!boudot_) {
      std::vector<double> times;
      for (int i = 0; i <= config_.repetitions; ++i) {
        double ms = TimeMs([&] { boudot_ = boudot::BoudotSetup(config_.modulus_bits, rng_); });
        if (i > 0) times.push_back(ms);
      }
      boudot_setup_ms_ = Median(times);
    }
    return *boudot_;
  }

  BenchRow Boudot(const mpz_class& a, const mpz_class& b, int bits) {
    const auto& p = BoudotParams();
    boudot::Range range{a, b - 1};
    return Collect("boudot", bits, config_.repetitions, [&] {
      Sample s;
      s.setup_ms = boudot_setup_ms_;
      mpz_class x = rng_.RandomInRange(a, b - 1);
      boudot::BoudotBundle bundle;
      s.prove_ms = TimeMs([&] { bundle = boudot::Prove(p, range, x, rng_); });
      bool ok = false;
      s.verify_ms = TimeMs([&] { ok = boudot::Verify(p, range, bundle); });
      Check(ok, "boudot", bits);
      s.size = boudot::SerializeBundle(p, bundle).size();
      return s;
    });
  }

  BenchRow SigRange(const mpz_class& a, const mpz_class& b, int bits) {
    auto opt = sigrange::OptimalParams(a, b);
    sigrange::Range range{a, b};
    return Collect("sigrange", bits, config_.repetitions, [&] {
      Sample s;
      sigrange::RangeParams params;
      s.setup_ms = TimeMs([&] { params = sigrange::SetupRange(opt.u, opt.l, rng_); });
      mpz_class x = rng_.RandomInRange(a, b - 1);
      sigrange::SigRangeBundle bundle;
      s.prove_ms = TimeMs([&] { bundle = sigrange::Prove(params, range, x, rng_); });
      bool ok = false;
      s.verify_ms = TimeMs([&] { ok = sigrange::Verify(params, range, bundle); });
      Check(ok, "sigrange", bits);
      s.size = sigrange::SerializeBundle(bundle).size();
      return s;
    });
  }

  BenchRow Bulletproofs(bool optimized, int bits) {
    ZKR_ENFORCE(bits >= 1 && static_cast<size_t>(bits) <= bulletproofs::kMaxRangeBits,
                ErrorCode::kUnsupported, "bit length outside [1, 128]");
    const std::string name = optimized ? "bulletproofs-opt" : "bulletproofs";
    auto verifier = optimized ? bulletproofs::IpVerifier::kMultiexp
                              : bulletproofs::IpVerifier::kFolding;
    return Collect(name, bits, config_.repetitions, [&] {
      Sample s;
      bulletproofs::BulletproofParams params;
      s.setup_ms =
          TimeMs([&] { params = bulletproofs::SetupRpBits(static_cast<size_t>(bits)); });
      mpz_class v = rng_.RandomBits(static_cast<size_t>(bits));
      bulletproofs::RpProof proof;
      s.prove_ms = TimeMs([&] { proof = bulletproofs::ProveRp(params, v, rng_); });
      bool ok = false;
      s.verify_ms = TimeMs([&] { ok = bulletproofs::VerifyRp(params, proof, verifier); });
      Check(ok, name, bits);
      s.size = bulletproofs::SerializeProof(params, proof).size();
      return s;
    });
  }

  const BenchConfig& config_;
  std::ostream& warn_;
  algebra::DeterministicRng rng_;
  std::optional<boudot::BoudotParams> boudot_;
  double boudot_setup_ms_ = 0;
};

void WriteFile(const std::filesystem::path& path, const std::function<void(std::ostream&)>& f) {
  std::ofstream out(path);
  ZKR_ENFORCE(out.good(), ErrorCode::kInvalidArgument, "cannot write " + path.string());
  f(out);
}

}  // namespace

double Median(std::vector<double> v) {
  ZKR_ENFORCE(!v.empty(), ErrorCode::kInvalidArgument, "median of nothing");
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

std::vector<BenchRow> RunBench(const BenchConfig& config, std::ostream& warn) {
  for (int bits : config.range_bits) {
    ZKR_ENFORCE(bits >= 1, ErrorCode::kInvalidArgument, "range bits must be positive");
  }
  Runner runner(config, warn);
  std::vector<BenchRow> rows;
  for (const auto& scheme : config.schemes) {
    for (int bits : config.range_bits) {
      mpz_class b = mpz_class(1) << bits;
      if (auto row = runner.Row(scheme, 0, b, bits)) rows.push_back(*row);
    }
  }
  return rows;
}

std::vector<BenchRow> RunFixedInterval(const BenchConfig& config, std::ostream& warn) {
  Runner runner(config, warn);
  int bits = static_cast<int>(mpz_sizeinbase(kIntervalHigh.get_mpz_t(), 2));
  std::vector<BenchRow> rows;
  for (const auto& scheme : config.schemes) {
    // Bulletproofs covers [0, 2^bits), which contains the interval.
    if (auto row = runner.Row(scheme, kIntervalLow, kIntervalHigh, bits)) rows.push_back(*row);
  }
  return rows;
}

void WriteCsv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "scheme,range_bits,proof_size,setup_ms,prove_ms,verify_ms\r\n";
  out << std::fixed << std::setprecision(3);
  for (const auto& r : rows) {
    out << r.scheme << ',' << r.range_bits << ',' << r.proof_size << ',' << r.setup_ms
        << ',' << r.prove_ms << ',' << r.verify_ms << "\r\n";
  }
}

void WriteMarkdown(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "| Scheme | Range bits | Proof size (octets) | Setup (ms) | Prove (ms) | Verify (ms) |\n";
  out << "|---|---:|---:|---:|---:|---:|\n";
  out << std::fixed << std::setprecision(2);
  for (const auto& r : rows) {
    out << "| " << r.scheme << " | " << r.range_bits << " | " << r.proof_size << " | "
        << r.setup_ms << " | " << r.prove_ms << " | " << r.verify_ms << " |\n";
  }
}

void EmitFigures(const std::vector<BenchRow>& rows, const std::filesystem::path& dir) {
  struct Metric {
    const char* file;
    const char* column;
    std::function<void(std::ostream&, const BenchRow&)> put;
  };
  const Metric metrics[] = {
      {"size.csv", "proof_size", [](std::ostream& o, const BenchRow& r) { o << r.proof_size; }},
      {"prove.csv", "prove_ms", [](std::ostream& o, const BenchRow& r) { o << r.prove_ms; }},
      {"verify.csv", "verify_ms", [](std::ostream& o, const BenchRow& r) { o << r.verify_ms; }},
  };
  std::filesystem::create_directories(dir);
  for (const auto& m : metrics) {
    WriteFile(dir / m.file, [&](std::ostream& out) {
      out << "scheme,range_bits," << m.column << "\r\n";
      out << std::fixed << std::setprecision(3);
      for (const auto& r : rows) {
        out << r.scheme << ',' << r.range_bits << ',';
        m.put(out, r);
        out << "\r\n";
      }
    });
  }
}

void WriteOutputs(const std::vector<BenchRow>& sweep, const std::vector<BenchRow>& interval,
                  const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  WriteFile(dir / "bench.csv", [&](std::ostream& out) { WriteCsv(sweep, out); });
  WriteFile(dir / "interval.csv", [&](std::ostream& out) { WriteCsv(interval, out); });
  WriteFile(dir / "bench.md", [&](std::ostream& out) {
    out << "## Fixed interval [" << kIntervalLow.get_str() << ", " << kIntervalHigh.get_str()
        << ")\n\n";
    WriteMarkdown(interval, out);
    out << "\n## Sweep over [0, 2^k)\n\n";
    WriteMarkdown(sweep, out);
  });
  EmitFigures(sweep, dir);
}

}  // namespace zkrange::harness
