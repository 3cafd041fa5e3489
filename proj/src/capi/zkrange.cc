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

#include "zkrange/zkrange.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "algebra/rng.h"
#include "boudot/boudot.h"
#include "bulletproofs/bulletproofs.h"
#include "errors.h"
#include "harness/bench.h"
#include "sigrange/sigrange.h"
#include "wire.h"

struct zkr_rng {
  std::unique_ptr<zkrange::algebra::Rng> impl;
};

struct zkr_params {
  std::variant<std::monostate, zkrange::boudot::BoudotParams, zkrange::sigrange::RangeParams,
               zkrange::bulletproofs::BulletproofParams>
      impl;
};

namespace {

using zkrange::Error;
using zkrange::ErrorCode;
namespace boudot = zkrange::boudot;
namespace sigrange = zkrange::sigrange;
namespace bp = zkrange::bulletproofs;

thread_local std::string last_error;

zkr_status FromCode(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return ZKR_INVALID_ARGUMENT;
    case ErrorCode::kWitnessOutOfRange:
      return ZKR_WITNESS_OUT_OF_RANGE;
    case ErrorCode::kMalformed:
      return ZKR_MALFORMED;
    case ErrorCode::kUnsupported:
      return ZKR_UNSUPPORTED;
    case ErrorCode::kInternal:
      return ZKR_INTERNAL;
  }
  return ZKR_INTERNAL;
}

// Runs `f`, translating exceptions into status codes.
template <typename F>
zkr_status Guard(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    last_error = e.what();
    return FromCode(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ZKR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ZKR_INTERNAL;
  }
}

mpz_class ParseInt(const char* s, const char* what) {
  ZKR_ENFORCE(s != nullptr, ErrorCode::kInvalidArgument, std::string(what) + " is null");
  mpz_class v;
  ZKR_ENFORCE(*s != '\0' && v.set_str(s, 10) == 0, ErrorCode::kInvalidArgument,
              std::string(what) + " is not a decimal integer: " + s);
  return v;
}

struct Interval {
  mpz_class a, b;
};

Interval ParseInterval(const char* a, const char* b) {
  Interval r{ParseInt(a, "range start"), ParseInt(b, "range end")};
  ZKR_ENFORCE(r.a < r.b, ErrorCode::kInvalidArgument, "empty range");
  return r;
}

void Export(const std::vector<uint8_t>& bytes, uint8_t** out, size_t* out_len) {
  ZKR_ENFORCE(out != nullptr && out_len != nullptr, ErrorCode::kInvalidArgument,
              "null output");
  auto* buf = static_cast<uint8_t*>(std::malloc(bytes.empty() ? 1 : bytes.size()));
  if (buf == nullptr) throw std::bad_alloc();
  if (!bytes.empty()) std::memcpy(buf, bytes.data(), bytes.size());
  *out = buf;
  *out_len = bytes.size();
}

zkrange::algebra::Rng& RngOf(zkr_rng* rng) {
  ZKR_ENFORCE(rng != nullptr && rng->impl, ErrorCode::kInvalidArgument, "null rng");
  return *rng->impl;
}

// Bulletproofs parameters fix the range to [0, 2^n).
void CheckBulletproofRange(const bp::BulletproofParams& p, const Interval& r) {
  ZKR_ENFORCE(r.a == 0 && r.b == mpz_class(1) << p.n, ErrorCode::kInvalidArgument,
              "range does not match the parameters: expected [0, 2^" + std::to_string(p.n) +
                  ")");
}

}  // namespace

extern "C" {

zkr_rng* zkr_rng_new_seeded(uint64_t seed) {
  auto* r = new (std::nothrow) zkr_rng;
  if (r) r->impl = std::make_unique<zkrange::algebra::DeterministicRng>(seed);
  return r;
}

zkr_rng* zkr_rng_new_os(void) {
  auto* r = new (std::nothrow) zkr_rng;
  if (r) r->impl = std::make_unique<zkrange::algebra::OsRng>();
  return r;
}

void zkr_rng_free(zkr_rng* rng) { delete rng; }

zkr_status zkr_params_setup(zkr_scheme scheme, const char* a, const char* b,
                            const zkr_setup_options* options, zkr_rng* rng,
                            zkr_params** out) {
  return Guard([&] {
    ZKR_ENFORCE(out != nullptr, ErrorCode::kInvalidArgument, "null output");
    Interval r = ParseInterval(a, b);
    zkr_setup_options opts{};
    if (options) opts = *options;
    auto params = std::make_unique<zkr_params>();
    switch (scheme) {
      case ZKR_SCHEME_BOUDOT: {
        int bits = opts.modulus_bits ? static_cast<int>(opts.modulus_bits) : 2048;
        params->impl = boudot::BoudotSetup(bits, RngOf(rng));
        break;
      }
      case ZKR_SCHEME_SIGRANGE: {
        sigrange::BaseDigits bd{opts.base, opts.digits};
        if (bd.u == 0 && bd.l == 0) {
          bd = sigrange::OptimalParams(r.a, r.b);
        } else {
          ZKR_ENFORCE(bd.u != 0 && bd.l != 0, ErrorCode::kInvalidArgument,
                      "base and digits must be given together");
        }
        auto p = sigrange::SetupRange(bd.u, bd.l, RngOf(rng));
        ZKR_ENFORCE(r.b - r.a <= p.Capacity(), ErrorCode::kInvalidArgument,
                    "range wider than base^digits");
        params->impl = std::move(p);
        break;
      }
      case ZKR_SCHEME_BULLETPROOFS:
        params->impl = bp::SetupRp(r.a, r.b);
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument, "unknown scheme");
    }
    *out = params.release();
    return ZKR_OK;
  });
}

zkr_status zkr_params_serialize(const zkr_params* params, uint8_t** out, size_t* out_len) {
  return Guard([&] {
    ZKR_ENFORCE(params != nullptr, ErrorCode::kInvalidArgument, "null params");
    std::vector<uint8_t> bytes = std::visit(
        [](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, std::monostate>) {
            throw Error(ErrorCode::kInvalidArgument, "empty params");
            return std::vector<uint8_t>{};
          } else if constexpr (std::is_same_v<T, boudot::BoudotParams>) {
            return boudot::SerializeParams(p);
          } else if constexpr (std::is_same_v<T, sigrange::RangeParams>) {
            return sigrange::SerializeParams(p);
          } else {
            return bp::SerializeParams(p);
          }
        },
        params->impl);
    Export(bytes, out, out_len);
    return ZKR_OK;
  });
}

zkr_status zkr_params_parse(const uint8_t* data, size_t len, zkr_params** out) {
  return Guard([&] {
    ZKR_ENFORCE(out != nullptr && (data != nullptr || len == 0), ErrorCode::kInvalidArgument,
                "null argument");
    std::span<const uint8_t> bytes(data, len);
    auto params = std::make_unique<zkr_params>();
    switch (zkrange::wire::PeekScheme(bytes, zkrange::wire::Kind::kParams)) {
      case zkrange::wire::Scheme::kBoudot:
        params->impl = boudot::ParseParams(bytes);
        break;
      case zkrange::wire::Scheme::kSigRange:
        params->impl = sigrange::ParseParams(bytes);
        break;
      case zkrange::wire::Scheme::kBulletproofs:
        params->impl = bp::ParseParams(bytes);
        break;
    }
    *out = params.release();
    return ZKR_OK;
  });
}

zkr_scheme zkr_params_scheme(const zkr_params* params) {
  if (std::holds_alternative<zkrange::boudot::BoudotParams>(params->impl)) {
    return ZKR_SCHEME_BOUDOT;
  }
  if (std::holds_alternative<zkrange::sigrange::RangeParams>(params->impl)) {
    return ZKR_SCHEME_SIGRANGE;
  }
  return ZKR_SCHEME_BULLETPROOFS;
}

void zkr_params_free(zkr_params* params) { delete params; }

zkr_status zkr_prove(const zkr_params* params, const char* a, const char* b,
                     const char* witness, zkr_rng* rng, uint8_t** proof, size_t* proof_len) {
  return Guard([&] {
    ZKR_ENFORCE(params != nullptr, ErrorCode::kInvalidArgument, "null params");
    Interval r = ParseInterval(a, b);
    mpz_class x = ParseInt(witness, "witness");
    if (auto* p = std::get_if<bp::BulletproofParams>(&params->impl)) CheckBulletproofRange(*p, r);
    ZKR_ENFORCE(r.a <= x && x < r.b, ErrorCode::kWitnessOutOfRange, "witness out of range");
    auto& g = RngOf(rng);
    std::vector<uint8_t> bytes;
    if (auto* p = std::get_if<boudot::BoudotParams>(&params->impl)) {
      boudot::Range range{r.a, r.b - 1};
      bytes = boudot::SerializeBundle(*p, boudot::Prove(*p, range, x, g));
    } else if (auto* p = std::get_if<sigrange::RangeParams>(&params->impl)) {
      bytes = sigrange::SerializeBundle(sigrange::Prove(*p, {r.a, r.b}, x, g));
    } else {
      const auto& q = std::get<bp::BulletproofParams>(params->impl);
      bytes = bp::SerializeProof(q, bp::ProveRp(q, x, g));
    }
    Export(bytes, proof, proof_len);
    return ZKR_OK;
  });
}

zkr_status zkr_verify(const zkr_params* params, const char* a, const char* b,
                      const uint8_t* proof, size_t proof_len) {
  return Guard([&] {
    ZKR_ENFORCE(params != nullptr && (proof != nullptr || proof_len == 0),
                ErrorCode::kInvalidArgument, "null argument");
    Interval r = ParseInterval(a, b);
    std::span<const uint8_t> bytes(proof, proof_len);
    bool ok;
    if (auto* p = std::get_if<boudot::BoudotParams>(&params->impl)) {
      auto bundle = boudot::ParseBundle(*p, bytes);
      ok = boudot::Verify(*p, {r.a, r.b - 1}, bundle);
    } else if (auto* p = std::get_if<sigrange::RangeParams>(&params->impl)) {
      auto bundle = sigrange::ParseBundle(*p, bytes);
      ok = sigrange::Verify(*p, {r.a, r.b}, bundle);
    } else {
      const auto& q = std::get<bp::BulletproofParams>(params->impl);
      CheckBulletproofRange(q, r);
      ok = bp::VerifyRp(q, bp::ParseProof(q, bytes));
    }
    return ok ? ZKR_OK : ZKR_REJECT;
  });
}

zkr_status zkr_bench_run(const zkr_bench_config* config, char** markdown) {
  return Guard([&] {
    ZKR_ENFORCE(config != nullptr && markdown != nullptr, ErrorCode::kInvalidArgument,
                "null argument");
    zkrange::harness::BenchConfig c;
    for (size_t i = 0; i < config->num_schemes; ++i) c.schemes.emplace_back(config->schemes[i]);
    c.range_bits.assign(config->range_bits, config->range_bits + config->num_range_bits);
    c.repetitions = config->repetitions;
    c.rng_seed = config->seed;
    if (config->modulus_bits) c.modulus_bits = static_cast<int>(config->modulus_bits);
    std::vector<zkrange::harness::BenchRow> interval, sweep;
    if (config->fixed_interval) interval = zkrange::harness::RunFixedInterval(c, std::cerr);
    sweep = zkrange::harness::RunBench(c, std::cerr);
    if (config->output_dir) zkrange::harness::WriteOutputs(sweep, interval, config->output_dir);
    std::ostringstream md;
    if (config->fixed_interval) {
      md << "Fixed interval [" << zkrange::harness::kIntervalLow.get_str() << ", "
         << zkrange::harness::kIntervalHigh.get_str() << ")\n\n";
      zkrange::harness::WriteMarkdown(interval, md);
      md << "\n";
    }
    if (!sweep.empty()) {
      md << "Sweep over [0, 2^k)\n\n";
      zkrange::harness::WriteMarkdown(sweep, md);
    }
    std::string s = md.str();
    auto* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (buf == nullptr) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *markdown = buf;
    return ZKR_OK;
  });
}

void zkr_bytes_free(void* data) { std::free(data); }

const char* zkr_last_error(void) { return last_error.c_str(); }

const char* zkr_status_string(zkr_status status) {
  switch (status) {
    case ZKR_OK:
      return "ok";
    case ZKR_REJECT:
      return "proof rejected";
    case ZKR_WITNESS_OUT_OF_RANGE:
      return "witness out of range";
    case ZKR_MALFORMED:
      return "malformed input";
    case ZKR_INVALID_ARGUMENT:
      return "invalid argument";
    case ZKR_UNSUPPORTED:
      return "unsupported";
    case ZKR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

}  // extern "C"
