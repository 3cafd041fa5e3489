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

// zkrange command-line tool: prove, verify, params and bench.
//
// Exit codes: 0 ok, 1 proof rejected, 2 witness out of range, 3 malformed
// input, 4 usage or I/O error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zkrange/zkrange.h"

namespace {

enum Exit { kOk = 0, kReject = 1, kWitness = 2, kMalformed = 3, kUsage = 4 };

struct Failure {
  int code;
  std::string message;
};

int ExitFor(zkr_status s) {
  switch (s) {
    case ZKR_OK:
      return kOk;
    case ZKR_REJECT:
      return kReject;
    case ZKR_WITNESS_OUT_OF_RANGE:
      return kWitness;
    case ZKR_MALFORMED:
      return kMalformed;
    default:
      return kUsage;
  }
}

void Check(zkr_status s) {
  if (s == ZKR_OK) return;
  std::string detail = zkr_last_error();
  throw Failure{ExitFor(s), detail.empty() ? zkr_status_string(s) : detail};
}

const std::map<std::string, zkr_scheme> kSchemes = {
    {"boudot", ZKR_SCHEME_BOUDOT},
    {"sigrange", ZKR_SCHEME_SIGRANGE},
    {"bulletproofs", ZKR_SCHEME_BULLETPROOFS},
};

struct Interval {
  std::string a, b;
};

Interval ParseRange(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw Failure{kUsage, "range must look like a:b (half-open), got " + text};
  }
  return {text.substr(0, colon), text.substr(colon + 1)};
}

std::vector<uint8_t> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void WriteFile(const std::string& path, const uint8_t* data, size_t len) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{kUsage, "cannot write " + path};
  out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(len));
  if (!out) throw Failure{kUsage, "cannot write " + path};
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  explicit Handle(T* p) : ptr(p) {}
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (ptr) Free(ptr);
  }
};
using Rng = Handle<zkr_rng, zkr_rng_free>;
using Params = Handle<zkr_params, zkr_params_free>;

struct Bytes {
  uint8_t* data = nullptr;
  size_t len = 0;
  ~Bytes() { zkr_bytes_free(data); }
};

struct Options {
  std::string scheme;
  std::string range;
  std::string witness;
  std::string out;
  std::string proof;
  std::string params;
  std::optional<uint64_t> seed;
  uint32_t modulus_bits = 2048;
  uint32_t base = 0;
  uint32_t digits = 0;
  int reps = 5;
  std::vector<int> bits{8, 16, 32, 64};
  std::vector<std::string> bench_schemes{"boudot", "sigrange", "bulletproofs",
                                         "bulletproofs-opt"};
  bool no_interval = false;
};

zkr_rng* NewRng(const Options& o) {
  zkr_rng* r = o.seed ? zkr_rng_new_seeded(*o.seed) : zkr_rng_new_os();
  if (!r) throw Failure{kUsage, "out of memory"};
  return r;
}

zkr_scheme SchemeOf(const Options& o) { return kSchemes.at(o.scheme); }

void Setup(const Options& o, const Interval& r, Params& out) {
  zkr_setup_options so{o.modulus_bits, o.base, o.digits};
  Rng rng(NewRng(o));
  Check(zkr_params_setup(SchemeOf(o), r.a.c_str(), r.b.c_str(), &so, rng.ptr, &out.ptr));
}

void SaveParams(const Params& p, const std::string& path) {
  Bytes b;
  Check(zkr_params_serialize(p.ptr, &b.data, &b.len));
  WriteFile(path, b.data, b.len);
}

void LoadParams(const Options& o, const std::string& path, Params& out) {
  auto bytes = ReadFile(path);
  Check(zkr_params_parse(bytes.data(), bytes.size(), &out.ptr));
  if (zkr_params_scheme(out.ptr) != SchemeOf(o)) {
    throw Failure{kMalformed, path + " holds parameters for another scheme"};
  }
}

bool Exists(const std::string& path) { return std::ifstream(path).good(); }

int CmdParams(const Options& o) {
  Interval r = ParseRange(o.range);
  Params p;
  Setup(o, r, p);
  SaveParams(p, o.out);
  std::cout << "params written to " << o.out << "\n";
  return kOk;
}

int CmdProve(const Options& o) {
  Interval r = ParseRange(o.range);
  std::string params_path = o.params.empty() ? o.out + ".params" : o.params;
  Params p;
  if (!o.params.empty() && Exists(params_path)) {
    LoadParams(o, params_path, p);
  } else {
    Setup(o, r, p);
    SaveParams(p, params_path);
  }
  Rng rng(NewRng(o));
  Bytes proof;
  Check(zkr_prove(p.ptr, r.a.c_str(), r.b.c_str(), o.witness.c_str(), rng.ptr, &proof.data,
                  &proof.len));
  WriteFile(o.out, proof.data, proof.len);
  std::cout << "proof size: " << proof.len << " octets (" << proof.len * 8 << " bits)\n";
  std::cout << "params: " << params_path << "\n";
  return kOk;
}

int CmdVerify(const Options& o) {
  Interval r = ParseRange(o.range);
  std::string params_path = o.params.empty() ? o.proof + ".params" : o.params;
  Params p;
  LoadParams(o, params_path, p);
  auto proof = ReadFile(o.proof);
  Check(zkr_verify(p.ptr, r.a.c_str(), r.b.c_str(), proof.data(), proof.size()));
  std::cout << "accepted\n";
  return kOk;
}

int CmdBench(const Options& o) {
  std::vector<const char*> names;
  for (const auto& s : o.bench_schemes) names.push_back(s.c_str());
  zkr_bench_config c{};
  c.schemes = names.data();
  c.num_schemes = names.size();
  c.range_bits = o.bits.data();
  c.num_range_bits = o.bits.size();
  c.repetitions = o.reps;
  c.seed = o.seed.value_or(1);
  c.modulus_bits = o.modulus_bits;
  c.fixed_interval = o.no_interval ? 0 : 1;
  c.output_dir = o.out.empty() ? nullptr : o.out.c_str();
  char* md = nullptr;
  Check(zkr_bench_run(&c, &md));
  std::cout << md;
  zkr_bytes_free(md);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-knowledge range proofs: Boudot, signature-based and Bulletproofs"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> scheme_names;
  for (const auto& [name, _] : kSchemes) scheme_names.push_back(name);
  auto scheme_check = CLI::IsMember(scheme_names);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scheme", o.scheme, "boudot, sigrange or bulletproofs")
        ->required()
        ->check(scheme_check);
    cmd->add_option("--range", o.range, "half-open interval a:b")->required();
    cmd->add_option("--seed", o.seed, "deterministic randomness (demo only)");
  };
  auto add_setup = [&](CLI::App* cmd) {
    cmd->add_option("--modulus-bits", o.modulus_bits, "Boudot RSA modulus size")
        ->check(CLI::Range(256u, 8192u));
    cmd->add_option("--base", o.base, "sigrange base u (default: optimal)");
    cmd->add_option("--digits", o.digits, "sigrange digit count l (default: optimal)");
  };

  auto* params = app.add_subcommand("params", "generate public parameters");
  add_common(params);
  add_setup(params);
  params->add_option("--out", o.out, "output file")->required();

  auto* prove = app.add_subcommand("prove", "commit to a witness and prove it in range");
  add_common(prove);
  add_setup(prove);
  prove->add_option("--witness", o.witness, "secret value")->required();
  prove->add_option("--out", o.out, "proof file")->required();
  prove->add_option("--params", o.params,
                    "parameter file; created when absent (default: <out>.params, always fresh)");

  auto* verify = app.add_subcommand("verify", "check a proof");
  add_common(verify);
  verify->add_option("--proof,proof", o.proof, "proof file")->required();
  verify->add_option("--params", o.params, "parameter file (default: <proof>.params)");

  auto* bench = app.add_subcommand("bench", "measure size and timings");
  bench->add_option("--scheme", o.bench_schemes, "schemes to run")
      ->check(CLI::IsMember({"boudot", "sigrange", "bulletproofs", "bulletproofs-opt"}))
      ->delimiter(',');
  bench->add_option("--bits", o.bits, "range bit lengths, comma separated")->delimiter(',');
  bench->add_option("--reps", o.reps, "timed repetitions (>= 3)");
  bench->add_option("--seed", o.seed, "rng seed");
  bench->add_option("--modulus-bits", o.modulus_bits, "Boudot RSA modulus size")
      ->check(CLI::Range(256u, 8192u));
  bench->add_option("--out", o.out, "directory for CSV and markdown output");
  bench->add_flag("--no-interval", o.no_interval, "skip the fixed comparison interval");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*params) return CmdParams(o);
    if (*prove) return CmdProve(o);
    if (*verify) return CmdVerify(o);
    return CmdBench(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
}
