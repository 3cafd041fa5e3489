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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "algebra/point_codec.h"
#include "errors.h"
#include "gtest/gtest.h"

namespace zkrange::harness {
namespace {

BenchConfig SmallConfig(std::vector<std::string> schemes, std::vector<int> bits) {
  BenchConfig c;
  c.schemes = std::move(schemes);
  c.range_bits = std::move(bits);
  c.repetitions = 3;
  c.rng_seed = 9;
  c.modulus_bits = 512;
  return c;
}

std::vector<std::string> Lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

std::filesystem::path TempDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("zkrange_bench_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

TEST(BenchTest, EmptySchemesGiveNoRows) {
  std::ostringstream warn;
  EXPECT_TRUE(RunBench(SmallConfig({}, {8, 16}), warn).empty());
  EXPECT_TRUE(RunFixedInterval(SmallConfig({}, {}), warn).empty());
}

TEST(BenchTest, ConfigValidation) {
  std::ostringstream warn;
  auto c = SmallConfig({"bulletproofs"}, {8});
  c.repetitions = 2;
  EXPECT_THROW(RunBench(c, warn), Error);
  EXPECT_THROW(RunBench(SmallConfig({"snark"}, {8}), warn), Error);
  EXPECT_THROW(RunBench(SmallConfig({"bulletproofs"}, {0}), warn), Error);
}

TEST(BenchTest, UnsupportedWidthIsSkipped) {
  std::ostringstream warn;
  auto rows = RunBench(SmallConfig({"bulletproofs"}, {129, 4}), warn);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].range_bits, 4);
  EXPECT_NE(warn.str().find("skipping bulletproofs at 129 bits"), std::string::npos);
}

TEST(BenchTest, BulletproofsRowAndOrdering) {
  std::ostringstream warn;
  auto c = SmallConfig({"bulletproofs"}, {32});
  c.repetitions = 5;
  auto rows = RunBench(c, warn);
  ASSERT_EQ(rows.size(), 1u);
  const auto& r = rows[0];
  EXPECT_EQ(r.scheme, "bulletproofs");
  EXPECT_EQ(r.range_bits, 32);
  EXPECT_EQ(r.repetitions, 5);
  EXPECT_GT(r.setup_ms, 0);
  EXPECT_GT(r.prove_ms, 0);
  EXPECT_GT(r.verify_ms, 0);
  EXPECT_LT(r.verify_ms, r.prove_ms);
}

TEST(BenchTest, FixedSeedRepeatsSizes) {
  std::ostringstream warn;
  auto c = SmallConfig({"boudot", "sigrange", "bulletproofs"}, {4, 8});
  auto first = RunBench(c, warn);
  auto second = RunBench(c, warn);
  ASSERT_EQ(first.size(), 6u);
  ASSERT_EQ(second.size(), first.size());
  for (size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].scheme, second[i].scheme);
    EXPECT_EQ(first[i].proof_size, second[i].proof_size) << first[i].scheme;
  }
}

TEST(BenchTest, BulletproofsSizeGrowsByTwoPointsPerDoubling) {
  std::ostringstream warn;
  auto rows = RunBench(SmallConfig({"bulletproofs"}, {2, 4, 8, 16, 32, 64}), warn);
  ASSERT_EQ(rows.size(), 6u);
  for (size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].proof_size - rows[i - 1].proof_size, 2 * algebra::kCompressedPointBytes);
  }
}

// Boudot's size is dominated by the modulus; the range only widens a few
// response integers.
TEST(BenchTest, BoudotSizeNearlyFlat) {
  std::ostringstream warn;
  auto rows = RunBench(SmallConfig({"boudot"}, {8, 64}), warn);
  ASSERT_EQ(rows.size(), 2u);
  double lo = static_cast<double>(rows[0].proof_size);
  double hi = static_cast<double>(rows[1].proof_size);
  EXPECT_GE(hi, lo);
  EXPECT_LT((hi - lo) / lo, 0.05);
}

TEST(BenchTest, FixedIntervalRows) {
  std::ostringstream warn;
  auto c = SmallConfig({"sigrange", "bulletproofs-opt"}, {});
  auto rows = RunFixedInterval(c, warn);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].range_bits, 30);
  EXPECT_EQ(rows[1].scheme, "bulletproofs-opt");
}

TEST(BenchTest, CsvAndMarkdown) {
  std::vector<BenchRow> rows = {{"sigrange", 8, 1661, 2.5, 7.75, 9.8125, 5}};
  std::ostringstream csv, md;
  WriteCsv(rows, csv);
  EXPECT_EQ(csv.str(),
            "scheme,range_bits,proof_size,setup_ms,prove_ms,verify_ms\r\n"
            "sigrange,8,1661,2.500,7.750,9.812\r\n");
  WriteMarkdown(rows, md);
  EXPECT_NE(md.str().find("| Setup (ms) | Prove (ms) | Verify (ms) |"), std::string::npos);
  EXPECT_NE(md.str().find("| sigrange | 8 | 1661 | 2.50 | 7.75 | 9.81 |"), std::string::npos);
}

TEST(BenchTest, EmitFiguresWritesThreeSeries) {
  std::vector<BenchRow> rows;
  for (const char* s : {"sigrange", "bulletproofs"}) {
    for (int bits : {8, 16, 32}) rows.push_back({s, bits, 100u + bits, 1, 2, 3, 3});
  }
  auto dir = TempDir("figures");
  EmitFigures(rows, dir);
  for (const char* f : {"size.csv", "prove.csv", "verify.csv"}) {
    auto lines = Lines(dir / f);
    ASSERT_EQ(lines.size(), 7u) << f;
    EXPECT_EQ(lines[0].rfind("scheme,range_bits,", 0), 0u);
  }
  EXPECT_EQ(Lines(dir / "size.csv")[4], "bulletproofs,8,108");
  std::filesystem::remove_all(dir);
}

TEST(BenchTest, MedianOfOddAndEven) {
  EXPECT_DOUBLE_EQ(Median({3, 1, 2}), 2);
  EXPECT_DOUBLE_EQ(Median({4, 1, 3, 2}), 2.5);
  EXPECT_THROW(Median({}), Error);
}

}  // namespace
}  // namespace zkrange::harness
