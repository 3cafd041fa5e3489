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

// Drives the zkrange executable end to end and checks exit codes.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zkrange_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  // Exit status of the CLI; stdout lands in output_.
  int Run(const std::string& args) {
    std::string out = Path("stdout.txt");
    std::string cmd = std::string(ZKRANGE_CLI) + " " + args + " > " + out + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out);
    output_.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::vector<uint8_t> Read(const std::string& name) const {
    std::ifstream in(Path(name), std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  void Write(const std::string& name, const std::vector<uint8_t>& bytes) const {
    std::ofstream out(Path(name), std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }

  fs::path dir_;
  std::string output_;
};

TEST_F(CliTest, BulletproofsProveVerify) {
  std::string proof = Path("bp.bin");
  ASSERT_EQ(Run("prove --scheme bulletproofs --range 0:4096 --witness 123 --out " + proof), 0)
      << output_;
  EXPECT_NE(output_.find("proof size: "), std::string::npos);
  auto bytes = Read("bp.bin");
  ASSERT_GE(bytes.size(), 6u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "ZKRP");
  EXPECT_EQ(bytes[5], 0x03);
  EXPECT_EQ(Run("verify --scheme bulletproofs --range 0:4096 --proof " + proof), 0) << output_;
}

TEST_F(CliTest, BoudotProveVerify) {
  std::string proof = Path("b.bin");
  ASSERT_EQ(Run("prove --scheme boudot --range 18:200 --witness 25 --out " + proof), 0)
      << output_;
  EXPECT_EQ(Run("verify --scheme boudot --range 18:200 " + proof), 0) << output_;
}

TEST_F(CliTest, TruncatedFlippedAndOutOfRange) {
  const std::string setup = "--scheme boudot --range 18:200 --modulus-bits 1024";
  std::string proof = Path("p.bin");
  ASSERT_EQ(Run("prove " + setup + " --witness 25 --out " + proof), 0) << output_;
  auto bytes = Read("p.bin");
  std::string params = proof + ".params";

  auto truncated = bytes;
  truncated.resize(bytes.size() / 2);
  Write("t.bin", truncated);
  EXPECT_EQ(Run("verify --scheme boudot --range 18:200 --params " + params + " " + Path("t.bin")),
            3)
      << output_;

  auto flipped = bytes;
  flipped.back() ^= 0x01;
  Write("f.bin", flipped);
  EXPECT_EQ(Run("verify --scheme boudot --range 18:200 --params " + params + " " + Path("f.bin")),
            1)
      << output_;

  EXPECT_EQ(Run("verify --scheme boudot --range 19:200 --params " + params + " " + proof), 1);

  for (const char* w : {"17", "200"}) {
    EXPECT_EQ(Run("prove " + setup + " --params " + params + " --witness " + w + " --out " +
                  Path("x.bin")),
              2)
        << w;
    EXPECT_NE(output_.find("witness out of range"), std::string::npos);
  }
}

TEST_F(CliTest, SigRangeWithExplicitParams) {
  std::string params = Path("s.params");
  const std::string range = " --range 347184000:599644800";
  ASSERT_EQ(Run("params --scheme sigrange --base 57 --digits 5 --seed 3 --out " + params + range),
            0)
      << output_;
  ASSERT_EQ(Run("prove --scheme sigrange --witness 473414400 --params " + params + range +
                " --out " + Path("s.bin")),
            0)
      << output_;
  EXPECT_NE(output_.find("30424 bits"), std::string::npos) << output_;
  EXPECT_EQ(Run("verify --scheme sigrange --params " + params + range + " " + Path("s.bin")), 0);
  // Parameters of another scheme are malformed input here.
  EXPECT_EQ(Run("verify --scheme bulletproofs --range 0:8 --params " + params + " " +
                Path("s.bin")),
            3);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Run("prove --scheme snark --range 0:8 --witness 1 --out " + Path("a")), 4);
  EXPECT_EQ(Run("prove --scheme bulletproofs --range 8 --witness 1 --out " + Path("a")), 4);
  EXPECT_EQ(Run("verify --scheme bulletproofs --range 0:8 " + Path("missing.bin")), 4);
  EXPECT_EQ(Run(""), 4);
}

TEST_F(CliTest, BenchWritesCsv) {
  std::string out = Path("bench");
  ASSERT_EQ(Run("bench --scheme bulletproofs,bulletproofs-opt --bits 4,8 --reps 3 --no-interval "
                "--out " +
                out),
            0)
      << output_;
  std::ifstream csv(out + "/bench.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "scheme,range_bits,proof_size,setup_ms,prove_ms,verify_ms\r");
  for (const char* f : {"size.csv", "prove.csv", "verify.csv", "bench.md"}) {
    EXPECT_TRUE(fs::exists(out + "/" + f)) << f;
  }
}

}  // namespace
