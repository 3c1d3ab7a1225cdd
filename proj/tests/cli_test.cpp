// Copyright 2026 The ulrich Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "ulrich/json.hpp"

namespace ulrich::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, CertifyEscapeCaseJson) {
  const Result r = invoke({"certify", "--n", "5", "--a", "2", "--r", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["branch"], "es53-divisibility");
  EXPECT_EQ(j["conclusion"], "NONEXISTENT");
  EXPECT_EQ(j["witnesses"]["violated"][0], "2^3 | r");
}

TEST(Cli, CertifyOutOfScope) {
  const Result r = invoke({"certify", "--n", "3", "--a", "2", "--r", "2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("scope"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(invoke({"certify", "--n", "5", "--a", "2", "--r", "4"}).code, kExitUsage);
}

TEST(Cli, UnknownFlagIsUsageError) {
  const Result r = invoke({"certify", "--n", "5", "--a", "2", "--r", "2", "--bogus"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--bogus"), std::string::npos);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"certify", "--n", "5", "--a", "2", "--r", "2", "--format", "xml"}).code, kExitUsage);
}

TEST(Cli, Help) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verify-appendix"), std::string::npos);
}

TEST(Cli, CertifyCiText) {
  const Result r = invoke({"certify-ci", "--degrees", "1", "--a", "2", "--r", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("delta_chi: 5/16"), std::string::npos);
  EXPECT_NE(r.out.find("v_value: 1350"), std::string::npos);
  EXPECT_NE(r.out.find("branch: chi-mismatch"), std::string::npos);

  const Result excluded = invoke({"certify-ci", "--degrees", "2,1", "--a", "3", "--r", "2"});
  EXPECT_EQ(excluded.code, kExitOk);
  EXPECT_NE(excluded.out.find("INCONCLUSIVE"), std::string::npos);

  EXPECT_EQ(invoke({"certify-ci", "--degrees", "2,x", "--a", "3", "--r", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"certify-ci", "--degrees", "2", "--a", "3", "--r", "2", "--m", "3"}).code, kExitUsage);
}

TEST(Cli, TextAndJsonAgree) {
  const Result text = invoke({"certify-ci", "--degrees", "3,2", "--a", "3", "--r", "3"});
  const Result json = invoke({"certify-ci", "--degrees", "3,2", "--a", "3", "--r", "3", "--format", "json"});
  const Json j = Json::parse(json.out);
  EXPECT_NE(text.out.find("delta_chi: " + j["witnesses"]["delta_chi"].get<std::string>()), std::string::npos);
  EXPECT_NE(text.out.find("v_value: " + j["witnesses"]["v_value"].get<std::string>()), std::string::npos);
}

TEST(Cli, Chi) {
  const Result r = invoke({"chi", "--m", "4", "--degrees", "1", "--a", "2", "--r", "2", "--ell", "0", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["chi_ci"], "1");
  EXPECT_EQ(j["chi_ulrich"], "32");
  EXPECT_EQ(j["u"], "5");
  const Result k3 = invoke({"chi", "--m", "2", "--degrees", "4", "--a", "2", "--r", "1"});
  EXPECT_NE(k3.out.find("chi_ci: 2"), std::string::npos);
  EXPECT_EQ(invoke({"chi", "--degrees", "1", "--a", "2", "--r", "2", "--ell", "1/0"}).code, kExitUsage);
}

TEST(Cli, VerifyAppendixSmallGrid) {
  const Result r = invoke({"verify-appendix", "--a", "2..3", "--s", "4..5", "--d-max", "3", "--v-s-max", "3",
                           "--format", "json", "--jobs", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["grid"]["a"], "2..3");
  std::set<std::string> lemmas;
  for (const auto& rep : j["reports"]) lemmas.insert(rep["lemma"].get<std::string>());
  for (const char* l : {"f-coefficient-table", "f-s4-display", "symmetric-expansions", "difference-identities", "f-structure"})
    EXPECT_TRUE(lemmas.contains(l)) << l;
  EXPECT_FALSE(j["v_positivity"].empty());

  // Same config, one thread: byte-identical output.
  const Result serial = invoke({"verify-appendix", "--a", "2..3", "--s", "4..5", "--d-max", "3", "--v-s-max", "3",
                                "--format", "json", "--jobs", "1"});
  EXPECT_EQ(serial.out, r.out);
}

TEST(Cli, VerifyAppendixValidatesRanges) {
  for (const char* bad : {"5..2", "x", "2..", "1..3"})
    EXPECT_EQ(invoke({"verify-appendix", "--a", bad}).code, kExitUsage) << bad;
  EXPECT_EQ(invoke({"verify-appendix", "--s", "0..3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify-appendix", "--checks", "tables,nonsense"}).code, kExitUsage);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "ulrich_cli_cert.json";
  const Result r = invoke({"certify", "--n", "4", "--a", "3", "--r", "2", "--format", "json", "--output", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  EXPECT_EQ(j["conclusion"], "NONEXISTENT");
  std::remove(path.c_str());
}

TEST(Cli, SelftestSubset) {
  const Result r = invoke({"selftest", "--only", "8,9"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("criterion 8: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("criterion 9: PASS"), std::string::npos);
  EXPECT_EQ(invoke({"selftest", "--only", "11"}).code, kExitUsage);
}

}  // namespace
}  // namespace ulrich::cli
