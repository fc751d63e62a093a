// Copyright 2026 The blockcoh Authors.
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

#include "blockcoh/blockcoh.hpp"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace blockcoh {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("blockcoh_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult run(const std::string& args, const std::string& env = "") {
  const fs::path err = scratch() / "stderr.txt";
  std::string cmd = env + " '" BLOCKCOH_CLI_PATH "' " + args + " 2>'" + err.string() + "'";
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

std::string data(const std::string& name) { return "'" + (fs::path(BLOCKCOH_DATA_DIR) / name).string() + "'"; }

TEST(Cli, BoundPrintsExactCounts) {
  CliResult r = run("bound --class bio --partition 2,3");
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["total"], "45346");
  EXPECT_EQ(j["per_level"], Json::parse(R"(["44772", "574"])"));
  r = run("bound --class sbio --partition 2,2");
  EXPECT_EQ(Json::parse(r.out)["total"], "480");
}

TEST(Cli, GenThenClassify) {
  const fs::path file = scratch() / "sbio.json";
  CliResult g = run("gen --class sbio --partition 2,3 --seed 7 -o '" + file.string() + "'");
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_TRUE(g.out.empty());
  CliResult c = run("classify '" + file.string() + "'");
  ASSERT_EQ(c.code, 0) << c.err;
  Json j = Json::parse(c.out);
  for (const char* key : {"cptp", "mbio", "bio_structural", "bio_semantic", "sbio_structural", "sbio_semantic"})
    EXPECT_TRUE(j[key].get<bool>()) << key;
}

TEST(Cli, ClassifyPartitionOverride) {
  // Diagonal projectors are incoherent for every partition of the same size.
  CliResult c = run("classify " + data("block_projectors_2_3.json") + " --partition 1,1,1,1,1");
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_TRUE(Json::parse(c.out)["sbio_structural"].get<bool>());
  EXPECT_EQ(run("classify " + data("block_projectors_2_3.json") + " --partition 2,2").code, 1);
}

TEST(Cli, MeasurePlusState) {
  CliResult r = run("measure --state " + data("plus_state.json") + " --measure l1");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(Json::parse(r.out)["value"].get<double>(), 1.0, 1e-12);
  r = run("measure --state " + data("plus_state.json") + " --measure rel-entropy");
  EXPECT_NEAR(Json::parse(r.out)["value"].get<double>(), 1.0, 1e-12);
  r = run("measure --state " + data("plus_state.json"));
  EXPECT_EQ(Json::parse(r.out).size(), 2u);
}

TEST(Cli, DilateTrine) {
  CliResult r = run("dilate " + data("trine_povm.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["partition"], Json::parse("[2, 2, 2]"));
  ComplexMatrix v = io::matrix_from_json(j["V"], "V");
  EXPECT_LE(identity_deviation(v.adjoint() * v), 1e-12);
}

TEST(Cli, NonCptpExitsTwo) {
  CliResult r = run("classify " + data("not_cptp.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(Json::parse(r.out)["cptp"].get<bool>());
}

TEST(Cli, ErrorsAreSingleLineJson) {
  const fs::path bad = scratch() / "bad.json";
  std::ofstream(bad) << "{\"dim\": 2,";
  for (const std::string& args : {"classify '" + bad.string() + "'", std::string("bound --class pio --partition 2"),
                                  std::string("gen --class bio --partition 2,0"), std::string("frobnicate")}) {
    CliResult r = run(args);
    EXPECT_EQ(r.code, 1) << args;
    ASSERT_FALSE(r.err.empty()) << args;
    EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << args;
    Json j = Json::parse(r.err);
    EXPECT_TRUE(j.contains("error") && j.contains("message")) << args;
  }
  EXPECT_EQ(Json::parse(run("classify '" + bad.string() + "'").err)["error"], "parse");
}

TEST(Cli, OutputsAreByteIdenticalAcrossRuns) {
  for (const std::string& args :
       {std::string("gen --class bio --partition 2,3 --seed 11"), std::string("gen --class pbio --partition 1,2,2 --seed 3"),
        "dilate " + data("trine_povm.json"), std::string("verify lemmas --trials 20 --seed 5")}) {
    CliResult a = run(args);
    CliResult b = run(args);
    ASSERT_EQ(a.code, 0) << args << a.err;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, RandomRoundTrips) {
  Rng rng(2026);
  const char* classes[] = {"bio", "sbio", "pbio", "unitary"};
  const char* parts[] = {"1", "3", "1,1", "2,3", "1,2,2", "2,2", "1,1,1"};
  for (int t = 0; t < 50; ++t) {
    std::string cls = classes[rng() % 4];
    std::string part = parts[rng() % 7];
    std::uint64_t seed = rng() % 100000;
    const fs::path file = scratch() / "round.json";
    CliResult g = run("gen --class " + cls + " --partition " + part + " --seed " + std::to_string(seed) + " -o '" +
                file.string() + "'");
    ASSERT_EQ(g.code, 0) << g.err;
    CliResult c = run("classify '" + file.string() + "'");
    ASSERT_EQ(c.code, 0) << cls << " " << part << " " << seed << c.err;
    Json j = Json::parse(c.out);
    KrausSet ks = gen_random(parse_channel_class(cls), parse_partition(part), seed);
    KrausSet back = io::kraus_from_json(io::read_json_file(file));
    ASSERT_EQ(back.size(), ks.size());
    for (std::size_t n = 0; n < ks.size(); ++n) EXPECT_EQ(back[n], ks[n]);
    EXPECT_TRUE(j["cptp"].get<bool>());
    if (cls != "unitary") {
      EXPECT_TRUE(j["bio_structural"].get<bool>()) << cls << " " << part << " " << seed;
    }
    if (cls == "sbio" || cls == "pbio") {
      EXPECT_TRUE(j["sbio_structural"].get<bool>()) << cls << " " << part << " " << seed;
    }
  }
}

TEST(Cli, ToleranceFromEnvironment) {
  CliResult r = run("classify " + data("block_projectors_2_3.json"), "BLOCKCOH_TOL=1e-6");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_DOUBLE_EQ(Json::parse(r.out)["tolerance"].get<double>(), 1e-6);
  r = run("classify " + data("block_projectors_2_3.json") + " --tol 1e-8", "BLOCKCOH_TOL=1e-6");
  EXPECT_DOUBLE_EQ(Json::parse(r.out)["tolerance"].get<double>(), 1e-8);
  r = run("classify " + data("block_projectors_2_3.json"), "BLOCKCOH_TOL=abc");
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, VerifySuitesPass) {
  for (const auto& suite : verify::suite_names()) {
    CliResult r = run("verify " + suite + " --trials 20");
    EXPECT_EQ(r.code, 0) << suite << r.err;
    EXPECT_TRUE(Json::parse(r.out)["pass"].get<bool>()) << suite;
  }
  EXPECT_EQ(run("verify nonsense").code, 1);
}

}  // namespace
}  // namespace blockcoh
