// Copyright 2026 The znq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "znq/cli.h"
#include "znq/config.h"
#include "znq/errors.h"

namespace fs = std::filesystem;

namespace znq {
namespace {

fs::path scratch(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("znq_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(std::vector<std::string> args, std::string *out_text = nullptr) {
    args.insert(args.begin(), "znq");
    std::vector<const char *> argv;
    for (auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str() + err.str();
    return code;
}

TEST(Config, RoundTrip) {
    ExperimentConfig c;
    EXPECT_EQ(config_from_json(config_to_json(c)), c);
    c.couplings = {1.5, 0.5};
    c.dt = 0.05;
    c.embedding.mode = "greedy";
    c.embedding.restarts = 9;
    c.noise.readout_flip = 0.03;
    c.mitigation.zne_scales = {1.0, 2.0};
    c.mitigation.zne_model = "exponential";
    c.run.shots = 10000;
    c.run.s_values = {0.3};
    c.output.formats = {"csv"};
    auto text = config_to_json(c);
    auto back = config_from_json(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(config_to_json(back), text);
}

TEST(Config, RejectsBadInput) {
    EXPECT_THROW(config_from_json(R"({"bogus": 1})"), ValidationError);
    EXPECT_THROW(config_from_json(R"({"trotter": {"dt": "fast"}})"), ValidationError);
    EXPECT_THROW(config_from_json(R"({"trotter": {"dt": 0}})"), ValidationError);
    EXPECT_THROW(config_from_json(R"({"couplings": {"xi": null}})"), ValidationError);
    EXPECT_NO_THROW(config_from_json(R"({"couplings": {"xi": -1}})"));
    EXPECT_THROW(config_from_json("{not json"), ValidationError);
    EXPECT_NO_THROW(config_from_json("{}"));
}

TEST(Config, HashAndNumbers) {
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(2.0), "2");
}

TEST(Cli, BasisWritesArtifactsAndManifest) {
    auto dir = scratch("basis");
    ASSERT_EQ(run({"basis", "--out", dir.string()}), kExitOk);
    auto csv = slurp(dir / "basis.csv");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 19);
    auto manifest = slurp(dir / "manifest.json");
    EXPECT_NE(manifest.find("\"config_hash\""), std::string::npos);
    EXPECT_NE(manifest.find(fnv1a_hex(csv)), std::string::npos);
    EXPECT_NE(manifest.find(kVersion), std::string::npos);
}

TEST(Cli, ExitCodes) {
    std::string text;
    EXPECT_EQ(run({"frobnicate"}, &text), kExitUsage);
    EXPECT_NE(text.find("usage"), std::string::npos);
    EXPECT_EQ(run({}), kExitUsage);
    EXPECT_EQ(run({"basis", "--dt", "0", "--out", scratch("dt").string()}), kExitValidation);
    EXPECT_EQ(run({"decompose", "--permutation", "1,1,2,3,4,5,6,7", "--out", scratch("perm").string()}), kExitValidation);
    EXPECT_EQ(run({"green", "--s", "0.15", "--t-max", "0.3", "--out", scratch("grid").string()}), kExitValidation);
}

TEST(Cli, ConfigFileAndOverrides) {
    auto dir = scratch("config");
    fs::create_directories(dir);
    std::ofstream(dir / "c.json") << R"({"lattice": {"num_sites": 2}, "output": {"dir": ")" << (dir / "from_config").string()
                                  << R"("}})";
    ASSERT_EQ(run({"basis", "--config", (dir / "c.json").string()}), kExitOk);
    auto csv = slurp(dir / "from_config" / "basis.csv");
    EXPECT_GT(std::count(csv.begin(), csv.end(), '\n'), 1);
    ASSERT_EQ(run({"basis", "--config", (dir / "c.json").string(), "--out", (dir / "from_flag").string()}), kExitOk);
    EXPECT_EQ(slurp(dir / "from_flag" / "basis.csv"), csv);
}

TEST(Cli, EnvironmentOutputDirectory) {
    auto dir = scratch("env");
    ::setenv("ZNQ_OUTPUT_DIR", dir.string().c_str(), 1);
    int code = run({"sectors"});
    ::unsetenv("ZNQ_OUTPUT_DIR");
    ASSERT_EQ(code, kExitOk);
    EXPECT_TRUE(fs::exists(dir / "sectors.json"));
}

TEST(Cli, DeterministicOutputs) {
    auto a = scratch("det_a"), b = scratch("det_b");
    for (auto &d : {a, b}) {
        ASSERT_EQ(run({"density-evolve", "--method", "noisy", "--shots", "500", "--seed", "17", "--t-max", "0.5",
                       "--out", d.string()}),
                  kExitOk);
    }
    EXPECT_EQ(slurp(a / "density.csv"), slurp(b / "density.csv"));
    EXPECT_EQ(slurp(a / "manifest.json"), slurp(b / "manifest.json"));
    auto c = scratch("det_c");
    ASSERT_EQ(run({"density-evolve", "--method", "noisy", "--shots", "500", "--seed", "18", "--t-max", "0.5",
                   "--out", c.string()}),
              kExitOk);
    EXPECT_NE(slurp(a / "density.csv"), slurp(c / "density.csv"));
}

TEST(Cli, ThreadCountDoesNotChangeResults) {
    auto a = scratch("thr_a"), b = scratch("thr_b");
    ASSERT_EQ(run({"green", "--method", "noisy", "--shots", "200", "--s", "0.1", "--t-max", "0.3", "--threads", "1",
                   "--out", a.string()}),
              kExitOk);
    ASSERT_EQ(run({"green", "--method", "noisy", "--shots", "200", "--s", "0.1", "--t-max", "0.3", "--threads", "4",
                   "--out", b.string()}),
              kExitOk);
    EXPECT_EQ(slurp(a / "green.csv"), slurp(b / "green.csv"));
}

TEST(Cli, OtherSubcommands) {
    std::string text;
    auto dir = scratch("misc");
    EXPECT_EQ(run({"optimize", "--mode", "brute", "--out", (dir / "o").string()}, &text), kExitOk);
    EXPECT_NE(slurp(dir / "o" / "optimize.json").find("\"objective\": 3"), std::string::npos);
    EXPECT_EQ(run({"trotter", "--steps", "2", "--out", (dir / "t").string()}), kExitOk);
    EXPECT_EQ(slurp(dir / "t" / "trotter_step.txt").rfind("width 3", 0), 0u);
    EXPECT_EQ(run({"decompose", "--out", (dir / "d").string()}), kExitOk);
    EXPECT_EQ(run({"mitigate-demo", "--t-max", "0.2", "--out", (dir / "m").string()}), kExitOk);
}

TEST(Cli, BinaryExitCodes) {
    std::string bin = ZNQ_BINARY;
    auto dir = scratch("bin");
    auto status = [](const std::string &cmd) {
        int r = std::system((cmd + " > /dev/null 2>&1").c_str());
        return WIFEXITED(r) ? WEXITSTATUS(r) : -1;
    };
    EXPECT_EQ(status(bin + " basis --out " + dir.string()), 0);
    EXPECT_EQ(status(bin + " nonsense"), 64);
    EXPECT_EQ(status(bin + " basis --dt 0 --out " + dir.string()), 2);
}

}  // namespace
}  // namespace znq
