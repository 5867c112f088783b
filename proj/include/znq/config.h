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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "znq/lattice.h"
#include "znq/mitigation.h"
#include "znq/simulator.h"

namespace znq {

struct ExperimentConfig {
    LatticeSpec lattice;
    Couplings couplings;
    double dt = 0.1;

    struct EmbeddingSection {
        /// fixed | brute | greedy
        std::string mode = "fixed";
        int restarts = 5;
        std::uint64_t seed = 12345;
        /// Used by "fixed"; empty selects the default for the sector size.
        std::vector<int> fixed_permutation{7, 6, 1, 2, 4, 5, 8, 3};
        bool operator==(const EmbeddingSection &) const = default;
    } embedding;

    NoiseModel noise = NoiseModel::defaults();

    struct MitigationSection {
        int trex_twirls = 16;
        std::uint64_t trex_shots = 625;
        std::vector<double> zne_scales{1.0, 3.0, 5.0};
        /// auto | linear | polynomial | exponential
        std::string zne_model = "auto";
        int zne_order = 2;
        bool operator==(const MitigationSection &) const = default;
    } mitigation;

    struct RunSection {
        std::uint64_t shots = 0;
        std::uint64_t seed = 1;
        double t_max = 2.5;
        double t_step = 0.1;
        std::vector<double> s_values{0.1, 0.5};
        std::vector<std::pair<double, double>> regimes{{0.6, 0.1}, {1.5, 0.5}, {4.0, 1.0}};
        std::string method = "exact";
        bool operator==(const RunSection &) const = default;
    } run;

    struct OutputSection {
        std::string dir = "znq_out";
        std::vector<std::string> formats{"csv", "json"};
        bool operator==(const OutputSection &) const = default;
    } output;

    /// Throws ValidationError on the first violated constraint.
    void validate() const;

    ZneConfig zne_config() const;

    bool operator==(const ExperimentConfig &) const;
};

/// Pretty-printed JSON with every field present.
std::string config_to_json(const ExperimentConfig &config);

/// Parses JSON; missing fields keep their defaults, unknown keys and wrong
/// types raise ValidationError. The result is validated.
ExperimentConfig config_from_json(const std::string &text);

ExperimentConfig load_config(const std::string &path);

/// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string &bytes);

/// Shortest round-trip decimal form with '.' as separator.
std::string format_number(double v);

}  // namespace znq
