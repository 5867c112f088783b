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
#include <vector>

#include "znq/circuit.h"
#include "znq/estimate.h"
#include "znq/pauli.h"
#include "znq/simulator.h"

namespace znq {

/// Masks with |lambda_w| at or below this are treated as unrecoverable.
inline constexpr double kLambdaFloor = 0.05;

struct TrexCalibration {
    int width = 0;
    /// lambda_w indexed by mask (qubit 0 = MSB), with standard errors.
    std::vector<double> lambdas;
    std::vector<double> lambda_std_error;
    int num_twirls = 0;
    std::uint64_t shots_per_twirl = 0;
    std::uint64_t seed = 0;

    double lambda(std::size_t mask) const { return lambdas.at(mask); }
};

/// Distribution of the unflipped outcome when X_s is applied before a noisy
/// readout and the outcome is XORed with s afterwards.
RVector twirled_distribution(const RVector &probs, const ReadoutNoise &readout, std::size_t twirl);

/// Average of twirled_distribution over all 2^n masks.
RVector twirl_averaged_distribution(const RVector &probs, const ReadoutNoise &readout);

/// Unflipped outcomes of `num_twirls` random twirls with `shots_per_twirl`
/// shots each. Twirl r uses a mask drawn from derive_seed(seed, r).
std::vector<std::size_t> sample_twirled(const RVector &probs, const ReadoutNoise &readout,
                                        int num_twirls, std::uint64_t shots_per_twirl,
                                        std::uint64_t seed);

/// Estimates lambda_w = <Z_w> on |0...0> under twirled readout for every mask.
/// shots == 0 gives the exact twirl-group average.
TrexCalibration trex_calibrate(int num_twirls, std::uint64_t shots, const ReadoutNoise &readout,
                               std::uint64_t seed);

/// Closed form for tensor-product readout: prod over mask bits of
/// (1 - p01 - p10).
double trex_lambda_closed_form(const ReadoutNoise &readout, std::size_t mask);

/// raw / lambda_w. Throws ValidationError when |lambda_w| <= kLambdaFloor.
double trex_mitigate(double raw, const TrexCalibration &calibration, std::size_t mask);

/// Bitmask of the Z factors of a diagonal Pauli string.
std::size_t z_mask(const PauliString &p);

/// Diagonal observable c_0 + sum c_w Z_w from an exact (twirl-averaged)
/// distribution, each Z_w divided by lambda_w when a calibration is given.
double diagonal_expectation(const PauliDecomposition &observable, const RVector &probs,
                            const TrexCalibration *calibration = nullptr);

/// Same estimate from sampled outcomes, with the standard error of the
/// per-shot values.
Estimate diagonal_estimate(const PauliDecomposition &observable, const std::vector<std::size_t> &outcomes,
                           const TrexCalibration *calibration = nullptr);

enum class ZneModel { Linear, Polynomial, Exponential };

std::string to_string(ZneModel m);
ZneModel parse_zne_model(const std::string &name);

struct ZneConfig {
    std::vector<double> scales{1.0, 3.0, 5.0};
    /// Unset: linear for two scales, quadratic for three or more.
    std::optional<ZneModel> model;
    int order = 2;

    /// Scales distinct, >= 1 and including 1; enough points for the model.
    void validate() const;
    ZneModel resolved_model() const;
    int resolved_order() const;
};

struct ZnePoint {
    double scale = 1.0;
    double value = 0.0;
    double std_error = 0.0;
};

struct ZneResult {
    double value = 0.0;
    double std_error = 0.0;
    ZneModel model = ZneModel::Linear;
    int order = 1;
    /// Exponential requested but a value was non-positive; linear was used.
    bool fell_back_to_linear = false;
    std::vector<double> parameters;
};

/// Weighted least squares (weights 1 / std_error^2 when every std_error is
/// positive, unweighted otherwise) and the fitted value at scale 0.
/// Polynomial of degree `order` (1 = linear); exponential fits
/// log v = log A - c lambda. Throws ValidationError for fewer than two
/// points, too few points for the order, or a rank-deficient design.
ZneResult zne_extrapolate(const std::vector<ZnePoint> &points, ZneModel model, int order = 1);

struct ZnePipelineResult {
    std::vector<ZnePoint> points;
    std::vector<int> depths;
    ZneResult fit;
};

/// Folds `circuit` (which must start from |0...0>) to every scale,
/// simulates each under `noise` including readout, measures the diagonal
/// `observable` (exactly for shots == 0) and extrapolates.
ZnePipelineResult zne_pipeline(const Circuit &circuit, const PauliDecomposition &observable,
                               const ZneConfig &config, const NoiseModel &noise,
                               std::uint64_t shots, std::uint64_t seed);

}  // namespace znq
