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

#include "znq/errors.h"
#include "znq/mitigation.h"
#include "znq/pauli.h"
#include "znq/simulator.h"

namespace znq {
namespace {

RVector some_distribution() {
    RVector p(8);
    p << 0.05, 0.1, 0.3, 0.02, 0.13, 0.2, 0.15, 0.05;
    return p;
}

TEST(Trex, TwirlAverageScalesParities) {
    auto readout = ReadoutNoise::asymmetric({{0.02, 0.05}, {0.03, 0.01}, {0.0, 0.04}});
    RVector p = some_distribution();
    RVector avg = twirl_averaged_distribution(p, readout);
    for (std::size_t mask = 1; mask < 8; ++mask) {
        double ideal = z_mask_expectation(p, mask);
        EXPECT_NEAR(z_mask_expectation(avg, mask), trex_lambda_closed_form(readout, mask) * ideal, 1e-14) << mask;
    }
}

TEST(Trex, ClosedForm) {
    auto readout = ReadoutNoise::symmetric(3, 0.02);
    EXPECT_NEAR(trex_lambda_closed_form(readout, 0b101), 0.96 * 0.96, 1e-15);
    EXPECT_NEAR(trex_lambda_closed_form(readout, 0), 1.0, 1e-15);
}

TEST(Trex, ExactCalibrationMatchesClosedForm) {
    auto readout = ReadoutNoise::asymmetric({{0.02, 0.05}, {0.03, 0.01}, {0.0, 0.04}});
    auto cal = trex_calibrate(8, 0, readout, 1);
    for (std::size_t mask = 0; mask < 8; ++mask)
        EXPECT_NEAR(cal.lambda(mask), trex_lambda_closed_form(readout, mask), 1e-14);
}

TEST(Trex, SampledCalibrationWithinErrors) {
    auto readout = ReadoutNoise::symmetric(3, 0.02);
    auto cal = trex_calibrate(16, 10000, readout, 7);
    for (std::size_t mask = 1; mask < 8; ++mask) {
        EXPECT_GT(cal.lambda_std_error[mask], 0.0);
        EXPECT_NEAR(cal.lambda(mask), trex_lambda_closed_form(readout, mask), 4 * cal.lambda_std_error[mask]);
    }
    auto again = trex_calibrate(16, 10000, readout, 7);
    EXPECT_EQ(cal.lambdas, again.lambdas);
}

TEST(Trex, MitigationRecoversIdealExpectation) {
    auto readout = ReadoutNoise::symmetric(3, 0.05);
    auto cal = trex_calibrate(8, 0, readout, 1);
    RVector p = some_distribution();
    PauliDecomposition obs = decompose(0.3 * pauli_matrix(PauliString::parse("303")) +
                                       0.7 * pauli_matrix(PauliString::parse("030")) +
                                       0.2 * CMatrix::Identity(8, 8));
    double ideal = diagonal_expectation(obs, p);
    RVector noisy = twirl_averaged_distribution(p, readout);
    EXPECT_GT(std::abs(diagonal_expectation(obs, noisy) - ideal), 1e-3);
    EXPECT_NEAR(diagonal_expectation(obs, noisy, &cal), ideal, 1e-13);
}

TEST(Trex, SampledEstimateConsistent) {
    auto readout = ReadoutNoise::symmetric(3, 0.02);
    auto cal = trex_calibrate(16, 0, readout, 1);
    RVector p = some_distribution();
    PauliDecomposition obs = decompose(pauli_matrix(PauliString::parse("033")));
    auto outcomes = sample_twirled(p, readout, 16, 1000, 3);
    EXPECT_EQ(outcomes.size(), 16000u);
    auto est = diagonal_estimate(obs, outcomes, &cal);
    EXPECT_NEAR(est.value, diagonal_expectation(obs, p), 4 * est.std_error);
}

TEST(Trex, FloorRejectsUnrecoverableMasks) {
    auto cal = trex_calibrate(8, 0, ReadoutNoise::symmetric(3, 0.49), 1);
    EXPECT_THROW(trex_mitigate(0.1, cal, 0b111), ValidationError);
    EXPECT_NO_THROW(trex_mitigate(0.1, cal, 0));
}

TEST(Trex, ZMask) {
    EXPECT_EQ(z_mask(PauliString::parse("303")), 0b101u);
    EXPECT_THROW(z_mask(PauliString::parse("310")), ValidationError);
}

TEST(Zne, PolynomialIsExactOnPolynomialData) {
    std::vector<ZnePoint> pts;
    for (double l : {1.0, 3.0, 5.0}) pts.push_back({l, 0.4 - 0.05 * l + 0.003 * l * l, 0.0});
    auto r = zne_extrapolate(pts, ZneModel::Polynomial, 2);
    EXPECT_NEAR(r.value, 0.4, 1e-12);
    auto lin = zne_extrapolate({pts[0], pts[1]}, ZneModel::Linear);
    EXPECT_NEAR(lin.value, pts[0].value - (pts[1].value - pts[0].value) / 2, 1e-12);
}

TEST(Zne, ExponentialAndFallback) {
    std::vector<ZnePoint> pts;
    for (double l : {1.0, 2.0, 3.0}) pts.push_back({l, 0.8 * std::exp(-0.1 * l), 0.0});
    auto r = zne_extrapolate(pts, ZneModel::Exponential);
    EXPECT_NEAR(r.value, 0.8, 1e-12);
    EXPECT_FALSE(r.fell_back_to_linear);
    pts[2].value = -0.1;
    auto f = zne_extrapolate(pts, ZneModel::Exponential);
    EXPECT_TRUE(f.fell_back_to_linear);
    EXPECT_EQ(f.model, ZneModel::Linear);
}

TEST(Zne, WeightedFitUsesErrors) {
    std::vector<ZnePoint> pts = {{1.0, 1.0, 0.01}, {2.0, 0.9, 0.01}, {3.0, 5.0, 100.0}};
    auto r = zne_extrapolate(pts, ZneModel::Linear);
    EXPECT_NEAR(r.value, 1.1, 1e-3);
    EXPECT_GT(r.std_error, 0.0);
}

TEST(Zne, RejectsDegenerateInput) {
    EXPECT_THROW(zne_extrapolate({{1.0, 0.5, 0.0}}, ZneModel::Linear), ValidationError);
    EXPECT_THROW(zne_extrapolate({{1.0, 0.5, 0.0}, {1.0, 0.4, 0.0}}, ZneModel::Linear), ValidationError);
    EXPECT_THROW(zne_extrapolate({{1.0, 0.5, 0.0}, {3.0, 0.4, 0.0}}, ZneModel::Polynomial, 2), ValidationError);
}

TEST(Zne, ConfigResolution) {
    ZneConfig c;
    EXPECT_EQ(c.resolved_model(), ZneModel::Polynomial);
    EXPECT_EQ(c.resolved_order(), 2);
    c.scales = {1.0, 3.0};
    EXPECT_EQ(c.resolved_model(), ZneModel::Linear);
    c.scales = {3.0, 5.0};
    EXPECT_THROW(c.validate(), ValidationError);
    c.scales = {1.0, 1.0};
    EXPECT_THROW(c.validate(), ValidationError);
    EXPECT_EQ(parse_zne_model(to_string(ZneModel::Exponential)), ZneModel::Exponential);
    EXPECT_THROW(parse_zne_model("cubic"), ValidationError);
}

TEST(Zne, PipelineNoiselessIsExact) {
    Circuit c(3);
    c.append(Gate::rx(0, 0.7)).append(Gate::cnot(0, 1)).append(Gate::rx(2, 1.1)).append(Gate::cz(1, 2));
    PauliDecomposition obs = decompose(pauli_matrix(PauliString::parse("330")));
    auto psi = simulate_pure(c, StateVector::basis(3, 0));
    double exact = expectation(psi, obs);
    auto r = zne_pipeline(c, obs, ZneConfig{}, NoiseModel::noiseless(), 0, 1);
    EXPECT_NEAR(r.fit.value, exact, 1e-12);
    int d = c.depth();
    EXPECT_EQ(r.depths, (std::vector<int>{d, 3 * d, 5 * d}));
}

TEST(Zne, PipelineReducesBias) {
    Circuit c(3);
    for (int k = 0; k < 3; ++k)
        c.append(Gate::rx(0, 0.3)).append(Gate::cnot(0, 1)).append(Gate::rx(2, 0.2)).append(Gate::cnot(1, 2));
    PauliDecomposition obs = decompose(pauli_matrix(PauliString::parse("330")));
    double exact = expectation(simulate_pure(c, StateVector::basis(3, 0)), obs);
    NoiseModel noise{0.001, 0.01, 0.03, 0.0};
    auto r = zne_pipeline(c, obs, ZneConfig{}, noise, 0, 1);
    EXPECT_LT(std::abs(r.fit.value - exact), std::abs(r.points[0].value - exact));
}

}  // namespace
}  // namespace znq
