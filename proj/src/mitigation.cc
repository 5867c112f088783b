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

#include "znq/mitigation.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "znq/errors.h"
#include "znq/parallel.h"

namespace znq {

namespace {

double parity_sign(std::size_t x, std::size_t mask) {
    return (std::popcount(x & mask) & 1) ? -1.0 : 1.0;
}

std::vector<std::uint64_t> histogram(const std::vector<std::size_t> &outcomes, std::size_t dim) {
    std::vector<std::uint64_t> h(dim, 0);
    for (auto o : outcomes) ++h.at(o);
    return h;
}

// Per-outcome value of a diagonal observable, Z_w terms optionally rescaled.
std::vector<double> outcome_values(const PauliDecomposition &observable, std::size_t dim,
                                   const TrexCalibration *calibration) {
    if (dim != (std::size_t{1} << observable.num_qubits)) {
        throw ValidationError("observable width does not match the measured register");
    }
    std::vector<double> v(dim, 0.0);
    for (const auto &[p, c] : observable.terms) {
        if (!p.is_diagonal()) {
            throw ValidationError("observable term " + p.digits() + " is not diagonal in the Z basis");
        }
        std::size_t mask = z_mask(p);
        double coef = c;
        if (calibration && mask != 0) {
            if (calibration->width != observable.num_qubits) {
                throw ValidationError("calibration width does not match the observable");
            }
            coef = trex_mitigate(c, *calibration, mask);
        }
        for (std::size_t y = 0; y < dim; ++y) v[y] += coef * parity_sign(y, mask);
    }
    return v;
}

}  // namespace

RVector twirled_distribution(const RVector &probs, const ReadoutNoise &readout, std::size_t twirl) {
    auto dim = static_cast<std::size_t>(probs.size());
    RVector flipped(probs.size());
    for (std::size_t x = 0; x < dim; ++x) flipped[static_cast<Eigen::Index>(x ^ twirl)] = probs[static_cast<Eigen::Index>(x)];
    RVector noisy = readout.apply(flipped);
    RVector out(probs.size());
    for (std::size_t y = 0; y < dim; ++y) out[static_cast<Eigen::Index>(y ^ twirl)] = noisy[static_cast<Eigen::Index>(y)];
    return out;
}

RVector twirl_averaged_distribution(const RVector &probs, const ReadoutNoise &readout) {
    auto dim = static_cast<std::size_t>(probs.size());
    RVector acc = RVector::Zero(probs.size());
    for (std::size_t s = 0; s < dim; ++s) acc += twirled_distribution(probs, readout, s);
    return acc / static_cast<double>(dim);
}

std::vector<std::size_t> sample_twirled(const RVector &probs, const ReadoutNoise &readout,
                                        int num_twirls, std::uint64_t shots_per_twirl,
                                        std::uint64_t seed) {
    if (num_twirls < 1) throw ValidationError("T-REx needs at least one twirl");
    if (shots_per_twirl < 1) throw ValidationError("T-REx needs at least one shot per twirl");
    auto dim = static_cast<std::size_t>(probs.size());
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(num_twirls) * shots_per_twirl);
    for (int r = 0; r < num_twirls; ++r) {
        std::uint64_t twirl_seed = derive_seed(seed, static_cast<std::uint64_t>(r));
        std::size_t mask = static_cast<std::size_t>(splitmix64(twirl_seed) % dim);
        RVector flipped(probs.size());
        for (std::size_t x = 0; x < dim; ++x) flipped[static_cast<Eigen::Index>(x ^ mask)] = probs[static_cast<Eigen::Index>(x)];
        RVector noisy = readout.apply(flipped);
        for (auto y : sample_outcomes(noisy, shots_per_twirl, twirl_seed)) out.push_back(y ^ mask);
    }
    return out;
}

TrexCalibration trex_calibrate(int num_twirls, std::uint64_t shots, const ReadoutNoise &readout,
                               std::uint64_t seed) {
    if (num_twirls < 1) throw ValidationError("T-REx needs at least one twirl");
    TrexCalibration cal;
    cal.width = readout.width();
    cal.num_twirls = num_twirls;
    cal.shots_per_twirl = shots;
    cal.seed = seed;
    std::size_t dim = std::size_t{1} << cal.width;
    RVector zero = RVector::Zero(static_cast<Eigen::Index>(dim));
    zero[0] = 1.0;
    cal.lambdas.assign(dim, 0.0);
    cal.lambda_std_error.assign(dim, 0.0);
    if (shots == 0) {
        RVector avg = twirl_averaged_distribution(zero, readout);
        for (std::size_t w = 0; w < dim; ++w) cal.lambdas[w] = z_mask_expectation(avg, w);
        return cal;
    }
    auto outcomes = sample_twirled(zero, readout, num_twirls, shots, seed);
    auto h = histogram(outcomes, dim);
    double n = static_cast<double>(outcomes.size());
    for (std::size_t w = 0; w < dim; ++w) {
        double sum = 0;
        for (std::size_t y = 0; y < dim; ++y) sum += static_cast<double>(h[y]) * parity_sign(y, w);
        double mean = sum / n;
        cal.lambdas[w] = mean;
        cal.lambda_std_error[w] = n > 1 ? std::sqrt(std::max(0.0, 1.0 - mean * mean) * n / (n - 1) / n) : 0.0;
    }
    return cal;
}

double trex_lambda_closed_form(const ReadoutNoise &readout, std::size_t mask) {
    if (readout.per_qubit.empty()) {
        throw ValidationError("closed-form lambda needs tensor-product readout noise");
    }
    int width = static_cast<int>(readout.per_qubit.size());
    double lambda = 1.0;
    for (int q = 0; q < width; ++q) {
        if (mask & qubit_bit(width, q)) {
            auto [p01, p10] = readout.per_qubit[static_cast<std::size_t>(q)];
            lambda *= 1.0 - p01 - p10;
        }
    }
    return lambda;
}

double trex_mitigate(double raw, const TrexCalibration &calibration, std::size_t mask) {
    double lambda = calibration.lambda(mask);
    if (std::abs(lambda) <= kLambdaFloor) {
        throw ValidationError("T-REx mask " + std::to_string(mask) + " has lambda " + std::to_string(lambda) +
                              " at or below the floor " + std::to_string(kLambdaFloor) + "; unrecoverable");
    }
    return raw / lambda;
}

std::size_t z_mask(const PauliString &p) {
    if (!p.is_diagonal()) throw ValidationError("Pauli string " + p.digits() + " is not diagonal");
    return p.phase_mask();
}

double diagonal_expectation(const PauliDecomposition &observable, const RVector &probs,
                            const TrexCalibration *calibration) {
    auto values = outcome_values(observable, static_cast<std::size_t>(probs.size()), calibration);
    double acc = 0;
    for (Eigen::Index y = 0; y < probs.size(); ++y) acc += probs[y] * values[static_cast<std::size_t>(y)];
    return acc;
}

Estimate diagonal_estimate(const PauliDecomposition &observable, const std::vector<std::size_t> &outcomes,
                           const TrexCalibration *calibration) {
    std::size_t dim = std::size_t{1} << observable.num_qubits;
    auto values = outcome_values(observable, dim, calibration);
    auto h = histogram(outcomes, dim);
    double n = static_cast<double>(outcomes.size());
    Estimate e;
    if (outcomes.empty()) return e;
    double sum = 0;
    for (std::size_t y = 0; y < dim; ++y) sum += static_cast<double>(h[y]) * values[y];
    e.value = sum / n;
    if (outcomes.size() > 1) {
        double ss = 0;
        for (std::size_t y = 0; y < dim; ++y) ss += static_cast<double>(h[y]) * (values[y] - e.value) * (values[y] - e.value);
        e.std_error = std::sqrt(ss / (n - 1) / n);
    }
    return e;
}

std::string to_string(ZneModel m) {
    switch (m) {
        case ZneModel::Linear: return "linear";
        case ZneModel::Polynomial: return "polynomial";
        case ZneModel::Exponential: return "exponential";
    }
    return "?";
}

ZneModel parse_zne_model(const std::string &name) {
    if (name == "linear") return ZneModel::Linear;
    if (name == "polynomial" || name == "quadratic") return ZneModel::Polynomial;
    if (name == "exponential") return ZneModel::Exponential;
    throw ValidationError("unknown ZNE model '" + name + "' (linear, polynomial, exponential)");
}

void ZneConfig::validate() const {
    if (scales.size() < 2) throw ValidationError("ZNE needs at least two noise scales");
    std::set<double> seen;
    bool has_one = false;
    for (double s : scales) {
        if (!(s >= 1.0) || !std::isfinite(s)) throw ValidationError("ZNE scales must be >= 1");
        if (!seen.insert(s).second) throw ValidationError("ZNE scales must be distinct");
        has_one = has_one || std::abs(s - 1.0) < 1e-12;
    }
    if (!has_one) throw ValidationError("ZNE scales must include 1");
    if (resolved_model() == ZneModel::Polynomial && resolved_order() + 1 > static_cast<int>(scales.size())) {
        throw ValidationError("polynomial order " + std::to_string(resolved_order()) + " needs at least " +
                              std::to_string(resolved_order() + 1) + " scales");
    }
}

ZneModel ZneConfig::resolved_model() const {
    if (model) return *model;
    return scales.size() >= 3 ? ZneModel::Polynomial : ZneModel::Linear;
}

int ZneConfig::resolved_order() const {
    switch (resolved_model()) {
        case ZneModel::Linear: return 1;
        case ZneModel::Polynomial: return model ? order : 2;
        case ZneModel::Exponential: return 1;
    }
    return 1;
}

namespace {

struct Fit {
    RVector beta;
    RMatrix covariance;
};

Fit weighted_polyfit(const std::vector<double> &x, const std::vector<double> &y,
                     const std::vector<double> &sigma, int order) {
    auto m = static_cast<Eigen::Index>(x.size());
    auto p = static_cast<Eigen::Index>(order + 1);
    if (m < p) {
        throw ValidationError("extrapolation of order " + std::to_string(order) + " needs at least " +
                              std::to_string(order + 1) + " points, got " + std::to_string(x.size()));
    }
    bool weighted = std::all_of(sigma.begin(), sigma.end(), [](double s) { return s > 0.0; });
    RMatrix a(m, p);
    RVector b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        double w = weighted ? 1.0 / sigma[static_cast<std::size_t>(i)] : 1.0;
        double xp = 1.0;
        for (Eigen::Index k = 0; k < p; ++k) {
            a(i, k) = w * xp;
            xp *= x[static_cast<std::size_t>(i)];
        }
        b[i] = w * y[static_cast<std::size_t>(i)];
    }
    Eigen::ColPivHouseholderQR<RMatrix> qr(a);
    qr.setThreshold(1e-12);
    if (qr.rank() < p) throw ValidationError("degenerate extrapolation design matrix");
    Fit fit;
    fit.beta = qr.solve(b);
    RMatrix inv = (a.transpose() * a).inverse();
    if (weighted) {
        fit.covariance = inv;
    } else if (m > p) {
        double rss = (a * fit.beta - b).squaredNorm();
        fit.covariance = inv * (rss / static_cast<double>(m - p));
    } else {
        fit.covariance = RMatrix::Zero(p, p);
    }
    return fit;
}

}  // namespace

ZneResult zne_extrapolate(const std::vector<ZnePoint> &points, ZneModel model, int order) {
    if (points.size() < 2) throw ValidationError("zero-noise extrapolation needs at least two points");
    std::vector<double> x, y, s;
    for (const auto &pt : points) {
        x.push_back(pt.scale);
        y.push_back(pt.value);
        s.push_back(pt.std_error);
    }
    ZneResult r;
    r.model = model;
    if (model == ZneModel::Exponential) {
        bool positive = std::all_of(y.begin(), y.end(), [](double v) { return v > 0.0; });
        if (positive) {
            std::vector<double> ly, ls;
            for (std::size_t i = 0; i < y.size(); ++i) {
                ly.push_back(std::log(y[i]));
                ls.push_back(s[i] / y[i]);
            }
            Fit fit = weighted_polyfit(x, ly, ls, 1);
            r.order = 1;
            r.value = std::exp(fit.beta[0]);
            r.std_error = r.value * std::sqrt(std::max(0.0, fit.covariance(0, 0)));
            r.parameters = {r.value, -fit.beta[1]};
            return r;
        }
        r.fell_back_to_linear = true;
        r.model = ZneModel::Linear;
        order = 1;
    }
    if (r.model == ZneModel::Linear) order = 1;
    if (order < 1) throw ValidationError("polynomial order must be at least 1");
    Fit fit = weighted_polyfit(x, y, s, order);
    r.order = order;
    r.value = fit.beta[0];
    r.std_error = std::sqrt(std::max(0.0, fit.covariance(0, 0)));
    r.parameters.assign(fit.beta.data(), fit.beta.data() + fit.beta.size());
    return r;
}

ZnePipelineResult zne_pipeline(const Circuit &circuit, const PauliDecomposition &observable,
                               const ZneConfig &config, const NoiseModel &noise,
                               std::uint64_t shots, std::uint64_t seed) {
    config.validate();
    noise.validate();
    int depth = circuit.depth();
    std::vector<std::pair<int, int>> params;
    for (double lambda : config.scales) params.push_back(fold_parameters(lambda, depth));
    ZnePipelineResult out;
    out.points.resize(config.scales.size());
    out.depths.resize(config.scales.size());
    ReadoutNoise readout = noise.readout(circuit.width());
    parallel_for(config.scales.size(), [&](std::size_t k) {
        auto folded = fold(circuit, params[k].first, params[k].second);
        auto rho = simulate_density(folded.circuit, DensityMatrix::basis(circuit.width(), 0), noise);
        RVector noisy = readout.apply(probabilities(rho));
        ZnePoint pt;
        pt.scale = config.scales[k];
        if (shots == 0) {
            pt.value = diagonal_expectation(observable, noisy);
        } else {
            auto est = diagonal_estimate(observable, sample_outcomes(noisy, shots, derive_seed(seed, k)));
            pt.value = est.value;
            pt.std_error = est.std_error;
        }
        out.points[k] = pt;
        out.depths[k] = folded.circuit.depth();
    });
    out.fit = zne_extrapolate(out.points, config.resolved_model(), config.resolved_order());
    return out;
}

}  // namespace znq
