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

#include "znq/simulator.h"

#include <bit>
#include <cmath>
#include <random>

#include "znq/errors.h"

namespace znq {

namespace {

std::size_t dim_of(int width) {
    return std::size_t{1} << width;
}

std::size_t control_mask(const Gate &g, int width) {
    std::size_t m = 0;
    for (int c : g.controls) m |= qubit_bit(width, c);
    return m;
}

void require_width(const Circuit &c, int width) {
    if (c.width() != width) {
        throw ValidationError("circuit width " + std::to_string(c.width()) +
                              " does not match state width " + std::to_string(width));
    }
}

}  // namespace

StateVector StateVector::basis(int width, std::size_t index) {
    StateVector s;
    s.width = width;
    s.amplitudes = CVector::Zero(static_cast<Eigen::Index>(dim_of(width)));
    if (index >= dim_of(width)) throw ValidationError("basis index out of range");
    s.amplitudes[static_cast<Eigen::Index>(index)] = 1.0;
    return s;
}

void StateVector::validate(double tol) const {
    double n = amplitudes.norm();
    if (std::abs(n - 1.0) > tol) {
        throw InvariantError("state vector norm " + std::to_string(n) + " differs from 1");
    }
}

DensityMatrix DensityMatrix::basis(int width, std::size_t index) {
    return pure(StateVector::basis(width, index));
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    return DensityMatrix{psi.width, psi.amplitudes * psi.amplitudes.adjoint()};
}

DensityMatrix DensityMatrix::maximally_mixed(int width) {
    auto d = static_cast<Eigen::Index>(dim_of(width));
    return DensityMatrix{width, CMatrix::Identity(d, d) / static_cast<double>(d)};
}

void DensityMatrix::validate(double tol) const {
    require_hermitian(matrix, tol, "density matrix");
    Complex tr = matrix.trace();
    if (std::abs(tr - 1.0) > tol) {
        throw InvariantError("density matrix trace " + std::to_string(tr.real()) + " differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(matrix);
    if (es.eigenvalues().minCoeff() < -tol) {
        throw InvariantError("density matrix has eigenvalue " + std::to_string(es.eigenvalues().minCoeff()));
    }
}

ReadoutNoise ReadoutNoise::identity(int width) {
    return asymmetric(std::vector<std::pair<double, double>>(static_cast<std::size_t>(width), {0.0, 0.0}));
}

ReadoutNoise ReadoutNoise::symmetric(int width, double p) {
    return asymmetric(std::vector<std::pair<double, double>>(static_cast<std::size_t>(width), {p, p}));
}

ReadoutNoise ReadoutNoise::asymmetric(const std::vector<std::pair<double, double>> &flips) {
    RMatrix a = RMatrix::Ones(1, 1);
    for (auto [p01, p10] : flips) {
        if (!(p01 >= 0 && p01 <= 1 && p10 >= 0 && p10 <= 1)) {
            throw ValidationError("readout flip probabilities must lie in [0, 1]");
        }
        RMatrix single(2, 2);
        single << 1 - p01, p10, p01, 1 - p10;
        RMatrix next(a.rows() * 2, a.cols() * 2);
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            for (Eigen::Index j = 0; j < a.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = a(i, j) * single;
        }
        a = std::move(next);
    }
    ReadoutNoise r;
    r.confusion = std::move(a);
    r.per_qubit = flips;
    return r;
}

ReadoutNoise ReadoutNoise::from_matrix(const RMatrix &a) {
    if (a.rows() != a.cols() || !is_power_of_two(static_cast<std::size_t>(a.rows()))) {
        throw ValidationError("confusion matrix must be square with power-of-two dimension");
    }
    if (a.minCoeff() < 0 || a.maxCoeff() > 1) {
        throw ValidationError("confusion matrix entries must lie in [0, 1]");
    }
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        if (std::abs(a.col(j).sum() - 1.0) > 1e-12) {
            throw ValidationError("confusion matrix column " + std::to_string(j) + " does not sum to 1");
        }
    }
    ReadoutNoise r;
    r.confusion = a;
    return r;
}

int ReadoutNoise::width() const {
    return exact_log2(static_cast<std::size_t>(confusion.rows()));
}

RVector ReadoutNoise::apply(const RVector &probabilities) const {
    if (probabilities.size() != confusion.cols()) {
        throw ValidationError("readout width does not match the distribution");
    }
    return confusion * probabilities;
}

void NoiseModel::validate() const {
    for (double p : {p1, p2, p3, readout_flip}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ValidationError("noise probabilities must lie in [0, 1]");
        }
    }
}

double NoiseModel::gate_probability(int arity) const {
    if (arity <= 0) return 0.0;
    if (arity == 1) return p1;
    if (arity == 2) return p2;
    return p3;
}

void apply_gate(const Gate &g, int width, CVector &psi) {
    if (g.is_barrier()) return;
    auto u = g.base_matrix();
    std::size_t cmask = control_mask(g, width);
    std::size_t tbit = qubit_bit(width, g.target);
    std::size_t dim = dim_of(width);
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tbit) || (i & cmask) != cmask) continue;
        auto a = static_cast<Eigen::Index>(i);
        auto b = static_cast<Eigen::Index>(i | tbit);
        Complex x = psi[a], y = psi[b];
        psi[a] = u(0, 0) * x + u(0, 1) * y;
        psi[b] = u(1, 0) * x + u(1, 1) * y;
    }
}

void apply_gate(const Gate &g, int width, CMatrix &rho) {
    if (g.is_barrier()) return;
    auto u = g.base_matrix();
    std::size_t cmask = control_mask(g, width);
    std::size_t tbit = qubit_bit(width, g.target);
    std::size_t dim = dim_of(width);
    auto n = static_cast<Eigen::Index>(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tbit) || (i & cmask) != cmask) continue;
        auto a = static_cast<Eigen::Index>(i);
        auto b = static_cast<Eigen::Index>(i | tbit);
        for (Eigen::Index c = 0; c < n; ++c) {
            Complex x = rho(a, c), y = rho(b, c);
            rho(a, c) = u(0, 0) * x + u(0, 1) * y;
            rho(b, c) = u(1, 0) * x + u(1, 1) * y;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
            Complex x = rho(r, a), y = rho(r, b);
            rho(r, a) = x * std::conj(u(0, 0)) + y * std::conj(u(0, 1));
            rho(r, b) = x * std::conj(u(1, 0)) + y * std::conj(u(1, 1));
        }
    }
}

void apply_depolarizing(const std::vector<int> &qubits, double p, int width, CMatrix &rho) {
    if (p == 0.0 || qubits.empty()) return;
    std::size_t qmask = 0;
    for (int q : qubits) qmask |= qubit_bit(width, q);
    std::size_t dim = dim_of(width);
    std::size_t sub = std::size_t{1} << qubits.size();
    // Enumerate every assignment of the Q bits as a mask.
    std::vector<std::size_t> patterns;
    patterns.reserve(sub);
    for (std::size_t a = qmask;; a = (a - 1) & qmask) {
        patterns.push_back(a);
        if (a == 0) break;
    }
    CMatrix mixed = CMatrix::Zero(rho.rows(), rho.cols());
    for (std::size_t r = 0; r < dim; ++r) {
        if (r & qmask) continue;
        for (std::size_t c = 0; c < dim; ++c) {
            if (c & qmask) continue;
            Complex acc = 0;
            for (auto a : patterns) acc += rho(static_cast<Eigen::Index>(r | a), static_cast<Eigen::Index>(c | a));
            acc /= static_cast<double>(sub);
            for (auto a : patterns) mixed(static_cast<Eigen::Index>(r | a), static_cast<Eigen::Index>(c | a)) = acc;
        }
    }
    rho = (1.0 - p) * rho + p * mixed;
}

StateVector simulate_pure(const Circuit &circuit, const StateVector &initial) {
    require_width(circuit, initial.width);
    StateVector out = initial;
    for (const auto &g : circuit.gates()) apply_gate(g, out.width, out.amplitudes);
    return out;
}

void evolve_density(const Circuit &circuit, CMatrix &rho, const NoiseModel &noise) {
    int width = circuit.width();
    if (rho.rows() != static_cast<Eigen::Index>(dim_of(width))) {
        throw ValidationError("density matrix does not match circuit width");
    }
    for (const auto &g : circuit.gates()) {
        if (g.is_barrier()) continue;
        apply_gate(g, width, rho);
        apply_depolarizing(g.qubits(), noise.gate_probability(g.arity()), width, rho);
    }
}

DensityMatrix simulate_density(const Circuit &circuit, const DensityMatrix &initial,
                               const NoiseModel &noise) {
    require_width(circuit, initial.width);
    noise.validate();
    DensityMatrix out = initial;
    evolve_density(circuit, out.matrix, noise);
#ifndef NDEBUG
    out.validate();
#endif
    return out;
}

CMatrix circuit_unitary(const Circuit &circuit) {
    auto d = static_cast<Eigen::Index>(dim_of(circuit.width()));
    CMatrix u = CMatrix::Identity(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        CVector col = u.col(c);
        for (const auto &g : circuit.gates()) apply_gate(g, circuit.width(), col);
        u.col(c) = col;
    }
    return u;
}

RVector probabilities(const StateVector &psi) {
    return psi.amplitudes.cwiseAbs2();
}

RVector probabilities(const DensityMatrix &rho) {
    RVector p = rho.matrix.diagonal().real();
    return p.cwiseMax(0.0);
}

std::vector<std::size_t> sample_outcomes(const RVector &probs, std::uint64_t shots, std::uint64_t seed) {
    std::vector<double> w(probs.data(), probs.data() + probs.size());
    for (auto &x : w) x = std::max(x, 0.0);
    std::discrete_distribution<std::size_t> dist(w.begin(), w.end());
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> out(shots);
    for (auto &o : out) o = dist(rng);
    return out;
}

std::vector<std::uint64_t> sample_counts(const RVector &probs, std::uint64_t shots,
                                         const ReadoutNoise &readout, std::uint64_t seed) {
    if (shots < 1) throw ValidationError("shots must be at least 1");
    RVector noisy = readout.apply(probs);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(probs.size()), 0);
    for (auto o : sample_outcomes(noisy, shots, seed)) ++counts[o];
    return counts;
}

std::string bitstring(std::size_t index, int width) {
    std::string s;
    for (int q = 0; q < width; ++q) s.push_back((index & qubit_bit(width, q)) ? '1' : '0');
    return s;
}

double expectation(const StateVector &psi, const PauliDecomposition &observable) {
    if (psi.width != observable.num_qubits) {
        throw ValidationError("observable width does not match the state");
    }
    double acc = 0;
    auto d = static_cast<std::size_t>(psi.amplitudes.size());
    for (const auto &[p, c] : observable.terms) {
        std::size_t x = p.flip_mask();
        Complex v = 0;
        for (std::size_t k = 0; k < d; ++k) {
            v += std::conj(psi.amplitudes[static_cast<Eigen::Index>(k ^ x)]) * pauli_phase(p, k) *
                 psi.amplitudes[static_cast<Eigen::Index>(k)];
        }
        acc += c * v.real();
    }
    return acc;
}

double expectation(const DensityMatrix &rho, const PauliDecomposition &observable) {
    if (rho.width != observable.num_qubits) {
        throw ValidationError("observable width does not match the state");
    }
    double acc = 0;
    for (const auto &[p, c] : observable.terms) acc += c * pauli_trace(p, rho.matrix).real();
    return acc;
}

double z_mask_expectation(const RVector &probs, std::size_t mask) {
    double acc = 0;
    for (Eigen::Index x = 0; x < probs.size(); ++x) {
        int parity = std::popcount(static_cast<std::size_t>(x) & mask) & 1;
        acc += parity ? -probs[x] : probs[x];
    }
    return acc;
}

}  // namespace znq
