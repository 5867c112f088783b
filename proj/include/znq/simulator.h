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
#include <vector>

#include "znq/circuit.h"
#include "znq/linalg.h"
#include "znq/pauli.h"

namespace znq {

struct StateVector {
    int width = 0;
    CVector amplitudes;

    static StateVector basis(int width, std::size_t index);
    /// Throws InvariantError unless the norm is 1 to `tol`.
    void validate(double tol = 1e-9) const;
};

struct DensityMatrix {
    int width = 0;
    CMatrix matrix;

    static DensityMatrix basis(int width, std::size_t index);
    static DensityMatrix pure(const StateVector &psi);
    static DensityMatrix maximally_mixed(int width);
    /// Hermitian, unit trace and eigenvalues >= -tol, else InvariantError.
    void validate(double tol = 1e-9) const;
};

/// Column-stochastic confusion matrix: noisy distribution = A p, so
/// A(x, y) is the probability of reading x when y was prepared.
struct ReadoutNoise {
    RMatrix confusion;
    /// Per-qubit (p(0 -> 1), p(1 -> 0)) when the matrix is a tensor product.
    std::vector<std::pair<double, double>> per_qubit;

    static ReadoutNoise identity(int width);
    /// Independent symmetric flips with probability p on every qubit.
    static ReadoutNoise symmetric(int width, double p);
    /// Independent flips, entry q giving (p(0 -> 1), p(1 -> 0)) for qubit q.
    static ReadoutNoise asymmetric(const std::vector<std::pair<double, double>> &flips);
    /// Arbitrary matrix; throws ValidationError unless entries lie in [0, 1]
    /// and every column sums to 1 within 1e-12.
    static ReadoutNoise from_matrix(const RMatrix &a);

    int width() const;
    RVector apply(const RVector &probabilities) const;
};

/// Depolarizing probabilities after gates touching 1, 2 and 3+ qubits, plus a
/// symmetric per-qubit readout flip.
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
    double readout_flip = 0.0;

    static NoiseModel noiseless() { return {}; }
    /// 0.001, 0.01, 0.03 and readout 0.02.
    static NoiseModel defaults() { return {0.001, 0.01, 0.03, 0.02}; }

    void validate() const;
    double gate_probability(int arity) const;
    bool gate_noise_free() const { return p1 == 0.0 && p2 == 0.0 && p3 == 0.0; }
    ReadoutNoise readout(int width) const { return ReadoutNoise::symmetric(width, readout_flip); }

    bool operator==(const NoiseModel &) const = default;
};

/// In-place application of a gate to a state vector.
void apply_gate(const Gate &g, int width, CVector &psi);

/// rho -> U rho U^dagger in place.
void apply_gate(const Gate &g, int width, CMatrix &rho);

/// rho -> (1 - p) rho + p Tr_Q(rho) (x) I / 2^|Q| for the qubits Q.
void apply_depolarizing(const std::vector<int> &qubits, double p, int width, CMatrix &rho);

StateVector simulate_pure(const Circuit &circuit, const StateVector &initial);

/// Each gate's conjugation is followed by the arity-matched depolarizing
/// channel on its qubits. Readout noise is not applied here.
DensityMatrix simulate_density(const Circuit &circuit, const DensityMatrix &initial,
                               const NoiseModel &noise);

/// Continues a density simulation in place.
void evolve_density(const Circuit &circuit, CMatrix &rho, const NoiseModel &noise);

CMatrix circuit_unitary(const Circuit &circuit);

RVector probabilities(const StateVector &psi);
RVector probabilities(const DensityMatrix &rho);

/// Draws `shots` outcomes from A p. Returns one count per basis index.
std::vector<std::uint64_t> sample_counts(const RVector &probs, std::uint64_t shots,
                                         const ReadoutNoise &readout, std::uint64_t seed);

/// Draws `shots` outcome indices from a distribution.
std::vector<std::size_t> sample_outcomes(const RVector &probs, std::uint64_t shots,
                                         std::uint64_t seed);

/// Bitstring with qubit 0 first.
std::string bitstring(std::size_t index, int width);

/// <psi| O |psi> and Tr(O rho) for a Pauli sum O.
double expectation(const StateVector &psi, const PauliDecomposition &observable);
double expectation(const DensityMatrix &rho, const PauliDecomposition &observable);

/// Sum_x (-1)^{|x & mask|} p(x).
double z_mask_expectation(const RVector &probs, std::size_t mask);

}  // namespace znq
