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

#include "znq/estimate.h"
#include "znq/lattice.h"
#include "znq/linalg.h"
#include "znq/mitigation.h"
#include "znq/pauli.h"
#include "znq/simulator.h"
#include "znq/symmetry.h"

namespace znq {

/// The vacuum sector of one lattice, embedded into qubits.
struct VacuumModel {
    LatticeSpec spec;
    Couplings couplings;
    std::vector<GaugeConfig> basis;
    CMatrix hamiltonian;
    SectorBlock sector;
    Eigen::Index vacuum_position = 0;
    std::vector<int> permutation;
    int num_qubits = 0;
    CMatrix embedded_hamiltonian;
    PauliDecomposition hamiltonian_terms;
    /// Particle density nu = (1/N) sum_x (-1)^x n_x + 1/2 on the sector.
    CMatrix sector_density;
    CMatrix embedded_density;
    PauliDecomposition density_terms;
    /// 0-based computational index of the embedded vacuum.
    std::size_t vacuum_index = 0;

    CVector vacuum_state() const;
};

/// Builds the model. An empty permutation selects the reference permutation
/// for an 8-dimensional padded sector and the identity otherwise.
VacuumModel build_vacuum_model(const LatticeSpec &spec, const Couplings &couplings,
                               std::vector<int> permutation = {});

/// Pauli decomposition of the embedded particle density.
PauliDecomposition density_operator(const VacuumModel &model);

/// The non-identity density strings with their coefficients, in map order.
std::vector<std::pair<PauliString, double>> density_strings(const VacuumModel &model);

enum class Method { Exact, TrotterExact, Circuit, Noisy, Trex, Zne };

std::string to_string(Method m);
Method parse_method(const std::string &name);

struct RunOptions {
    double dt = 0.1;
    NoiseModel noise = NoiseModel::defaults();
    /// 0 selects expectation-value mode.
    std::uint64_t shots = 0;
    std::uint64_t seed = 1;
    int trex_twirls = 16;
    /// Calibration shots per twirl; 0 follows `shots` (split over twirls).
    std::uint64_t trex_calibration_shots = 0;
    ZneConfig zne;
};

struct SeriesPoint {
    double t = 0.0;
    Estimate estimate;
};

/// <vac| nu(t) |vac> for one method. Times must lie on the dt grid for the
/// circuit-based methods.
Estimate density_point(const VacuumModel &model, double t, Method method, const RunOptions &options);

/// Same values as density_point at every grid time; circuit methods reuse
/// the state between consecutive times.
std::vector<SeriesPoint> density_series(const VacuumModel &model, const std::vector<double> &times,
                                        Method method, const RunOptions &options);

struct GreenPoint {
    double t = 0.0;
    double s = 0.0;
    Complex value;
    Method method = Method::Exact;
    double std_error_re = 0.0;
    double std_error_im = 0.0;
};

/// G<(t, s) = -i <vac| nu(t) nu(s) |vac> with exact evolution. s > t gives 0.
Complex exact_green_oracle(const VacuumModel &model, double t, double s);

/// G>(t, s) = -i <vac| nu(s) nu(t) |vac> for t >= s, 0 otherwise.
Complex exact_greater_green(const VacuumModel &model, double t, double s);

/// G<(t, s) with Trotterized evolution, evaluated with dense matrices.
Complex trotter_green_oracle(const VacuumModel &model, double t, double s, double dt);

/// The same quantity assembled from Pauli pairs:
///   -i [ d0 (nu(t) + nu(s)) - d0^2 + sum d_a d_b <U^+(t) P_a U(t-s) P_b U(s)> ].
Complex trotter_green_assembled(const VacuumModel &model, double t, double s, double dt);

/// One Green function point; circuit methods build the full interferometer
/// circuit for every Pauli pair and both phases. Throws ValidationError for
/// t < s.
GreenPoint lesser_green(const VacuumModel &model, double t, double s, Method method,
                        const RunOptions &options);

/// lesser_green at every t in `times` (each >= s), sharing the circuit
/// prefix between times for the circuit methods.
std::vector<GreenPoint> green_series(const VacuumModel &model, double s, const std::vector<double> &times,
                                     Method method, const RunOptions &options);

/// Seed of one measurement task, derived from the master seed and a key.
std::uint64_t task_seed(std::uint64_t master, std::initializer_list<std::uint64_t> key);

}  // namespace znq
