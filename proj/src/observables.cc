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

#include "znq/observables.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "znq/embedding.h"
#include "znq/errors.h"
#include "znq/interferometer.h"
#include "znq/parallel.h"
#include "znq/trotter.h"

namespace znq {

namespace {

constexpr std::uint64_t kDensityKey = 1;
constexpr std::uint64_t kGreenKey = 2;
constexpr std::uint64_t kCalibrationKey = 3;
constexpr std::uint64_t kZneKey = 4;

const double kPhases[2] = {0.0, kPi / 2};

PauliDecomposition ancilla_observable() {
    PauliDecomposition d;
    d.num_qubits = kGreenWidth;
    d.terms.emplace(PauliString::parse("0003"), 1.0);
    return d;
}

double dense_expectation(const CVector &psi, const CMatrix &op) {
    return (psi.adjoint() * op * psi)(0, 0).real();
}

void require_circuit_model(const VacuumModel &model) {
    if (model.num_qubits != 3) {
        throw ValidationError("circuit methods need a 3-qubit embedding, model has " +
                              std::to_string(model.num_qubits) + " qubits");
    }
}

TrexCalibration calibration_for(int width, const RunOptions &o) {
    ReadoutNoise readout = o.noise.readout(width);
    if (o.shots == 0) return trex_calibrate(o.trex_twirls, 0, readout, o.seed);
    std::uint64_t per_twirl = o.trex_calibration_shots;
    if (per_twirl == 0) per_twirl = std::max<std::uint64_t>(1, o.shots / static_cast<std::uint64_t>(o.trex_twirls));
    return trex_calibrate(o.trex_twirls, per_twirl, readout,
                          task_seed(o.seed, {kCalibrationKey, static_cast<std::uint64_t>(width)}));
}

// Measures a diagonal observable on an ideal outcome distribution according
// to the method's readout model.
Estimate measure(const RVector &probs, const PauliDecomposition &observable, Method method,
                 const RunOptions &o, const TrexCalibration *calibration, std::uint64_t seed) {
    int width = observable.num_qubits;
    switch (method) {
        case Method::Exact:
        case Method::TrotterExact:
        case Method::Circuit:
            if (o.shots == 0) return {diagonal_expectation(observable, probs), 0.0};
            return diagonal_estimate(observable, sample_outcomes(probs, o.shots, seed));
        case Method::Noisy:
        case Method::Zne: {
            RVector noisy = o.noise.readout(width).apply(probs);
            if (o.shots == 0) return {diagonal_expectation(observable, noisy), 0.0};
            return diagonal_estimate(observable, sample_outcomes(noisy, o.shots, seed));
        }
        case Method::Trex: {
            ReadoutNoise readout = o.noise.readout(width);
            if (o.shots == 0) {
                return {diagonal_expectation(observable, twirl_averaged_distribution(probs, readout), calibration), 0.0};
            }
            std::uint64_t per_twirl = std::max<std::uint64_t>(1, o.shots / static_cast<std::uint64_t>(o.trex_twirls));
            auto outcomes = sample_twirled(probs, readout, o.trex_twirls, per_twirl, seed);
            return diagonal_estimate(observable, outcomes, calibration);
        }
    }
    return {};
}

bool is_noisy(Method m) {
    return m == Method::Noisy || m == Method::Trex || m == Method::Zne;
}

std::uint64_t density_seed(const RunOptions &o, int steps) {
    return task_seed(o.seed, {kDensityKey, static_cast<std::uint64_t>(steps)});
}

std::uint64_t green_seed(const RunOptions &o, int steps_t, int steps_s, std::size_t a, std::size_t b, int phase) {
    return task_seed(o.seed, {kGreenKey, static_cast<std::uint64_t>(steps_t), static_cast<std::uint64_t>(steps_s),
                              a, b, static_cast<std::uint64_t>(phase)});
}

Estimate density_zne(const VacuumModel &model, double t, const RunOptions &o) {
    Circuit c = compile_evolution(model.hamiltonian_terms, t, o.dt, true, model.vacuum_index);
    int steps = grid_steps(t, o.dt);
    if (c.depth() == 0) {
        RVector p = probabilities(simulate_density(c, DensityMatrix::basis(3, 0), o.noise));
        return measure(p, model.density_terms, Method::Noisy, o, nullptr, density_seed(o, steps));
    }
    auto res = zne_pipeline(c, model.density_terms, o.zne, o.noise, o.shots,
                            task_seed(o.seed, {kZneKey, static_cast<std::uint64_t>(steps)}));
    return {res.fit.value, res.fit.std_error};
}

// Pauli-pair readings z[a][b][phase] for one (t, s).
using PairTable = std::vector<std::array<std::array<Estimate, 2>, 8>>;

GreenPoint assemble(const VacuumModel &model, double t, double s, Method method,
                    const std::vector<std::pair<PauliString, double>> &strings, const PairTable &z,
                    const Estimate &nu_t, const Estimate &nu_s) {
    double d0 = model.density_terms.coefficient(PauliString(std::vector<std::uint8_t>(3, 0)));
    double re_sum = d0 * (nu_t.value + nu_s.value) - d0 * d0;
    double im_sum = 0;
    double var_re = d0 * d0 * (nu_t.std_error * nu_t.std_error + nu_s.std_error * nu_s.std_error);
    double var_im = 0;
    for (std::size_t a = 0; a < strings.size(); ++a) {
        for (std::size_t b = 0; b < strings.size(); ++b) {
            double w = strings[a].second * strings[b].second;
            re_sum += w * z[a][b][0].value;
            im_sum += w * z[a][b][1].value;
            var_re += w * w * z[a][b][0].std_error * z[a][b][0].std_error;
            var_im += w * w * z[a][b][1].std_error * z[a][b][1].std_error;
        }
    }
    GreenPoint g;
    g.t = t;
    g.s = s;
    g.method = method;
    // -i (re_sum + i im_sum)
    g.value = Complex(im_sum, -re_sum);
    g.std_error_re = std::sqrt(var_im);
    g.std_error_im = std::sqrt(var_re);
    return g;
}

void check_times(double t, double s) {
    if (!(s >= 0.0)) throw ValidationError("s must be non-negative");
    if (t < s - 1e-12) {
        throw ValidationError("lesser Green function needs t >= s (got t = " + std::to_string(t) +
                              ", s = " + std::to_string(s) + ")");
    }
}

Complex dense_green(const VacuumModel &model, const CMatrix &ut, const CMatrix &us) {
    CVector vac = model.vacuum_state();
    CVector right = us * vac;
    right = model.embedded_density * right;
    right = ut * (us.adjoint() * right);
    right = model.embedded_density * right;
    CVector left = ut * vac;
    Complex corr = left.dot(right);
    return Complex(0, -1) * corr;
}

GreenPoint green_zne(const VacuumModel &model, double t, double s, const RunOptions &o) {
    auto strings = density_strings(model);
    o.zne.validate();
    std::vector<ZnePoint> re_points, im_points;
    PauliDecomposition anc = ancilla_observable();
    int steps_t = grid_steps(t, o.dt);
    int steps_s = grid_steps(s, o.dt);
    for (std::size_t k = 0; k < o.zne.scales.size(); ++k) {
        double lambda = o.zne.scales[k];
        auto run = [&](const Circuit &c, const PauliDecomposition &obs, std::uint64_t seed) {
            if (c.depth() == 0) {
                RVector p = probabilities(simulate_density(c, DensityMatrix::basis(c.width(), 0), o.noise));
                return measure(p, obs, Method::Noisy, o, nullptr, seed);
            }
            auto [n, sp] = fold_parameters(lambda, c.depth());
            auto folded = fold(c, n, sp);
            RVector p = probabilities(simulate_density(folded.circuit, DensityMatrix::basis(c.width(), 0), o.noise));
            return measure(p, obs, Method::Noisy, o, nullptr, seed);
        };
        PairTable z(strings.size());
        parallel_for(strings.size() * strings.size() * 2, [&](std::size_t job) {
            std::size_t a = job / (strings.size() * 2);
            std::size_t b = (job / 2) % strings.size();
            int ph = static_cast<int>(job % 2);
            Circuit c = green_circuit(model.hamiltonian_terms, t, s, o.dt, strings[a].first, strings[b].first,
                                      kPhases[ph], model.vacuum_index);
            z[a][b][static_cast<std::size_t>(ph)] =
                run(c, anc, task_seed(green_seed(o, steps_t, steps_s, a, b, ph), {kZneKey, k}));
        });
        auto nu = [&](double tau, int steps) {
            Circuit c = compile_evolution(model.hamiltonian_terms, tau, o.dt, true, model.vacuum_index);
            return run(c, model.density_terms, task_seed(density_seed(o, steps), {kZneKey, k}));
        };
        GreenPoint g = assemble(model, t, s, Method::Zne, strings, z, nu(t, steps_t), nu(s, steps_s));
        re_points.push_back({lambda, g.value.real(), g.std_error_re});
        im_points.push_back({lambda, g.value.imag(), g.std_error_im});
    }
    auto re = zne_extrapolate(re_points, o.zne.resolved_model(), o.zne.resolved_order());
    auto im = zne_extrapolate(im_points, o.zne.resolved_model(), o.zne.resolved_order());
    GreenPoint g;
    g.t = t;
    g.s = s;
    g.method = Method::Zne;
    g.value = Complex(re.value, im.value);
    g.std_error_re = re.std_error;
    g.std_error_im = im.std_error;
    return g;
}

}  // namespace

std::uint64_t task_seed(std::uint64_t master, std::initializer_list<std::uint64_t> key) {
    std::uint64_t s = splitmix64(master);
    for (auto k : key) s = derive_seed(s, k);
    return s;
}

CVector VacuumModel::vacuum_state() const {
    CVector v = CVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << num_qubits));
    v[static_cast<Eigen::Index>(vacuum_index)] = 1.0;
    return v;
}

VacuumModel build_vacuum_model(const LatticeSpec &spec, const Couplings &couplings, std::vector<int> permutation) {
    spec.validate();
    VacuumModel m;
    m.spec = spec;
    m.couplings = couplings;
    m.basis = enumerate_basis(spec);
    m.hamiltonian = build_hamiltonian(m.basis, couplings, spec);
    auto blocks = sector_decompose(m.basis, spec, m.hamiltonian);
    auto vs = vacuum_sector(blocks, m.basis, spec);
    m.sector = vs.block;
    m.vacuum_position = vs.vacuum_position;
    auto d = static_cast<std::size_t>(m.sector.dimension());
    m.num_qubits = qubits_for_dimension(d);
    std::size_t dim = std::size_t{1} << m.num_qubits;
    if (permutation.empty()) {
        permutation = dim == 8 ? reference_permutation() : identity_permutation(dim);
    }
    m.permutation = std::move(permutation);
    m.embedded_hamiltonian = pad_and_permute(m.sector.hamiltonian, m.permutation);
    m.hamiltonian_terms = decompose(m.embedded_hamiltonian);

    RVector nu = particle_density_diagonal(m.basis, spec);
    const CMatrix &v = m.sector.basis_vectors;
    m.sector_density = v.adjoint() * nu.cast<Complex>().asDiagonal() * v;
    m.embedded_density = pad_and_permute(m.sector_density, m.permutation);
    m.density_terms = decompose(m.embedded_density);
    Embedding e{m.permutation, m.num_qubits, 0};
    m.vacuum_index = e.computational_index(static_cast<std::size_t>(m.vacuum_position));
    return m;
}

PauliDecomposition density_operator(const VacuumModel &model) {
    return model.density_terms;
}

std::vector<std::pair<PauliString, double>> density_strings(const VacuumModel &model) {
    std::vector<std::pair<PauliString, double>> out;
    for (const auto &[p, c] : model.density_terms.terms) {
        if (p.weight() > 0) out.emplace_back(p, c);
    }
    return out;
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::TrotterExact: return "trotter_exact";
        case Method::Circuit: return "circuit";
        case Method::Noisy: return "noisy";
        case Method::Trex: return "trex";
        case Method::Zne: return "zne";
    }
    return "?";
}

Method parse_method(const std::string &name) {
    for (Method m : {Method::Exact, Method::TrotterExact, Method::Circuit, Method::Noisy, Method::Trex, Method::Zne}) {
        if (to_string(m) == name) return m;
    }
    throw ValidationError("unknown method '" + name + "' (exact, trotter_exact, circuit, noisy, trex, zne)");
}

Estimate density_point(const VacuumModel &model, double t, Method method, const RunOptions &o) {
    if (!(t >= 0.0)) throw ValidationError("time must be non-negative");
    CVector vac = model.vacuum_state();
    switch (method) {
        case Method::Exact: {
            CVector psi = evolution_operator(model.embedded_hamiltonian, t) * vac;
            return {dense_expectation(psi, model.embedded_density), 0.0};
        }
        case Method::TrotterExact: {
            require_circuit_model(model);
            CVector psi = trotter_unitary(model.hamiltonian_terms, o.dt, grid_steps(t, o.dt)) * vac;
            return {dense_expectation(psi, model.embedded_density), 0.0};
        }
        case Method::Circuit: {
            require_circuit_model(model);
            int steps = grid_steps(t, o.dt);
            Circuit c = compile_evolution(model.hamiltonian_terms, t, o.dt, true, model.vacuum_index);
            auto psi = simulate_pure(c, StateVector::basis(3, 0));
            return measure(probabilities(psi), model.density_terms, method, o, nullptr, density_seed(o, steps));
        }
        case Method::Noisy:
        case Method::Trex: {
            require_circuit_model(model);
            int steps = grid_steps(t, o.dt);
            Circuit c = compile_evolution(model.hamiltonian_terms, t, o.dt, true, model.vacuum_index);
            auto rho = simulate_density(c, DensityMatrix::basis(3, 0), o.noise);
            std::optional<TrexCalibration> cal;
            if (method == Method::Trex) cal = calibration_for(3, o);
            return measure(probabilities(rho), model.density_terms, method, o, cal ? &*cal : nullptr,
                           density_seed(o, steps));
        }
        case Method::Zne:
            require_circuit_model(model);
            return density_zne(model, t, o);
    }
    return {};
}

std::vector<SeriesPoint> density_series(const VacuumModel &model, const std::vector<double> &times,
                                        Method method, const RunOptions &o) {
    std::vector<SeriesPoint> out(times.size());
    bool sweep = method == Method::Circuit || method == Method::Noisy || method == Method::Trex;
    if (!sweep) {
        parallel_for(times.size(), [&](std::size_t k) { out[k] = {times[k], density_point(model, times[k], method, o)}; });
        return out;
    }
    require_circuit_model(model);
    if (is_noisy(method)) o.noise.validate();
    std::optional<TrexCalibration> cal;
    if (method == Method::Trex) cal = calibration_for(3, o);
    Circuit step = trotter_step(model.hamiltonian_terms, o.dt);
    Circuit prep = preparation_circuit(3, model.vacuum_index);
    StateVector psi = simulate_pure(prep, StateVector::basis(3, 0));
    CMatrix rho = DensityMatrix::basis(3, 0).matrix;
    evolve_density(prep, rho, o.noise);
    int current = 0;
    for (std::size_t k = 0; k < times.size(); ++k) {
        int steps = grid_steps(times[k], o.dt);
        if (steps < current) throw ValidationError("time grid must be non-decreasing");
        for (; current < steps; ++current) {
            if (method == Method::Circuit) {
                psi = simulate_pure(step, psi);
            } else {
                evolve_density(step, rho, o.noise);
            }
        }
        RVector p = method == Method::Circuit ? probabilities(psi) : RVector(rho.diagonal().real().cwiseMax(0.0));
        out[k] = {times[k], measure(p, model.density_terms, method, o, cal ? &*cal : nullptr, density_seed(o, steps))};
    }
    return out;
}

Complex exact_green_oracle(const VacuumModel &model, double t, double s) {
    if (t < s) return 0.0;
    return dense_green(model, evolution_operator(model.embedded_hamiltonian, t),
                       evolution_operator(model.embedded_hamiltonian, s));
}

Complex exact_greater_green(const VacuumModel &model, double t, double s) {
    if (t < s) return 0.0;
    // <nu(s) nu(t)> is the complex conjugate of <nu(t) nu(s)>.
    Complex lesser = exact_green_oracle(model, t, s);
    Complex corr = lesser / Complex(0, -1);
    return Complex(0, -1) * std::conj(corr);
}

Complex trotter_green_oracle(const VacuumModel &model, double t, double s, double dt) {
    require_circuit_model(model);
    check_times(t, s);
    return dense_green(model, trotter_unitary(model.hamiltonian_terms, dt, grid_steps(t, dt)),
                       trotter_unitary(model.hamiltonian_terms, dt, grid_steps(s, dt)));
}

Complex trotter_green_assembled(const VacuumModel &model, double t, double s, double dt) {
    require_circuit_model(model);
    check_times(t, s);
    int steps_t = grid_steps(t, dt);
    int steps_s = grid_steps(s, dt);
    CMatrix us = trotter_unitary(model.hamiltonian_terms, dt, steps_s);
    CMatrix ur = trotter_unitary(model.hamiltonian_terms, dt, steps_t - steps_s);
    CMatrix ut = trotter_unitary(model.hamiltonian_terms, dt, steps_t);
    CVector vac = model.vacuum_state();
    double d0 = model.density_terms.coefficient(PauliString(std::vector<std::uint8_t>(3, 0)));
    auto nu_at = [&](const CMatrix &u) { return dense_expectation(u * vac, model.embedded_density); };
    Complex sum = d0 * (nu_at(ut) + nu_at(us)) - d0 * d0;
    auto strings = density_strings(model);
    CVector left = ut * vac;
    for (const auto &[pa, ca] : strings) {
        CMatrix ma = pauli_matrix(pa);
        for (const auto &[pb, cb] : strings) {
            CVector right = ma * (ur * (pauli_matrix(pb) * (us * vac)));
            sum += ca * cb * left.dot(right);
        }
    }
    return Complex(0, -1) * sum;
}

GreenPoint lesser_green(const VacuumModel &model, double t, double s, Method method, const RunOptions &o) {
    check_times(t, s);
    GreenPoint g;
    g.t = t;
    g.s = s;
    g.method = method;
    switch (method) {
        case Method::Exact:
            g.value = exact_green_oracle(model, t, s);
            return g;
        case Method::TrotterExact:
            g.value = trotter_green_oracle(model, t, s, o.dt);
            return g;
        case Method::Zne:
            require_circuit_model(model);
            return green_zne(model, t, s, o);
        default:
            break;
    }
    require_circuit_model(model);
    if (is_noisy(method)) o.noise.validate();
    auto strings = density_strings(model);
    int steps_t = grid_steps(t, o.dt);
    int steps_s = grid_steps(s, o.dt);
    std::optional<TrexCalibration> cal;
    if (method == Method::Trex) cal = calibration_for(kGreenWidth, o);
    PauliDecomposition anc = ancilla_observable();
    PairTable z(strings.size());
    parallel_for(strings.size() * strings.size() * 2, [&](std::size_t job) {
        std::size_t a = job / (strings.size() * 2);
        std::size_t b = (job / 2) % strings.size();
        int ph = static_cast<int>(job % 2);
        Circuit c = green_circuit(model.hamiltonian_terms, t, s, o.dt, strings[a].first, strings[b].first,
                                  kPhases[ph], model.vacuum_index);
        RVector p = method == Method::Circuit
                        ? probabilities(simulate_pure(c, StateVector::basis(kGreenWidth, 0)))
                        : probabilities(simulate_density(c, DensityMatrix::basis(kGreenWidth, 0), o.noise));
        z[a][b][static_cast<std::size_t>(ph)] =
            measure(p, anc, method, o, cal ? &*cal : nullptr, green_seed(o, steps_t, steps_s, a, b, ph));
    });
    Estimate nu_t = density_point(model, t, method, o);
    Estimate nu_s = density_point(model, s, method, o);
    return assemble(model, t, s, method, strings, z, nu_t, nu_s);
}

std::vector<GreenPoint> green_series(const VacuumModel &model, double s, const std::vector<double> &times,
                                     Method method, const RunOptions &o) {
    for (double t : times) check_times(t, s);
    bool sweep = method == Method::Circuit || method == Method::Noisy || method == Method::Trex;
    std::vector<GreenPoint> out(times.size());
    if (!sweep) {
        if (method == Method::Zne) {
            for (std::size_t k = 0; k < times.size(); ++k) out[k] = lesser_green(model, times[k], s, method, o);
        } else {
            parallel_for(times.size(), [&](std::size_t k) { out[k] = lesser_green(model, times[k], s, method, o); });
        }
        return out;
    }
    require_circuit_model(model);
    if (is_noisy(method)) o.noise.validate();
    auto strings = density_strings(model);
    int steps_s = grid_steps(s, o.dt);
    std::vector<int> steps_t(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        steps_t[k] = grid_steps(times[k], o.dt);
        if (k > 0 && steps_t[k] < steps_t[k - 1]) throw ValidationError("time grid must be non-decreasing");
    }
    std::optional<TrexCalibration> cal;
    if (method == Method::Trex) cal = calibration_for(kGreenWidth, o);
    PauliDecomposition anc = ancilla_observable();
    bool pure = method == Method::Circuit;
    Circuit step = trotter_step(model.hamiltonian_terms, o.dt).widened(kGreenWidth);
    std::vector<Circuit> tails;
    for (const auto &[pa, ca] : strings) {
        Circuit tail = controlled_pauli(pa, kAncilla, kGreenWidth);
        tail.append(Gate::h(kAncilla));
        tails.push_back(std::move(tail));
    }
    std::vector<PairTable> z(times.size(), PairTable(strings.size()));
    parallel_for(strings.size() * 2, [&](std::size_t job) {
        std::size_t b = job / 2;
        int ph = static_cast<int>(job % 2);
        Circuit prefix(kGreenWidth);
        prefix.append(preparation_circuit(3, model.vacuum_index).widened(kGreenWidth));
        prefix.append(Gate::h(kAncilla));
        prefix.append(Gate::phase(kAncilla, kPhases[ph]));
        prefix.append(Gate::x(kAncilla));
        for (int k = 0; k < steps_s; ++k) prefix.append(step);
        prefix.append(controlled_pauli(strings[b].first, kAncilla, kGreenWidth));
        prefix.append(Gate::x(kAncilla));
        StateVector psi = StateVector::basis(kGreenWidth, 0);
        CMatrix rho = DensityMatrix::basis(kGreenWidth, 0).matrix;
        if (pure) {
            psi = simulate_pure(prefix, psi);
        } else {
            evolve_density(prefix, rho, o.noise);
        }
        int current = steps_s;
        for (std::size_t k = 0; k < times.size(); ++k) {
            for (; current < steps_t[k]; ++current) {
                if (pure) {
                    psi = simulate_pure(step, psi);
                } else {
                    evolve_density(step, rho, o.noise);
                }
            }
            for (std::size_t a = 0; a < strings.size(); ++a) {
                RVector p;
                if (pure) {
                    p = probabilities(simulate_pure(tails[a], psi));
                } else {
                    CMatrix r = rho;
                    evolve_density(tails[a], r, o.noise);
                    p = r.diagonal().real().cwiseMax(0.0);
                }
                z[k][a][b][static_cast<std::size_t>(ph)] =
                    measure(p, anc, method, o, cal ? &*cal : nullptr, green_seed(o, steps_t[k], steps_s, a, b, ph));
            }
        }
    });
    auto nu = density_series(model, times, method, o);
    Estimate nu_s = density_point(model, s, method, o);
    for (std::size_t k = 0; k < times.size(); ++k) {
        out[k] = assemble(model, times[k], s, method, strings, z[k], nu[k].estimate, nu_s);
    }
    return out;
}

}  // namespace znq
