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

#include <unsupported/Eigen/MatrixFunctions>

#include "znq/circuit.h"
#include "znq/errors.h"
#include "znq/interferometer.h"
#include "znq/observables.h"
#include "znq/simulator.h"
#include "znq/trotter.h"

namespace znq {
namespace {

const VacuumModel &model() {
    static const VacuumModel m = build_vacuum_model(LatticeSpec{}, {0.6, 0.1});
    return m;
}

Circuit sample_circuit() {
    Circuit c(3);
    c.append(Gate::h(0)).append(Gate::cnot(0, 1)).append(Gate::rx(2, 0.3)).append(Gate::rz(1, -1.1));
    c.append(Gate::cz(1, 2)).append(Gate::phase(0, 0.7)).append(Gate::cy(2, 0)).append(Gate::y(1));
    return c;
}

TEST(Gate, NamesAndArity) {
    EXPECT_EQ(Gate::cnot(0, 1).name(), "CNOT");
    EXPECT_EQ(Gate::cz(0, 1).name(), "CZ");
    EXPECT_EQ(Gate::rx(0, 1.0).name(), "RX");
    Gate g = Gate::rx(2, 0.5);
    g.controls = {0};
    EXPECT_EQ(g.name(), "CRX");
    EXPECT_EQ(g.arity(), 2);
    EXPECT_EQ(Gate::barrier().arity(), 0);
}

TEST(Gate, RotationConventions) {
    double t = 0.37;
    Eigen::Matrix2cd x, z;
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    Eigen::Matrix2cd ex = (Complex(0, -t / 2) * x).exp();
    Eigen::Matrix2cd ez = (Complex(0, -t / 2) * z).exp();
    EXPECT_LT((Gate::rx(0, t).base_matrix() - ex).norm(), 1e-14);
    EXPECT_LT((Gate::rz(0, t).base_matrix() - ez).norm(), 1e-14);
    EXPECT_LT((Gate::rx(0, t).inverse().base_matrix() * ex - Eigen::Matrix2cd::Identity()).norm(), 1e-14);
}

TEST(Circuit, AppendValidates) {
    Circuit c(2);
    EXPECT_THROW(c.append(Gate::x(2)), ValidationError);
    EXPECT_THROW(c.append(Gate::cnot(1, 1)), ValidationError);
    EXPECT_THROW(c.append(Gate::rx(0, std::nan(""))), ValidationError);
}

TEST(Circuit, LayersAndBarriers) {
    Circuit c(3);
    c.append(Gate::x(0)).append(Gate::x(1)).append(Gate::cnot(0, 1)).append(Gate::x(2));
    EXPECT_EQ(c.depth(), 2);
    c.append(Gate::barrier()).append(Gate::x(2));
    EXPECT_EQ(c.depth(), 3);
    EXPECT_EQ(c.gate_count(), 5u);
}

TEST(Circuit, InverseUndoes) {
    Circuit c = sample_circuit();
    Circuit both = c;
    both.append(c.inverse());
    EXPECT_LT((circuit_unitary(both) - CMatrix::Identity(8, 8)).norm(), 1e-12);
}

TEST(Circuit, ControlledIsBlockDiagonal) {
    Circuit c = sample_circuit();
    CMatrix u = circuit_unitary(c);
    // Control on the new last qubit (least significant bit).
    CMatrix cu = circuit_unitary(c.widened(4).controlled(3, 4));
    for (Eigen::Index i = 0; i < 8; ++i) {
        for (Eigen::Index j = 0; j < 8; ++j) {
            EXPECT_NEAR(std::abs(cu(2 * i, 2 * j) - (i == j ? 1.0 : 0.0)), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(cu(2 * i + 1, 2 * j + 1) - u(i, j)), 0.0, 1e-12);
        }
    }
}

TEST(Circuit, TextRoundTrip) {
    Circuit c = sample_circuit();
    c.append(Gate::barrier());
    c.append(Gate::rx(1, 0.1 + 0.2));
    auto back = Circuit::from_text(c.to_text());
    EXPECT_EQ(back, c);
    EXPECT_THROW(Circuit::from_text("H 0\n"), ValidationError);
    EXPECT_THROW(Circuit::from_text("width 2\nFOO 0\n"), ValidationError);
}

TEST(Fold, DepthFormulaAndUnitary) {
    Circuit c = sample_circuit();
    int d = c.depth();
    CMatrix u = circuit_unitary(c);
    for (int n = 0; n <= 2; ++n) {
        for (int s = 0; s < d; ++s) {
            auto f = fold(c, n, s);
            EXPECT_EQ(f.circuit.depth(), (2 * n + 1) * d + 2 * s) << n << "," << s;
            EXPECT_NEAR(f.scale, 1.0 + 2.0 * (n * d + s) / d, 1e-12);
            EXPECT_LT((circuit_unitary(f.circuit) - u).norm(), 1e-9);
        }
    }
    EXPECT_EQ(fold(c, 0, 0).circuit, c);
    EXPECT_THROW(fold(c, 0, d), ValidationError);
}

TEST(Fold, Parameters) {
    EXPECT_EQ(fold_parameters(1.0, 5), (std::pair<int, int>{0, 0}));
    EXPECT_EQ(fold_parameters(3.0, 5), (std::pair<int, int>{1, 0}));
    EXPECT_EQ(fold_parameters(1.4, 5), (std::pair<int, int>{0, 1}));
    EXPECT_THROW(fold_parameters(1.3, 5), ValidationError);
    EXPECT_THROW(fold_parameters(0.5, 5), ValidationError);
    auto scales = realizable_scales(4, 2.0);
    EXPECT_EQ(scales.size(), 3u);
    EXPECT_NEAR(scales.back(), 2.0, 1e-12);
}

TEST(Trotter, StepStructure) {
    Circuit step = trotter_step(model().hamiltonian_terms, 0.1);
    EXPECT_EQ(step.width(), 3);
    EXPECT_EQ(step.gate_count(), 45u);
    EXPECT_EQ(trotter_template_strings().size(), 16u);
}

TEST(Trotter, FirstOrderError) {
    const auto &m = model();
    double e1 = 0, e2 = 0;
    for (auto [dt, err] : {std::pair{0.1, &e1}, std::pair{0.05, &e2}}) {
        int steps = static_cast<int>(std::lround(1.0 / dt));
        CMatrix exact = evolution_operator(m.embedded_hamiltonian, 1.0);
        CMatrix approx = trotter_unitary(m.hamiltonian_terms, dt, steps);
        // Compare up to the dropped global phase of the identity term.
        Complex ph = std::polar(1.0, -m.hamiltonian_terms.coefficient("000") * 1.0);
        *err = operator_norm(exact - ph * approx);
    }
    EXPECT_LT(e1, 0.1);
    EXPECT_GT(e1 / e2, 1.8);
    EXPECT_LT(operator_norm(trotter_unitary(m.hamiltonian_terms, 0.1, 0) - CMatrix::Identity(8, 8)), 1e-15);
}

TEST(Trotter, CircuitMatchesUnitary) {
    const auto &m = model();
    Circuit c = compile_evolution(m.hamiltonian_terms, 0.3, 0.1, false, 0);
    EXPECT_LT((circuit_unitary(c) - trotter_unitary(m.hamiltonian_terms, 0.1, 3)).norm(), 1e-12);
}

TEST(Trotter, RejectsForeignStrings) {
    auto d = model().hamiltonian_terms;
    d.terms[PauliString::parse("111")] = 0.1;
    EXPECT_THROW(trotter_step(d, 0.1), ValidationError);
    auto ident = build_vacuum_model(LatticeSpec{}, {0.6, 0.1}, {1, 2, 3, 4, 5, 6, 7, 8});
    EXPECT_THROW(trotter_step(ident.hamiltonian_terms, 0.1), ValidationError);
}

TEST(Trotter, GridSteps) {
    EXPECT_EQ(grid_steps(2.5, 0.1), 25);
    EXPECT_EQ(grid_steps(0.0, 0.1), 0);
    EXPECT_THROW(grid_steps(0.25, 0.1), ValidationError);
    EXPECT_THROW(grid_steps(1.0, 0.0), ValidationError);
    EXPECT_THROW(grid_steps(-0.1, 0.1), ValidationError);
}

TEST(Trotter, PreparationCircuit) {
    auto psi = simulate_pure(preparation_circuit(3, 2), StateVector::basis(3, 0));
    EXPECT_NEAR(std::abs(psi.amplitudes[2]), 1.0, 1e-15);
}

TEST(Interferometer, AncillaReadsCorrelator) {
    const auto &m = model();
    double dt = 0.1, t = 0.5, s = 0.2;
    CMatrix ut = trotter_unitary(m.hamiltonian_terms, dt, 5);
    CMatrix us = trotter_unitary(m.hamiltonian_terms, dt, 2);
    CMatrix uts = trotter_unitary(m.hamiltonian_terms, dt, 3);
    CVector vac = m.vacuum_state();
    for (auto [a, b] : {std::pair{"033", "330"}, std::pair{"303", "003"}, std::pair{"000", "333"}}) {
        auto pa = PauliString::parse(a), pb = PauliString::parse(b);
        Complex amp = (vac.adjoint() * ut.adjoint() * pauli_matrix(pa) * uts * pauli_matrix(pb) * us * vac)(0, 0);
        for (double phi : {0.0, kPi / 2, 0.4}) {
            Circuit c = green_circuit(m.hamiltonian_terms, t, s, dt, pa, pb, phi, m.vacuum_index);
            auto rho = simulate_density(c, DensityMatrix::basis(4, 0), NoiseModel::noiseless());
            EXPECT_NEAR(ancilla_z(rho.matrix), (std::polar(1.0, -phi) * amp).real(), 1e-10) << a << b << phi;
        }
    }
    EXPECT_THROW(green_circuit(m.hamiltonian_terms, 0.1, 0.2, dt, PauliString::parse("003"),
                               PauliString::parse("003"), 0.0, 2),
                 ValidationError);
}

TEST(Interferometer, MachZehnderAndHadamardTest) {
    const auto &m = model();
    CMatrix u = evolution_operator(m.embedded_hamiltonian, 0.7);
    CVector v = m.vacuum_state();
    CMatrix rho = v * v.adjoint();
    rho = 0.8 * rho + 0.2 * CMatrix::Identity(8, 8) / 8.0;
    Complex tr = (u * rho).trace();
    for (double phi : {0.0, 0.9, 2.0}) {
        auto mz = mach_zehnder_reference(rho, u, phi);
        auto ht = hadamard_test_reference(rho, u, phi);
        EXPECT_NEAR(mz.rho_out.trace().real(), 1.0, 1e-12);
        EXPECT_NEAR(mz.visibility, std::abs(tr), 1e-12);
        EXPECT_NEAR(ht.z_expectation, std::abs(tr) * std::cos(phi - std::arg(tr)), 1e-12);
        EXPECT_LT((mz.rho_out.topLeftCorner(8, 8) - ht.rho_out.topLeftCorner(8, 8)).norm(), 1e-12);
        EXPECT_LT((mz.rho_out.bottomRightCorner(8, 8) - ht.rho_out.bottomRightCorner(8, 8)).norm(), 1e-12);
        EXPECT_LT((mz.rho_out.topRightCorner(8, 8) + ht.rho_out.topRightCorner(8, 8)).norm(), 1e-12);
        double z_mz = (mz.rho_out.topLeftCorner(8, 8).trace() - mz.rho_out.bottomRightCorner(8, 8).trace()).real();
        EXPECT_NEAR(z_mz, ht.z_expectation, 1e-12);
        EXPECT_NEAR(mz.vertical_intensity, 0.5 * (1 + z_mz), 1e-12);
    }
    EXPECT_THROW(mach_zehnder_reference(2 * rho, u, 0.0), ValidationError);
    EXPECT_THROW(mach_zehnder_reference(rho, 2 * u, 0.0), ValidationError);
}

}  // namespace
}  // namespace znq
