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

#include "znq/interferometer.h"

#include <cmath>

#include "znq/errors.h"
#include "znq/trotter.h"

namespace znq {

Circuit controlled_pauli(const PauliString &p, int control, int width) {
    Circuit c(width);
    for (int k = 0; k < p.num_qubits(); ++k) {
        switch (p.indices[static_cast<std::size_t>(k)]) {
            case 1: c.append(Gate::cnot(control, k)); break;
            case 2: c.append(Gate::cy(control, k)); break;
            case 3: c.append(Gate::cz(control, k)); break;
            default: break;
        }
    }
    return c;
}

Circuit green_circuit(const PauliDecomposition &h, double t, double s, double dt,
                      const PauliString &alpha, const PauliString &beta, double phi,
                      std::size_t vacuum_index) {
    if (s > t + 1e-12) {
        throw ValidationError("green circuit needs s <= t (got s = " + std::to_string(s) +
                              ", t = " + std::to_string(t) + ")");
    }
    if (alpha.num_qubits() != 3 || beta.num_qubits() != 3) {
        throw ValidationError("green circuit Pauli strings must act on 3 qubits");
    }
    int steps_s = grid_steps(s, dt);
    int steps_rest = grid_steps(std::max(t - s, 0.0), dt);
    Circuit c(kGreenWidth);
    c.append(preparation_circuit(3, vacuum_index).widened(kGreenWidth));
    c.append(Gate::h(kAncilla));
    c.append(Gate::phase(kAncilla, phi));
    c.append(Gate::x(kAncilla));
    Circuit step = steps_s + steps_rest > 0 ? trotter_step(h, dt).widened(kGreenWidth) : Circuit(kGreenWidth);
    for (int k = 0; k < steps_s; ++k) c.append(step);
    c.append(controlled_pauli(beta, kAncilla, kGreenWidth));
    c.append(Gate::x(kAncilla));
    for (int k = 0; k < steps_rest; ++k) c.append(step);
    c.append(controlled_pauli(alpha, kAncilla, kGreenWidth));
    c.append(Gate::h(kAncilla));
    return c;
}

double ancilla_z(const CMatrix &rho) {
    double z = 0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        double p = rho(i, i).real();
        z += (i & 1) ? -p : p;
    }
    return z;
}

namespace {

void check_reference_inputs(const CMatrix &rho_r, const CMatrix &u_r) {
    if (rho_r.rows() != rho_r.cols() || u_r.rows() != rho_r.rows() || u_r.cols() != u_r.rows()) {
        throw ValidationError("register state and unitary dimensions differ");
    }
    if (std::abs(rho_r.trace() - Complex(1.0)) > 1e-9) {
        throw ValidationError("register state must have unit trace");
    }
    CMatrix id = CMatrix::Identity(u_r.rows(), u_r.cols());
    if ((u_r.adjoint() * u_r - id).norm() > 1e-9) {
        throw ValidationError("register operation must be unitary");
    }
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

MachZehnderResult mach_zehnder_reference(const CMatrix &rho_r, const CMatrix &u_r, double phi) {
    check_reference_inputs(rho_r, u_r);
    auto n = rho_r.rows();
    CMatrix id = CMatrix::Identity(n, n);
    CMatrix h(2, 2), x(2, 2), p0(2, 2), p1(2, 2);
    double r = 1.0 / std::sqrt(2.0);
    h << r, r, r, -r;
    x << 0, 1, 1, 0;
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    CMatrix ub = kron(h, id);
    CMatrix um = kron(x, id);
    CMatrix u = std::polar(1.0, phi) * kron(p0, id) + kron(p1, u_r);
    CMatrix total = ub * um * u * ub;
    CMatrix rho_in = kron(p0, rho_r);
    MachZehnderResult res;
    res.rho_out = total * rho_in * total.adjoint();
    res.vertical_intensity = res.rho_out.topLeftCorner(n, n).trace().real();
    res.visibility = std::abs((u_r * rho_r).trace());
    return res;
}

HadamardTestResult hadamard_test_reference(const CMatrix &rho_r, const CMatrix &u_r, double phi) {
    check_reference_inputs(rho_r, u_r);
    auto n = rho_r.rows();
    CMatrix id = CMatrix::Identity(n, n);
    CMatrix h(2, 2), x(2, 2), ph(2, 2), p0(2, 2), p1(2, 2);
    double r = 1.0 / std::sqrt(2.0);
    h << r, r, r, -r;
    x << 0, 1, 1, 0;
    ph << 1, 0, 0, std::polar(1.0, phi);
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    CMatrix cu = kron(p0, id) + kron(p1, u_r);
    CMatrix total = kron(h, id) * cu * kron(x, id) * kron(ph, id) * kron(h, id);
    HadamardTestResult res;
    res.rho_out = total * kron(p0, rho_r) * total.adjoint();
    res.z_expectation = (res.rho_out.topLeftCorner(n, n).trace() - res.rho_out.bottomRightCorner(n, n).trace()).real();
    return res;
}

}  // namespace znq
