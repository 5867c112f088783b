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

#include "znq/trotter.h"

#include <cmath>
#include <set>

#include "znq/errors.h"
#include "znq/simulator.h"

namespace znq {

const std::vector<PauliString> &trotter_template_strings() {
    static const std::vector<PauliString> strings = [] {
        std::vector<PauliString> out;
        for (const char *s : {"000", "100", "030", "001", "003", "011", "022", "033", "031", "103",
                              "301", "303", "330", "331", "311", "322"}) {
            out.push_back(PauliString::parse(s));
        }
        return out;
    }();
    return strings;
}

Circuit trotter_step(const PauliDecomposition &h, double dt) {
    if (h.num_qubits != 3) {
        throw ValidationError("Trotter step expects a 3-qubit Hamiltonian, got " +
                              std::to_string(h.num_qubits) + " qubits");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ValidationError("Trotter step needs dt > 0");
    }
    const auto &allowed = trotter_template_strings();
    std::set<PauliString> allowed_set(allowed.begin(), allowed.end());
    for (const auto &[p, c] : h.terms) {
        if (!allowed_set.count(p)) {
            throw ValidationError("Hamiltonian term " + p.digits() +
                                  " has no Trotter block; the embedding differs from the supported one");
        }
    }
    auto a = [&](const char *s) { return 2.0 * h.coefficient(s) * dt; };

    Circuit c(3);
    // Single-qubit block.
    c.append(Gate::rx(0, a("100")));
    c.append(Gate::rz(1, a("030")));
    c.append(Gate::rx(2, a("001")));
    c.append(Gate::rz(2, a("003")));

    // Two-qubit terms on qubits 1, 2.
    c.append(Gate::cnot(1, 2));
    c.append(Gate::rx(1, a("011")));
    c.append(Gate::cz(1, 2));
    c.append(Gate::rx(1, -a("022")));
    c.append(Gate::cz(1, 2));
    c.append(Gate::rz(2, a("033")));
    c.append(Gate::cnot(1, 2));

    // Z1 X2 and X0 Z2.
    c.append(Gate::cy(1, 2));
    c.append(Gate::rx(2, a("031")));
    c.append(Gate::cy(1, 2));
    c.append(Gate::h(0));
    c.append(Gate::h(2));
    c.append(Gate::cy(0, 2));
    c.append(Gate::rx(2, a("103")));
    c.append(Gate::cy(0, 2));
    c.append(Gate::h(0));
    c.append(Gate::h(2));

    // Z0 X2, Z0 Z2 and Z0 Z1.
    c.append(Gate::cy(0, 2));
    c.append(Gate::rx(2, a("301")));
    c.append(Gate::cy(0, 2));
    c.append(Gate::cnot(0, 2));
    c.append(Gate::rz(2, a("303")));
    c.append(Gate::cnot(0, 2));
    c.append(Gate::cnot(0, 1));
    c.append(Gate::rz(1, a("330")));
    c.append(Gate::cnot(0, 1));

    // Z0 Z1 X2.
    c.append(Gate::cnot(0, 1));
    c.append(Gate::cy(1, 2));
    c.append(Gate::rx(2, a("331")));
    c.append(Gate::cy(1, 2));
    c.append(Gate::cnot(0, 1));

    // Z0 X1 X2 and Z0 Y1 Y2.
    c.append(Gate::cnot(1, 2));
    c.append(Gate::h(1));
    c.append(Gate::cnot(0, 1));
    c.append(Gate::cnot(1, 2));
    c.append(Gate::rz(1, a("311")));
    c.append(Gate::rz(2, -a("322")));
    c.append(Gate::cnot(1, 2));
    c.append(Gate::cnot(0, 1));
    c.append(Gate::h(1));
    c.append(Gate::cnot(1, 2));
    return c;
}

int grid_steps(double t, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("dt must be positive");
    if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("time must be non-negative");
    double r = t / dt;
    double n = std::round(r);
    if (std::abs(r - n) > 1e-9) {
        throw ValidationError("time " + std::to_string(t) + " is not a multiple of dt = " + std::to_string(dt));
    }
    return static_cast<int>(n);
}

Circuit preparation_circuit(int width, std::size_t index) {
    if (index >= (std::size_t{1} << width)) throw ValidationError("preparation index out of range");
    Circuit c(width);
    for (int q = 0; q < width; ++q) {
        if (index & qubit_bit(width, q)) c.append(Gate::x(q));
    }
    return c;
}

Circuit compile_evolution(const PauliDecomposition &h, double t, double dt, bool prepare_vacuum,
                          std::size_t vacuum_index) {
    int steps = grid_steps(t, dt);
    Circuit c(3);
    if (prepare_vacuum) c.append(preparation_circuit(3, vacuum_index));
    if (steps > 0) {
        Circuit step = trotter_step(h, dt);
        for (int k = 0; k < steps; ++k) c.append(step);
    }
    return c;
}

CMatrix trotter_unitary(const PauliDecomposition &h, double dt, int steps) {
    CMatrix u = CMatrix::Identity(8, 8);
    if (steps <= 0) return u;
    CMatrix step = circuit_unitary(trotter_step(h, dt));
    for (int k = 0; k < steps; ++k) u = step * u;
    return u;
}

}  // namespace znq
