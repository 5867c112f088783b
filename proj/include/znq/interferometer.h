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

#include "znq/circuit.h"
#include "znq/linalg.h"
#include "znq/pauli.h"

namespace znq {

/// Index of the ancilla in green circuits: the last qubit.
inline constexpr int kAncilla = 3;
inline constexpr int kGreenWidth = 4;

/// One controlled X/Y/Z per non-identity factor of `p`, controlled by
/// `control`. Qubit k of `p` maps to circuit qubit k.
Circuit controlled_pauli(const PauliString &p, int control, int width);

/// Ancilla interferometer for
///   Re{ e^{-i phi} <vac| U^dagger(t) P_alpha U(t - s) P_beta U(s) |vac> }
/// read out as <Z> on the ancilla. Register qubits 0..2, ancilla 3:
///   prepare vac; ancilla H, PHASE(phi), X; U(s); controlled P_beta;
///   ancilla X; U(t - s); controlled P_alpha; ancilla H.
/// U(.) are Trotterized with step dt. Throws ValidationError if s > t or a
/// time is off the dt grid.
Circuit green_circuit(const PauliDecomposition &h, double t, double s, double dt,
                      const PauliString &alpha, const PauliString &beta, double phi,
                      std::size_t vacuum_index);

/// <Z> on the ancilla of a width-4 density matrix.
double ancilla_z(const CMatrix &rho);

struct MachZehnderResult {
    /// State on ancilla (x) register, ancilla first.
    CMatrix rho_out;
    double vertical_intensity = 0.0;
    double visibility = 0.0;
};

/// Interferometer with beam splitters H, mirror X and the phase-shifted
/// controlled U = e^{i phi}|0><0| (x) 1 + |1><1| (x) U_R acting on
/// |0><0| (x) rho_R: rho_out = B M U B rho_in B^+ U^+ M^+ B^+.
/// Throws ValidationError unless Tr rho_R = 1 within 1e-9 and U_R is unitary.
MachZehnderResult mach_zehnder_reference(const CMatrix &rho_r, const CMatrix &u_r, double phi);

struct HadamardTestResult {
    CMatrix rho_out;
    double z_expectation = 0.0;
};

/// Gate version: H, PHASE(phi), X on the ancilla, controlled U_R, H. Its
/// diagonal blocks agree with the interferometer while the off-diagonal
/// blocks change sign; <Z> = |Tr U_R rho_R| cos(phi - arg Tr U_R rho_R).
HadamardTestResult hadamard_test_reference(const CMatrix &rho_r, const CMatrix &u_r, double phi);

}  // namespace znq
