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

#include <vector>

#include "znq/circuit.h"
#include "znq/pauli.h"

namespace znq {

/// Strings the three-qubit Trotter step knows how to exponentiate: the
/// identity, four single-qubit terms, seven two-qubit terms and three
/// three-qubit terms of the optimally embedded vacuum-sector Hamiltonian.
const std::vector<PauliString> &trotter_template_strings();

/// One first-order step, blocks in fixed order:
///   single-qubit  100, 030, 001, 003
///   two-qubit     (011, 022, 033), (031, 103), (301, 303, 330)
///   three-qubit   331, then (311, 322)
/// The identity coefficient only contributes a global phase and is dropped.
/// Throws ValidationError if `h` is not on 3 qubits or carries a string
/// outside the template (a sign of a different embedding).
Circuit trotter_step(const PauliDecomposition &h, double dt);

/// round(t / dt); throws ValidationError unless t >= 0, dt > 0 and t / dt is
/// within 1e-9 of an integer.
int grid_steps(double t, double dt);

/// X gates mapping |0...0> to basis state `index` (qubit 0 is the MSB).
Circuit preparation_circuit(int width, std::size_t index);

/// Optional preparation of `vacuum_index`, then round(t / dt) Trotter steps.
Circuit compile_evolution(const PauliDecomposition &h, double t, double dt, bool prepare_vacuum,
                          std::size_t vacuum_index);

/// The unitary of `steps` Trotter steps; exactly the identity for 0 steps.
CMatrix trotter_unitary(const PauliDecomposition &h, double dt, int steps);

}  // namespace znq
