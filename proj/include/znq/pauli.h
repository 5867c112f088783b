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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "znq/linalg.h"

namespace znq {

/// Tensor product of single-qubit Paulis, 0 = I, 1 = X, 2 = Y, 3 = Z. The
/// first index acts on qubit 0, the most significant bit of the computational
/// index.
struct PauliString {
    std::vector<std::uint8_t> indices;

    PauliString() = default;
    explicit PauliString(std::vector<std::uint8_t> idx) : indices(std::move(idx)) {}
    /// Parses "013" style digit strings.
    static PauliString parse(const std::string &digits);

    int num_qubits() const { return static_cast<int>(indices.size()); }
    int weight() const;
    bool is_diagonal() const;
    /// Digit form, e.g. "013".
    std::string digits() const;
    /// Letter form, e.g. "IXZ".
    std::string letters() const;

    /// Bitmask (qubit 0 = MSB) of positions carrying X or Y.
    std::size_t flip_mask() const;
    /// Bitmask of positions carrying Z or Y.
    std::size_t phase_mask() const;

    auto operator<=>(const PauliString &) const = default;
    bool operator==(const PauliString &) const = default;
};

/// Dense 2^q x 2^q matrix of the string.
CMatrix pauli_matrix(const PauliString &p);

/// Amplitude factor of P on basis state |c>: P|c> = factor * |c ^ flip_mask>.
Complex pauli_phase(const PauliString &p, std::size_t c);

/// Tr(P M) computed in O(2^q) from the sparse structure of P.
Complex pauli_trace(const PauliString &p, const CMatrix &m);

struct PauliDecomposition {
    int num_qubits = 0;
    std::map<PauliString, double> terms;
    double zero_tolerance = 1e-10;

    /// Coefficient of `p`, 0 when absent.
    double coefficient(const PauliString &p) const;
    double coefficient(const std::string &digits) const { return coefficient(PauliString::parse(digits)); }
    /// Terms other than the all-identity string.
    std::size_t non_identity_count() const;
    /// Number of terms acting on every qubit.
    std::size_t full_weight_count() const;
};

/// c_P = Tr(P M) / 2^q for all 4^q strings; terms with |c_P| <= tolerance are
/// dropped. Requires a power-of-two dimension and Hermiticity to 1e-10.
PauliDecomposition decompose(const CMatrix &m, double zero_tolerance = 1e-10);

/// Sum_P c_P P.
CMatrix reconstruct(const PauliDecomposition &d);

/// Number of full-weight terms in the decomposition.
int objective_full_weight(const PauliDecomposition &d);

/// Same count computed directly from M over the 3^q full-weight strings only.
int count_full_weight_terms(const CMatrix &m, double zero_tolerance = 1e-10);

/// Every full-weight string on q qubits in lexicographic order.
std::vector<PauliString> full_weight_strings(int num_qubits);

}  // namespace znq
