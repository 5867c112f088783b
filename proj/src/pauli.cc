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

#include "znq/pauli.h"

#include <bit>
#include <cmath>

#include "znq/errors.h"

namespace znq {

PauliString PauliString::parse(const std::string &digits) {
    if (digits.empty()) throw ValidationError("empty Pauli digit string");
    std::vector<std::uint8_t> idx;
    idx.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '0' || ch > '3') {
            throw ValidationError("Pauli digit string may only contain 0-3: '" + digits + "'");
        }
        idx.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return PauliString(std::move(idx));
}

int PauliString::weight() const {
    int w = 0;
    for (auto i : indices) w += i != 0;
    return w;
}

bool PauliString::is_diagonal() const {
    for (auto i : indices) {
        if (i == 1 || i == 2) return false;
    }
    return true;
}

std::string PauliString::digits() const {
    std::string s;
    for (auto i : indices) s.push_back(static_cast<char>('0' + i));
    return s;
}

std::string PauliString::letters() const {
    static const char names[] = "IXYZ";
    std::string s;
    for (auto i : indices) s.push_back(names[i]);
    return s;
}

std::size_t PauliString::flip_mask() const {
    std::size_t mask = 0;
    int q = num_qubits();
    for (int k = 0; k < q; ++k) {
        if (indices[k] == 1 || indices[k] == 2) mask |= qubit_bit(q, k);
    }
    return mask;
}

std::size_t PauliString::phase_mask() const {
    std::size_t mask = 0;
    int q = num_qubits();
    for (int k = 0; k < q; ++k) {
        if (indices[k] == 2 || indices[k] == 3) mask |= qubit_bit(q, k);
    }
    return mask;
}

Complex pauli_phase(const PauliString &p, std::size_t c) {
    // Y|0> = i|1>, Y|1> = -i|0>, Z|b> = (-1)^b |b>.
    int ys = 0;
    for (auto i : p.indices) ys += i == 2;
    int sign_bits = std::popcount(c & p.phase_mask());
    static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex f = ipow[ys % 4];
    return (sign_bits & 1) ? -f : f;
}

CMatrix pauli_matrix(const PauliString &p) {
    std::size_t dim = std::size_t{1} << p.num_qubits();
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::size_t x = p.flip_mask();
    for (std::size_t c = 0; c < dim; ++c) {
        m(static_cast<Eigen::Index>(c ^ x), static_cast<Eigen::Index>(c)) = pauli_phase(p, c);
    }
    return m;
}

Complex pauli_trace(const PauliString &p, const CMatrix &m) {
    std::size_t dim = std::size_t{1} << p.num_qubits();
    if (static_cast<std::size_t>(m.rows()) != dim || m.rows() != m.cols()) {
        throw ValidationError("Pauli string width does not match matrix dimension");
    }
    std::size_t x = p.flip_mask();
    Complex acc = 0;
    for (std::size_t c = 0; c < dim; ++c) {
        acc += pauli_phase(p, c) * m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ x));
    }
    return acc;
}

double PauliDecomposition::coefficient(const PauliString &p) const {
    auto it = terms.find(p);
    return it == terms.end() ? 0.0 : it->second;
}

std::size_t PauliDecomposition::non_identity_count() const {
    std::size_t n = 0;
    for (const auto &[p, c] : terms) n += p.weight() > 0;
    return n;
}

std::size_t PauliDecomposition::full_weight_count() const {
    std::size_t n = 0;
    for (const auto &[p, c] : terms) n += p.weight() == num_qubits;
    return n;
}

namespace {

int qubits_for(const CMatrix &m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("Pauli decomposition needs a square matrix");
    }
    return exact_log2(static_cast<std::size_t>(m.rows()));
}

}  // namespace

PauliDecomposition decompose(const CMatrix &m, double zero_tolerance) {
    int q = qubits_for(m);
    double defect = hermiticity_defect(m);
    if (defect > 1e-10) {
        throw ValidationError("Pauli decomposition needs a Hermitian matrix (max |M - M^dagger| = " +
                              std::to_string(defect) + ")");
    }
    PauliDecomposition d;
    d.num_qubits = q;
    d.zero_tolerance = zero_tolerance;
    double scale = 1.0 / static_cast<double>(std::size_t{1} << q);
    std::size_t count = std::size_t{1} << (2 * q);
    std::vector<std::uint8_t> idx(static_cast<std::size_t>(q));
    for (std::size_t code = 0; code < count; ++code) {
        std::size_t rest = code;
        for (int k = q - 1; k >= 0; --k) {
            idx[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(rest & 3);
            rest >>= 2;
        }
        PauliString p(idx);
        double c = pauli_trace(p, m).real() * scale;
        if (std::abs(c) > zero_tolerance) {
            d.terms.emplace(std::move(p), c);
        }
    }
    return d;
}

CMatrix reconstruct(const PauliDecomposition &d) {
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << d.num_qubits);
    CMatrix m = CMatrix::Zero(dim, dim);
    for (const auto &[p, c] : d.terms) {
        std::size_t x = p.flip_mask();
        for (Eigen::Index col = 0; col < dim; ++col) {
            auto uc = static_cast<std::size_t>(col);
            m(static_cast<Eigen::Index>(uc ^ x), col) += c * pauli_phase(p, uc);
        }
    }
    return m;
}

int objective_full_weight(const PauliDecomposition &d) {
    return static_cast<int>(d.full_weight_count());
}

std::vector<PauliString> full_weight_strings(int num_qubits) {
    std::vector<PauliString> out;
    std::vector<std::uint8_t> idx(static_cast<std::size_t>(num_qubits), 1);
    while (true) {
        out.emplace_back(idx);
        int k = num_qubits - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == 3) {
            idx[static_cast<std::size_t>(k)] = 1;
            --k;
        }
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
    }
    return out;
}

int count_full_weight_terms(const CMatrix &m, double zero_tolerance) {
    int q = qubits_for(m);
    double scale = 1.0 / static_cast<double>(std::size_t{1} << q);
    int n = 0;
    for (const auto &p : full_weight_strings(q)) {
        if (std::abs(pauli_trace(p, m).real() * scale) > zero_tolerance) ++n;
    }
    return n;
}

}  // namespace znq
