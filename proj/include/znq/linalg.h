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

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

namespace znq {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Largest entry of |M - M^dagger|.
double hermiticity_defect(const CMatrix &m);

/// Throws InvariantError naming `what` if M is not Hermitian to `tol`.
void require_hermitian(const CMatrix &m, double tol, const char *what);

/// exp(-i H t) for Hermitian H via its eigendecomposition. t == 0 returns the
/// identity exactly.
CMatrix evolution_operator(const CMatrix &h, double t);

/// Operator 2-norm (largest singular value).
double operator_norm(const CMatrix &m);

bool is_power_of_two(std::size_t x);

/// log2 of a power of two; throws ValidationError otherwise.
int exact_log2(std::size_t x);

/// Bit of qubit q inside an index over `width` qubits. Qubit 0 is the most
/// significant bit.
inline std::size_t qubit_bit(int width, int q) {
    return std::size_t{1} << (width - 1 - q);
}

}  // namespace znq
