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

#include "znq/linalg.h"

#include <string>

#include "znq/errors.h"

namespace znq {

double hermiticity_defect(const CMatrix &m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("matrix is not square");
    }
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_hermitian(const CMatrix &m, double tol, const char *what) {
    double defect = hermiticity_defect(m);
    if (defect > tol) {
        throw InvariantError(std::string(what) + " is not Hermitian (max |M - M^dagger| = " +
                             std::to_string(defect) + ")");
    }
}

CMatrix evolution_operator(const CMatrix &h, double t) {
    auto n = h.rows();
    if (t == 0.0) {
        return CMatrix::Identity(n, n);
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const auto &vals = es.eigenvalues();
    const auto &vecs = es.eigenvectors();
    CVector phases(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        phases[k] = std::exp(Complex(0.0, -vals[k] * t));
    }
    return vecs * phases.asDiagonal() * vecs.adjoint();
}

double operator_norm(const CMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()[0];
}

bool is_power_of_two(std::size_t x) {
    return x != 0 && (x & (x - 1)) == 0;
}

int exact_log2(std::size_t x) {
    if (!is_power_of_two(x)) {
        throw ValidationError("dimension " + std::to_string(x) + " is not a power of two");
    }
    int k = 0;
    while ((std::size_t{1} << k) < x) {
        ++k;
    }
    return k;
}

}  // namespace znq
