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

#include <cmath>
#include <map>
#include <string>

#include "znq/linalg.h"

namespace znq::testing {

/// Vacuum-sector Hamiltonian for N = 4, Z_3 in the canonical sector order.
inline CMatrix vacuum_block_reference(double xi, double mu) {
    const double p = kPi, r = xi / std::sqrt(2.0);
    CMatrix h = CMatrix::Zero(7, 7);
    const double diag[7] = {-2 * mu, p / 3, 2 * mu + 2 * p / 3, p, -2 * mu + 4 * p / 3, 4 * p / 3, 2 * mu + 4 * p / 3};
    for (int i = 0; i < 7; ++i) h(i, i) = diag[i];
    const double off[6] = {xi, r, r, r, r, xi};
    for (int i = 0; i < 6; ++i) h(i, i + 1) = h(i + 1, i) = off[i];
    return h;
}

/// C = -1 block of the T2 = +1 sector.
inline CMatrix odd_block_reference(double xi, double mu) {
    const double p = kPi, r = xi / std::sqrt(2.0);
    CMatrix h = CMatrix::Zero(5, 5);
    const double diag[5] = {p / 3, 2 * mu + 2 * p / 3, p, -2 * mu + 4 * p / 3, 4 * p / 3};
    for (int i = 0; i < 5; ++i) h(i, i) = diag[i];
    for (int i = 0; i < 4; ++i) h(i, i + 1) = h(i + 1, i) = r;
    return h;
}

/// Pauli coefficients of the identity-embedded vacuum block, as printed.
/// The 331 entry is listed with its printed sign; see the sign test.
inline std::map<std::string, double> identity_embedding_table(double xi, double mu) {
    const double p = kPi, s2 = std::sqrt(2.0);
    return {
        {"000", 3 * p / 4},
        {"001", (1 + s2) * xi / 4},
        {"003", p / 12},
        {"011", (2 + s2) * xi / 8},
        {"111", xi / (4 * s2)},
        {"030", -mu},
        {"033", -p / 6 - mu},
        {"031", xi / 4},
        {"022", (2 + s2) * xi / 8},
        {"122", -xi / (4 * s2)},
        {"300", -p / 4},
        {"303", -p / 4},
        {"301", xi / 4},
        {"311", (s2 - 2) * xi / 8},
        {"212", xi / (4 * s2)},
        {"330", -p / 3},
        {"331", (s2 - 1) * xi / 4},
        {"333", p / 6},
        {"322", (s2 - 2) * xi / 8},
        {"221", xi / (4 * s2)},
    };
}

/// Pauli coefficients of the vacuum block under the permutation (7,6,1,2,4,5,8,3).
inline std::map<std::string, double> optimal_embedding_table(double xi, double mu) {
    const double p = kPi, s2 = std::sqrt(2.0);
    return {
        {"000", 3 * p / 4},
        {"003", -p / 6},
        {"100", xi / (2 * s2)},
        {"103", -xi / (2 * s2)},
        {"033", p / 12 + mu},
        {"011", xi / (4 * s2)},
        {"030", p / 2},
        {"330", p / 12 + mu},
        {"022", -xi / (4 * s2)},
        {"001", (4 + s2) * xi / 8},
        {"031", xi / (4 * s2)},
        {"303", p / 12},
        {"331", -xi / (4 * s2)},
        {"311", -xi / (4 * s2)},
        {"301", (4 - s2) * xi / 8},
        {"322", xi / (4 * s2)},
    };
}

/// Particle-density coefficients under the same permutation.
inline std::map<std::string, double> density_table() {
    return {
        {"000", 7.0 / 16}, {"033", 5.0 / 16},  {"330", 3.0 / 16},  {"030", 1.0 / 16},
        {"300", 1.0 / 16}, {"303", 1.0 / 16}, {"003", -1.0 / 16}, {"333", -1.0 / 16},
    };
}

inline const std::pair<double, double> kRegimes[3] = {{0.6, 0.1}, {1.5, 0.5}, {4.0, 1.0}};

}  // namespace znq::testing
