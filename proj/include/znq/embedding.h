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

#include <cstdint>
#include <map>
#include <vector>

#include "znq/linalg.h"

namespace znq {

/// Assignment of padded sector states to computational basis states.
/// permutation[l - 1] = pi(l): computational state l (1-indexed, qubit 0 the
/// most significant bit, so l = 1 is |0...0>) holds padded sector state pi(l).
struct Embedding {
    std::vector<int> permutation;
    int num_qubits = 0;
    int objective_value = 0;

    std::size_t dimension() const { return permutation.size(); }
    /// 0-based computational index holding 0-based sector state `k`.
    std::size_t computational_index(std::size_t k) const;
};

/// The permutation (7,6,1,2,4,5,8,3), optimal for the N = 4, Z_3 vacuum sector.
std::vector<int> reference_permutation();

std::vector<int> identity_permutation(std::size_t dim);

/// Smallest M with 2^M >= d (at least 1).
int qubits_for_dimension(std::size_t d);

/// Throws ValidationError unless `perm` is a bijection on {1..size}.
void validate_permutation(const std::vector<int> &perm);

/// Pads H with zero rows/columns to 2^M and relabels:
/// out[l][m] = padded[pi(l)][pi(m)] (1-indexed).
CMatrix pad_and_permute(const CMatrix &h_sector, const std::vector<int> &perm);

/// Embeds a sector-basis vector the same way.
CVector embed_vector(const CVector &v_sector, const std::vector<int> &perm);

/// Full-weight Pauli count of pad_and_permute(h, perm).
int embedding_objective(const CMatrix &h_sector, const std::vector<int> &perm);

struct BruteForceResult {
    Embedding best;
    /// Objective of every permutation, sorted descending.
    std::vector<int> sorted_objectives;
    /// objective -> number of permutations.
    std::map<int, std::size_t> histogram;
    int identity_objective = 0;
};

/// Exhaustive search over all (2^M)! permutations. Only M <= 3 is accepted.
/// Ties are broken by the lexicographically smallest permutation, so the
/// result does not depend on the thread count.
BruteForceResult brute_force_search(const CMatrix &h_sector);

struct GreedyOptions {
    int restarts = 5;
    std::uint64_t seed = 12345;
    /// Use the cached-trace evaluator from this qubit count on.
    int incremental_from_qubits = 5;
};

/// Best-improvement descent over all transpositions of computational indices,
/// from `restarts` random starts. Ties among improving swaps go to the
/// lexicographically smallest (i, j); ties among restarts to the smallest
/// (objective, permutation).
Embedding greedy_local_search(const CMatrix &h_sector, const GreedyOptions &options);

/// One descent from `start`. `incremental` selects the evaluator.
Embedding local_descent(const CMatrix &h_sector, std::vector<int> start, bool incremental);

/// Objectives after every transposition (i < j, lexicographic) of `perm`.
std::vector<int> neighbor_objectives(const CMatrix &h_sector, const std::vector<int> &perm,
                                     bool incremental);

}  // namespace znq
