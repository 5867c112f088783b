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

#include <span>
#include <string>
#include <vector>

#include "znq/lattice.h"
#include "znq/linalg.h"

namespace znq {

/// Eigenvalue label of the charge-conjugation sector. C+ satisfies C+^N = 1,
/// so its eigenvalues are c = exp(2 pi i m / N); the two-site translation
/// T2 = C+^2 has eigenvalue c^2. For N = 4 this gives the four sectors
/// (+,+), (+,-), (-,+i), (-,-i).
struct SectorLabel {
    int num_sites = 4;
    int m = 0;

    Complex c() const;
    Complex t2() const;
    /// "(+,+)"-style name when both eigenvalues are in {+-1, +-i}, otherwise
    /// "(t2=..., c=exp(2pi i m/N))".
    std::string name() const;

    bool operator==(const SectorLabel &) const = default;
};

struct SectorBlock {
    SectorLabel label;
    /// Columns are orthonormal vectors over the gauge-invariant basis.
    CMatrix basis_vectors;
    /// basis_vectors^dagger H basis_vectors.
    CMatrix hamiltonian;
    /// Canonical index of the orbit representative behind each column.
    std::vector<std::size_t> representatives;

    Eigen::Index dimension() const { return basis_vectors.cols(); }
};

enum class ConjugationDirection { Plus, Minus };

/// C+ shifts matter and links by one site, swaps particles and holes, and
/// flips the field sign: n'_{x+1} = 1 - n_x, k'_{x+1} = n - 1 - k_x. It acts
/// as a permutation matrix on the basis. C- = C+^dagger.
CMatrix charge_conjugation_matrix(std::span<const GaugeConfig> basis, const LatticeSpec &spec,
                                  ConjugationDirection direction = ConjugationDirection::Plus);

/// Translation by `shift` sites (occupations and links move together).
CMatrix translation_matrix(std::span<const GaugeConfig> basis, const LatticeSpec &spec, int shift);

/// Splits H into C+ eigensectors. Each orbit of C+ contributes the vector
/// P_c |rep> with P_c = (1/N) sum_j conj(c)^j C+^j to every sector whose c
/// satisfies c^L = 1 (L the orbit length). Within a sector, vectors are
/// ordered by the hop distance of their orbit from the Dirac vacuum, then by
/// representative index; each vector's first nonzero component is made real
/// and positive. Sectors are ordered by T2 eigenvalue and then by c.
/// Throws InvariantError if ||[H, C+]|| exceeds `tolerance`.
std::vector<SectorBlock> sector_decompose(std::span<const GaugeConfig> basis,
                                          const LatticeSpec &spec, const CMatrix &h,
                                          double tolerance = 1e-10);

struct VacuumSector {
    SectorBlock block;
    std::size_t block_index = 0;
    /// Column of block.basis_vectors equal to the zero-field vacuum.
    Eigen::Index vacuum_position = 0;
};

/// Locates the block holding the zero-field Dirac vacuum as one of its basis
/// vectors (overlap 1 to 1e-12). Validates orthonormality of every block
/// first. Throws InvariantError when no block qualifies.
VacuumSector vacuum_sector(std::span<const SectorBlock> blocks,
                           std::span<const GaugeConfig> basis, const LatticeSpec &spec);

}  // namespace znq
