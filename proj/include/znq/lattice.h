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
#include <span>
#include <string>
#include <vector>

#include "znq/linalg.h"

namespace znq {

/// Periodic chain of `num_sites` staggered-fermion sites with Z_n link fields.
struct LatticeSpec {
    int num_sites = 4;
    int group_order = 3;
    int filling = 2;

    static LatticeSpec half_filled(int num_sites, int group_order) {
        return LatticeSpec{num_sites, group_order, num_sites / 2};
    }

    /// Throws ValidationError unless N is even and positive, n >= 1 and
    /// 0 <= filling <= N. n = 1 is accepted as the degenerate one-state link.
    void validate() const;

    bool operator==(const LatticeSpec &) const = default;
};

/// One basis element of the physical Hilbert space. Link x joins sites x and
/// x + 1; link N - 1 wraps around to site 0.
struct GaugeConfig {
    std::vector<int> field_indices;
    std::vector<std::uint8_t> occupations;

    /// Canonical order: lexicographic on (field_indices, occupations).
    auto operator<=>(const GaugeConfig &) const = default;
    bool operator==(const GaugeConfig &) const = default;
};

/// Dimensionless hopping xi = J^2 / g^2 and mass mu = m J / g^2.
struct Couplings {
    double xi = 0.6;
    double mu = 0.1;
};

/// e_k = sqrt(2 pi / n) (k - (n - 1) / 2). Throws std::domain_error for k
/// outside [0, n).
double electric_eigenvalue(int k, int n);

/// Z_n Gauss law at every site:
/// k_x - k_{x-1} == n_x + ((-1)^x - 1) / 2  (mod n).
bool check_gauss_law(const GaugeConfig &config, const LatticeSpec &spec);

/// All gauge-invariant configurations at the configured filling, sorted in
/// canonical order. Built site by site: the field entering each site fixes the
/// field leaving it, and the periodic closure is checked at the end.
std::vector<GaugeConfig> enumerate_basis(const LatticeSpec &spec);

/// Hamiltonian on `basis`:
///   diagonal  mu sum_x (-1)^x n_x + (1/2) sum_x e_{k_x}^2
///   hopping   xi / 2 between configurations related by moving one fermion
///             across a link, the link field raised (fermion moving toward
///             lower site index) or lowered (toward higher index) by one.
/// Throws InvariantError if a configuration violates the Gauss law or a hop
/// leaves the basis.
CMatrix build_hamiltonian(std::span<const GaugeConfig> basis, const Couplings &couplings,
                          const LatticeSpec &spec);

/// Dirac vacuum: odd sites filled, uniform link field `field_index`.
GaugeConfig dirac_vacuum(const LatticeSpec &spec, int field_index);

/// The zero-field Dirac vacuum (k = (n - 1) / 2). Requires odd n.
GaugeConfig zero_field_vacuum(const LatticeSpec &spec);

/// Index of `config` in `basis` or -1.
std::ptrdiff_t find_config(std::span<const GaugeConfig> basis, const GaugeConfig &config);

/// All configurations reachable from `config` by one hop, in link order.
std::vector<GaugeConfig> hop_neighbors(const GaugeConfig &config, const LatticeSpec &spec);

/// Hop distance of every basis element from `origin` (-1 if unreachable).
std::vector<int> hop_distances(std::span<const GaugeConfig> basis, const LatticeSpec &spec,
                               const GaugeConfig &origin);

/// Diagonal of the particle-density operator nu = (1/N) sum_x (-1)^x n_x + 1/2,
/// normalized so that the Dirac vacuum has density 0 and a two-meson state 1.
RVector particle_density_diagonal(std::span<const GaugeConfig> basis, const LatticeSpec &spec);

/// Field labels per link. For n = 3 uses the "-", "0", "+" notation of the
/// electric field values; otherwise the raw indices separated by spaces.
std::string field_label(const GaugeConfig &config, int group_order);

}  // namespace znq
