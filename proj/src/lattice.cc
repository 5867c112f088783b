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

#include "znq/lattice.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "znq/errors.h"

namespace znq {

namespace {

int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

// ((-1)^x - 1) / 2: 0 on even sites, -1 on odd sites.
int staggered_offset(int x) {
    return (x % 2 == 0) ? 0 : -1;
}

}  // namespace

void LatticeSpec::validate() const {
    if (num_sites <= 0 || num_sites % 2 != 0) {
        throw ValidationError("num_sites must be even and positive, got " + std::to_string(num_sites));
    }
    if (group_order < 1) {
        throw ValidationError("group_order must be >= 1, got " + std::to_string(group_order));
    }
    if (filling < 0 || filling > num_sites) {
        throw ValidationError("filling must lie in [0, num_sites], got " + std::to_string(filling));
    }
}

double electric_eigenvalue(int k, int n) {
    if (n < 1 || k < 0 || k >= n) {
        throw std::domain_error("field index " + std::to_string(k) + " outside [0, " +
                                std::to_string(n) + ")");
    }
    return std::sqrt(2.0 * kPi / n) * (k - (n - 1) / 2.0);
}

bool check_gauss_law(const GaugeConfig &config, const LatticeSpec &spec) {
    const int N = spec.num_sites;
    const int n = spec.group_order;
    if (static_cast<int>(config.field_indices.size()) != N ||
        static_cast<int>(config.occupations.size()) != N) {
        return false;
    }
    for (int x = 0; x < N; ++x) {
        int left = config.field_indices[mod(x - 1, N)];
        int lhs = config.field_indices[x] - left;
        int rhs = config.occupations[x] + staggered_offset(x);
        if (mod(lhs - rhs, n) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<GaugeConfig> enumerate_basis(const LatticeSpec &spec) {
    spec.validate();
    const int N = spec.num_sites;
    const int n = spec.group_order;
    std::vector<GaugeConfig> out;
    for (std::uint32_t bits = 0; bits < (1u << N); ++bits) {
        if (std::popcount(bits) != spec.filling) {
            continue;
        }
        std::vector<std::uint8_t> occ(N);
        for (int x = 0; x < N; ++x) {
            occ[x] = (bits >> (N - 1 - x)) & 1u;
        }
        for (int k0 = 0; k0 < n; ++k0) {
            std::vector<int> k(N);
            k[0] = k0;
            for (int x = 1; x < N; ++x) {
                k[x] = mod(k[x - 1] + occ[x] + staggered_offset(x), n);
            }
            // Periodic closure at site 0.
            if (mod(k[0] - k[N - 1] - occ[0], n) == 0) {
                out.push_back(GaugeConfig{std::move(k), occ});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::ptrdiff_t find_config(std::span<const GaugeConfig> basis, const GaugeConfig &config) {
    auto it = std::lower_bound(basis.begin(), basis.end(), config);
    if (it == basis.end() || *it != config) {
        return -1;
    }
    return it - basis.begin();
}

std::vector<GaugeConfig> hop_neighbors(const GaugeConfig &config, const LatticeSpec &spec) {
    const int N = spec.num_sites;
    const int n = spec.group_order;
    std::vector<GaugeConfig> out;
    for (int x = 0; x < N; ++x) {
        int y = (x + 1) % N;
        if (config.occupations[x] == config.occupations[y]) {
            continue;
        }
        GaugeConfig next = config;
        std::swap(next.occupations[x], next.occupations[y]);
        // Fermion moving from y to x raises the field on link x; the reverse
        // hop lowers it. Either way the Gauss law is preserved.
        int step = config.occupations[y] ? 1 : -1;
        next.field_indices[x] = mod(next.field_indices[x] + step, n);
        out.push_back(std::move(next));
    }
    return out;
}

CMatrix build_hamiltonian(std::span<const GaugeConfig> basis, const Couplings &couplings,
                          const LatticeSpec &spec) {
    spec.validate();
    const int N = spec.num_sites;
    const int n = spec.group_order;
    const auto dim = static_cast<Eigen::Index>(basis.size());
    CMatrix h = CMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto &c = basis[i];
        if (!check_gauss_law(c, spec)) {
            throw InvariantError("basis element " + std::to_string(i) + " violates the Gauss law");
        }
        double diag = 0.0;
        for (int x = 0; x < N; ++x) {
            diag += couplings.mu * ((x % 2 == 0) ? 1.0 : -1.0) * c.occupations[x];
            double e = electric_eigenvalue(c.field_indices[x], n);
            diag += 0.5 * e * e;
        }
        h(i, i) += diag;
        for (const auto &next : hop_neighbors(c, spec)) {
            auto j = find_config(basis, next);
            if (j < 0) {
                throw InvariantError("hop from basis element " + std::to_string(i) +
                                     " leaves the basis");
            }
            h(j, i) += couplings.xi / 2.0;
        }
    }
    return h;
}

GaugeConfig dirac_vacuum(const LatticeSpec &spec, int field_index) {
    spec.validate();
    GaugeConfig c;
    c.field_indices.assign(spec.num_sites, field_index);
    c.occupations.resize(spec.num_sites);
    for (int x = 0; x < spec.num_sites; ++x) {
        c.occupations[x] = (x % 2 == 1) ? 1 : 0;
    }
    return c;
}

GaugeConfig zero_field_vacuum(const LatticeSpec &spec) {
    if (spec.group_order % 2 == 0) {
        throw ValidationError("Z_" + std::to_string(spec.group_order) +
                              " has no zero electric field eigenvalue");
    }
    return dirac_vacuum(spec, (spec.group_order - 1) / 2);
}

std::vector<int> hop_distances(std::span<const GaugeConfig> basis, const LatticeSpec &spec,
                               const GaugeConfig &origin) {
    std::vector<int> dist(basis.size(), -1);
    auto start = find_config(basis, origin);
    if (start < 0) {
        return dist;
    }
    std::deque<std::size_t> queue{static_cast<std::size_t>(start)};
    dist[start] = 0;
    while (!queue.empty()) {
        auto i = queue.front();
        queue.pop_front();
        for (const auto &next : hop_neighbors(basis[i], spec)) {
            auto j = find_config(basis, next);
            if (j >= 0 && dist[j] < 0) {
                dist[j] = dist[i] + 1;
                queue.push_back(static_cast<std::size_t>(j));
            }
        }
    }
    return dist;
}

RVector particle_density_diagonal(std::span<const GaugeConfig> basis, const LatticeSpec &spec) {
    const int N = spec.num_sites;
    RVector out(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        double staggered = 0.0;
        for (int x = 0; x < N; ++x) {
            staggered += ((x % 2 == 0) ? 1.0 : -1.0) * basis[i].occupations[x];
        }
        out[static_cast<Eigen::Index>(i)] = staggered / N + 0.5;
    }
    return out;
}

std::string field_label(const GaugeConfig &config, int group_order) {
    std::string out;
    if (group_order == 3) {
        for (int k : config.field_indices) {
            out += "-0+"[k];
        }
        return out;
    }
    for (std::size_t x = 0; x < config.field_indices.size(); ++x) {
        if (x) {
            out += ' ';
        }
        out += std::to_string(config.field_indices[x]);
    }
    return out;
}

}  // namespace znq
