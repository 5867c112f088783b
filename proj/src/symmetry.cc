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

#include "znq/symmetry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "znq/errors.h"

namespace znq {

namespace {

GaugeConfig conjugate(const GaugeConfig &c, const LatticeSpec &spec) {
    const int N = spec.num_sites;
    const int n = spec.group_order;
    GaugeConfig out;
    out.field_indices.resize(N);
    out.occupations.resize(N);
    for (int x = 0; x < N; ++x) {
        int y = (x + 1) % N;
        out.occupations[y] = static_cast<std::uint8_t>(1 - c.occupations[x]);
        out.field_indices[y] = n - 1 - c.field_indices[x];
    }
    return out;
}

GaugeConfig translate(const GaugeConfig &c, int N, int shift) {
    GaugeConfig out = c;
    for (int x = 0; x < N; ++x) {
        int y = ((x + shift) % N + N) % N;
        out.occupations[y] = c.occupations[x];
        out.field_indices[y] = c.field_indices[x];
    }
    return out;
}

bool near(Complex z, Complex w) {
    return std::abs(z - w) < 1e-12;
}

std::string unit_name(Complex z) {
    if (near(z, 1.0)) return "+";
    if (near(z, -1.0)) return "-";
    if (near(z, Complex(0, 1))) return "+i";
    if (near(z, Complex(0, -1))) return "-i";
    return "";
}

}  // namespace

Complex SectorLabel::c() const {
    // Exact values at the quarter turns so labels compare cleanly.
    if ((4 * m) % num_sites == 0) {
        int quarter = ((4 * m) / num_sites) % 4;
        static const Complex units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return units[quarter];
    }
    return std::polar(1.0, 2.0 * kPi * m / num_sites);
}

Complex SectorLabel::t2() const {
    Complex z = c();
    return z * z;
}

std::string SectorLabel::name() const {
    auto a = unit_name(t2());
    auto b = unit_name(c());
    if (!a.empty() && !b.empty()) {
        return "(" + a + "," + b + ")";
    }
    std::ostringstream os;
    os << "(m=" << m << "/" << num_sites << ")";
    return os.str();
}

CMatrix charge_conjugation_matrix(std::span<const GaugeConfig> basis, const LatticeSpec &spec,
                                  ConjugationDirection direction) {
    const auto dim = static_cast<Eigen::Index>(basis.size());
    CMatrix c = CMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        auto j = find_config(basis, conjugate(basis[i], spec));
        if (j < 0) {
            throw InvariantError("charge conjugation maps basis element " + std::to_string(i) +
                                 " outside the basis (filling must be N/2)");
        }
        c(j, i) = 1.0;
    }
    if (direction == ConjugationDirection::Minus) {
        return c.adjoint();
    }
    return c;
}

CMatrix translation_matrix(std::span<const GaugeConfig> basis, const LatticeSpec &spec, int shift) {
    const auto dim = static_cast<Eigen::Index>(basis.size());
    CMatrix t = CMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        auto j = find_config(basis, translate(basis[i], spec.num_sites, shift));
        if (j < 0) {
            throw InvariantError("translation maps basis element outside the basis");
        }
        t(j, i) = 1.0;
    }
    return t;
}

std::vector<SectorBlock> sector_decompose(std::span<const GaugeConfig> basis,
                                          const LatticeSpec &spec, const CMatrix &h,
                                          double tolerance) {
    const int N = spec.num_sites;
    const auto dim = static_cast<Eigen::Index>(basis.size());
    if (h.rows() != dim || h.cols() != dim) {
        throw ValidationError("Hamiltonian dimension does not match the basis");
    }
    CMatrix cplus = charge_conjugation_matrix(basis, spec);
    double comm = (h * cplus - cplus * h).norm();
    if (comm > tolerance) {
        throw InvariantError("Hamiltonian does not commute with C+: ||[H, C+]||_F = " +
                             std::to_string(comm));
    }

    // Powers C+^j, j = 0..N-1.
    std::vector<CMatrix> powers{CMatrix::Identity(dim, dim)};
    for (int j = 1; j < N; ++j) {
        powers.push_back(cplus * powers.back());
    }

    // Orbits in canonical order of their smallest member.
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<bool> seen(basis.size(), false);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orbit;
        std::size_t cur = i;
        do {
            orbit.push_back(cur);
            seen[cur] = true;
            Eigen::Index next;
            cplus.col(static_cast<Eigen::Index>(cur)).cwiseAbs().maxCoeff(&next);
            cur = static_cast<std::size_t>(next);
        } while (cur != i);
        orbits.push_back(std::move(orbit));
    }

    GaugeConfig reference = dirac_vacuum(spec, (spec.group_order - 1) / 2);
    auto dist = hop_distances(basis, spec, reference);
    auto orbit_distance = [&](const std::vector<std::size_t> &orbit) {
        int best = -1;
        for (auto i : orbit) {
            if (dist[i] >= 0 && (best < 0 || dist[i] < best)) best = dist[i];
        }
        return best < 0 ? std::numeric_limits<int>::max() : best;
    };
    std::vector<std::size_t> orbit_order(orbits.size());
    for (std::size_t k = 0; k < orbits.size(); ++k) orbit_order[k] = k;
    std::stable_sort(orbit_order.begin(), orbit_order.end(), [&](std::size_t a, std::size_t b) {
        return orbit_distance(orbits[a]) < orbit_distance(orbits[b]);
    });

    // Sector order: T2 eigenvalue index (2m mod N) first, then m.
    std::vector<int> ms(N);
    for (int m = 0; m < N; ++m) ms[m] = m;
    std::stable_sort(ms.begin(), ms.end(), [&](int a, int b) {
        return std::pair{(2 * a) % N, a} < std::pair{(2 * b) % N, b};
    });

    std::vector<SectorBlock> blocks;
    for (int m : ms) {
        SectorLabel label{N, m};
        Complex c = label.c();
        CMatrix projector = CMatrix::Zero(dim, dim);
        Complex weight = 1.0;
        for (int j = 0; j < N; ++j) {
            projector += weight * powers[j];
            weight *= std::conj(c);
        }
        projector /= static_cast<double>(N);

        std::vector<CVector> vecs;
        std::vector<std::size_t> reps;
        for (auto k : orbit_order) {
            auto rep = static_cast<Eigen::Index>(orbits[k].front());
            CVector v = projector.col(rep);
            double norm = v.norm();
            if (norm < 1e-12) continue;
            v /= norm;
            for (Eigen::Index i = 0; i < dim; ++i) {
                if (std::abs(v[i]) > 1e-12) {
                    v *= std::abs(v[i]) / v[i];
                    break;
                }
            }
            vecs.push_back(std::move(v));
            reps.push_back(orbits[k].front());
        }
        if (vecs.empty()) continue;
        SectorBlock block;
        block.label = label;
        block.basis_vectors.resize(dim, static_cast<Eigen::Index>(vecs.size()));
        for (std::size_t k = 0; k < vecs.size(); ++k) {
            block.basis_vectors.col(static_cast<Eigen::Index>(k)) = vecs[k];
        }
        block.hamiltonian = block.basis_vectors.adjoint() * h * block.basis_vectors;
        block.representatives = std::move(reps);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

VacuumSector vacuum_sector(std::span<const SectorBlock> blocks,
                           std::span<const GaugeConfig> basis, const LatticeSpec &spec) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto &v = blocks[b].basis_vectors;
        CMatrix gram = v.adjoint() * v;
        double defect = (gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
        if (defect > 1e-12) {
            throw InvariantError("sector block " + blocks[b].label.name() +
                                 " is not orthonormal (max |V^dagger V - 1| = " +
                                 std::to_string(defect) + ")");
        }
    }
    auto vac = find_config(basis, zero_field_vacuum(spec));
    if (vac < 0) {
        throw InvariantError("zero-field vacuum is not in the basis");
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto &v = blocks[b].basis_vectors;
        for (Eigen::Index k = 0; k < v.cols(); ++k) {
            if (std::abs(std::abs(v(vac, k)) - 1.0) < 1e-12) {
                return VacuumSector{blocks[b], b, k};
            }
        }
    }
    throw InvariantError("no sector block contains the Dirac vacuum as a basis vector");
}

}  // namespace znq
