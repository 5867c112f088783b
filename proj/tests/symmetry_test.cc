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

#include <gtest/gtest.h>

#include <set>

#include "reference_data.h"
#include "znq/errors.h"
#include "znq/lattice.h"
#include "znq/symmetry.h"

namespace znq {
namespace {

struct Fixture {
    LatticeSpec spec;
    std::vector<GaugeConfig> basis;
    CMatrix h;
    explicit Fixture(Couplings c = {0.6, 0.1}, LatticeSpec s = {}) : spec(s) {
        basis = enumerate_basis(spec);
        h = build_hamiltonian(basis, c, spec);
    }
};

TEST(ChargeConjugation, VacuumIsFixedPoint) {
    Fixture f;
    CMatrix c = charge_conjugation_matrix(f.basis, f.spec);
    auto vac = find_config(f.basis, zero_field_vacuum(f.spec));
    EXPECT_EQ(c(vac, vac), Complex(1.0));
}

TEST(ChargeConjugation, ChargedVacuaSwap) {
    Fixture f;
    CMatrix c = charge_conjugation_matrix(f.basis, f.spec);
    auto a = find_config(f.basis, dirac_vacuum(f.spec, 0));
    auto b = find_config(f.basis, dirac_vacuum(f.spec, 2));
    ASSERT_GE(a, 0);
    ASSERT_GE(b, 0);
    EXPECT_EQ(c(b, a), Complex(1.0));
    EXPECT_EQ(c(a, b), Complex(1.0));
}

TEST(ChargeConjugation, GroupStructure) {
    Fixture f;
    CMatrix c = charge_conjugation_matrix(f.basis, f.spec);
    CMatrix cm = charge_conjugation_matrix(f.basis, f.spec, ConjugationDirection::Minus);
    auto n = c.rows();
    CMatrix id = CMatrix::Identity(n, n);
    EXPECT_LT((c.adjoint() * c - id).norm(), 1e-14);
    EXPECT_LT((cm - c.adjoint()).norm(), 1e-14);
    EXPECT_LT((c * c - translation_matrix(f.basis, f.spec, 2)).norm(), 1e-14);
    EXPECT_LT((c * c * c * c - id).norm(), 1e-14);
    EXPECT_LT((f.h * c - c * f.h).norm(), 1e-10);
}

TEST(SectorDecompose, DimensionsAndLabels) {
    Fixture f;
    auto blocks = sector_decompose(f.basis, f.spec, f.h);
    ASSERT_EQ(blocks.size(), 4u);
    std::vector<std::string> names;
    std::vector<Eigen::Index> dims;
    for (const auto &b : blocks) {
        names.push_back(b.label.name());
        dims.push_back(b.dimension());
    }
    EXPECT_EQ(names, (std::vector<std::string>{"(+,+)", "(+,-)", "(-,+i)", "(-,-i)"}));
    EXPECT_EQ(dims, (std::vector<Eigen::Index>{7, 5, 3, 3}));
}

TEST(SectorDecompose, VacuumBlockMatchesReference) {
    for (auto [xi, mu] : testing::kRegimes) {
        Fixture f({xi, mu});
        auto blocks = sector_decompose(f.basis, f.spec, f.h);
        EXPECT_LT((blocks[0].hamiltonian - testing::vacuum_block_reference(xi, mu)).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT((blocks[1].hamiltonian - testing::odd_block_reference(xi, mu)).cwiseAbs().maxCoeff(), 1e-10);
        CMatrix diag = CMatrix::Zero(3, 3);
        diag(0, 0) = kPi / 3;
        diag(1, 1) = kPi;
        diag(2, 2) = 4 * kPi / 3;
        EXPECT_LT((blocks[2].hamiltonian - diag).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT((blocks[3].hamiltonian - diag).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(SectorDecompose, OffDiagonalCoupling) {
    Fixture f({0.6, 0.1});
    auto blocks = sector_decompose(f.basis, f.spec, f.h);
    EXPECT_NEAR(blocks[0].hamiltonian(1, 2).real(), 0.6 / std::sqrt(2.0), 1e-12);
}

TEST(SectorDecompose, VectorsAreEigenvectorsOfConjugation) {
    Fixture f;
    CMatrix c = charge_conjugation_matrix(f.basis, f.spec);
    for (const auto &b : sector_decompose(f.basis, f.spec, f.h)) {
        const CMatrix &v = b.basis_vectors;
        EXPECT_LT((c * v - b.label.c() * v).norm(), 1e-12) << b.label.name();
        EXPECT_LT((v.adjoint() * v - CMatrix::Identity(v.cols(), v.cols())).norm(), 1e-12);
        EXPECT_LT(std::abs(b.label.c() * b.label.c() - b.label.t2()), 1e-15);
    }
}

TEST(SectorDecompose, SpectrumPreserved) {
    Fixture f({1.5, 0.5});
    auto blocks = sector_decompose(f.basis, f.spec, f.h);
    std::vector<double> ev;
    Eigen::Index total = 0;
    for (const auto &b : blocks) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(b.hamiltonian);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) ev.push_back(es.eigenvalues()[i]);
        total += b.dimension();
    }
    EXPECT_EQ(total, 18);
    std::sort(ev.begin(), ev.end());
    Eigen::SelfAdjointEigenSolver<CMatrix> full(f.h);
    for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], full.eigenvalues()[static_cast<Eigen::Index>(i)], 1e-10);
}

TEST(SectorDecompose, NoCouplingGivesDiagonalBlocks) {
    Fixture f({0.0, 0.0});
    for (const auto &b : sector_decompose(f.basis, f.spec, f.h)) {
        CMatrix off = b.hamiltonian;
        off.diagonal().setZero();
        EXPECT_LT(off.cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(SectorDecompose, VacuumVectorPatterns) {
    Fixture f;
    auto blocks = sector_decompose(f.basis, f.spec, f.h);
    const CMatrix &v = blocks[0].basis_vectors;
    // Support (as field labels) and magnitude of each vacuum-sector vector.
    const std::vector<std::pair<std::set<std::string>, double>> expected = {
        {{"0000"}, 1.0},
        {{"+000", "000-", "0-00", "00+0"}, 0.5},
        {{"+0+0", "0-0-"}, 1 / std::sqrt(2.0)},
        {{"+0++", "+++0", "--0-", "0---"}, 0.5},
        {{"++++", "----"}, 1 / std::sqrt(2.0)},
        {{"-+++", "++-+", "---+", "-+--"}, 0.5},
        {{"-+-+"}, 1.0},
    };
    for (Eigen::Index k = 0; k < 7; ++k) {
        std::set<std::string> support;
        for (Eigen::Index i = 0; i < v.rows(); ++i) {
            if (std::abs(v(i, k)) > 1e-12) {
                support.insert(field_label(f.basis[static_cast<std::size_t>(i)], 3));
                EXPECT_NEAR(v(i, k).real(), expected[static_cast<std::size_t>(k)].second, 1e-12);
                EXPECT_NEAR(v(i, k).imag(), 0.0, 1e-12);
            }
        }
        EXPECT_EQ(support, expected[static_cast<std::size_t>(k)].first) << "vector " << k;
    }
}

TEST(SectorDecompose, ImaginarySectorPhases) {
    Fixture f;
    auto blocks = sector_decompose(f.basis, f.spec, f.h);
    for (int b : {2, 3}) {
        const CMatrix &v = blocks[static_cast<std::size_t>(b)].basis_vectors;
        for (Eigen::Index k = 0; k < v.cols(); ++k) {
            std::vector<Complex> comps;
            for (Eigen::Index i = 0; i < v.rows(); ++i) {
                if (std::abs(v(i, k)) > 1e-12) comps.push_back(v(i, k) / 0.5);
            }
            ASSERT_EQ(comps.size(), 4u);
            Complex prod = 1;
            for (auto z : comps) {
                EXPECT_NEAR(std::abs(z), 1.0, 1e-12);
                prod *= z;
            }
            // The four fourth roots of unity multiply to -1.
            EXPECT_NEAR(std::abs(prod + 1.0), 0.0, 1e-12);
        }
    }
}

TEST(SectorDecompose, RejectsNonCommutingMatrix) {
    Fixture f;
    CMatrix h = f.h;
    h(0, 0) += 1.0;
    try {
        sector_decompose(f.basis, f.spec, h);
        FAIL() << "expected InvariantError";
    } catch (const InvariantError &e) {
        EXPECT_NE(std::string(e.what()).find("||[H, C+]||"), std::string::npos);
    }
}

TEST(VacuumSector, FourSites) {
    Fixture f;
    auto blocks = sector_decompose(f.basis, f.spec, f.h);
    auto vs = vacuum_sector(blocks, f.basis, f.spec);
    EXPECT_EQ(vs.block.dimension(), 7);
    EXPECT_EQ(vs.block_index, 0u);
    EXPECT_EQ(vs.vacuum_position, 0);
}

TEST(VacuumSector, TwoSites) {
    Fixture f({0.6, 0.1}, LatticeSpec::half_filled(2, 3));
    auto blocks = sector_decompose(f.basis, f.spec, f.h);
    auto vs = vacuum_sector(blocks, f.basis, f.spec);
    auto vac = find_config(f.basis, zero_field_vacuum(f.spec));
    EXPECT_NEAR(std::abs(vs.block.basis_vectors(vac, vs.vacuum_position)), 1.0, 1e-12);
}

TEST(VacuumSector, DetectsBrokenOrthonormality) {
    Fixture f;
    auto blocks = sector_decompose(f.basis, f.spec, f.h);
    blocks[1].basis_vectors(0, 0) += 1e-3;
    EXPECT_THROW(vacuum_sector(blocks, f.basis, f.spec), InvariantError);
}

TEST(SectorDecompose, LargerLatticesVacuumDimensions) {
    const std::pair<int, Eigen::Index> cases[] = {{2, 4}, {4, 7}, {6, 14}, {8, 31}};
    for (auto [n, dim] : cases) {
        Fixture f({0.6, 0.1}, LatticeSpec::half_filled(n, 3));
        auto blocks = sector_decompose(f.basis, f.spec, f.h);
        EXPECT_EQ(vacuum_sector(blocks, f.basis, f.spec).block.dimension(), dim) << "N=" << n;
    }
}

}  // namespace
}  // namespace znq
