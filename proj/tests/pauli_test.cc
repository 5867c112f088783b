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

#include <random>

#include "reference_data.h"
#include "znq/embedding.h"
#include "znq/errors.h"
#include "znq/observables.h"
#include "znq/pauli.h"

namespace znq {
namespace {

CMatrix random_hermitian(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    CMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
    return (a + a.adjoint()) / 2.0;
}

TEST(PauliString, ParseAndDescribe) {
    auto p = PauliString::parse("013");
    EXPECT_EQ(p.num_qubits(), 3);
    EXPECT_EQ(p.weight(), 2);
    EXPECT_EQ(p.letters(), "IXZ");
    EXPECT_EQ(p.digits(), "013");
    EXPECT_FALSE(p.is_diagonal());
    EXPECT_TRUE(PauliString::parse("303").is_diagonal());
    EXPECT_THROW(PauliString::parse("014"), ValidationError);
    EXPECT_THROW(PauliString::parse(""), ValidationError);
}

TEST(PauliString, MatrixMatchesPhaseAndFlip) {
    for (int code = 0; code < 64; ++code) {
        PauliString p({static_cast<std::uint8_t>(code >> 4), static_cast<std::uint8_t>((code >> 2) & 3),
                       static_cast<std::uint8_t>(code & 3)});
        CMatrix m = pauli_matrix(p);
        for (std::size_t c = 0; c < 8; ++c) {
            std::size_t r = c ^ p.flip_mask();
            EXPECT_EQ(m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)), pauli_phase(p, c));
        }
        EXPECT_LT((m * m - CMatrix::Identity(8, 8)).norm(), 1e-15);
    }
}

TEST(PauliString, SingleQubitConventions) {
    CMatrix y = pauli_matrix(PauliString::parse("2"));
    EXPECT_EQ(y(1, 0), Complex(0, 1));
    EXPECT_EQ(y(0, 1), Complex(0, -1));
    CMatrix zi = pauli_matrix(PauliString::parse("30"));
    // Qubit 0 is the most significant bit.
    EXPECT_EQ(zi(2, 2), Complex(-1));
    EXPECT_EQ(zi(1, 1), Complex(1));
}

TEST(Decompose, RoundTripRandom) {
    for (int q = 1; q <= 4; ++q) {
        CMatrix h = random_hermitian(1 << q, 7 + static_cast<std::uint64_t>(q));
        auto d = decompose(h);
        EXPECT_LT((reconstruct(d) - h).norm(), 1e-12);
        EXPECT_EQ(d.num_qubits, q);
    }
}

TEST(Decompose, ParsevalIdentity) {
    CMatrix h = random_hermitian(8, 99);
    auto d = decompose(h);
    double sum = 0;
    for (auto &[p, c] : d.terms) sum += c * c;
    EXPECT_NEAR(sum * 8, (h.adjoint() * h).trace().real(), 1e-10);
}

TEST(Decompose, RejectsNonHermitian) {
    CMatrix h = random_hermitian(4, 3);
    h(0, 1) += 0.5;
    EXPECT_THROW(decompose(h), ValidationError);
    EXPECT_THROW(decompose(CMatrix::Identity(3, 3)), ValidationError);
}

TEST(Decompose, FullWeightObjective) {
    CMatrix h = pauli_matrix(PauliString::parse("123")) + 0.5 * pauli_matrix(PauliString::parse("103"));
    EXPECT_EQ(count_full_weight_terms(h), 1);
    EXPECT_EQ(full_weight_strings(3).size(), 27u);
    auto d = decompose(h);
    EXPECT_EQ(d.non_identity_count(), 2u);
    EXPECT_NEAR(d.coefficient("103"), 0.5, 1e-15);
    EXPECT_EQ(d.coefficient("111"), 0.0);
}

TEST(Coefficients, IdentityEmbedding) {
    for (auto [xi, mu] : testing::kRegimes) {
        auto model = build_vacuum_model(LatticeSpec{}, {xi, mu}, identity_permutation(8));
        const auto &d = model.hamiltonian_terms;
        auto table = testing::identity_embedding_table(xi, mu);
        EXPECT_EQ(d.terms.size(), table.size());
        for (auto &[s, v] : table) {
            if (s == "331") continue;
            EXPECT_NEAR(d.coefficient(s), v, 1e-12) << s;
        }
        for (auto &[p, c] : d.terms) EXPECT_TRUE(table.count(p.digits())) << p.digits();
    }
}

TEST(Coefficients, IdentityEmbeddingSignOf331) {
    // The computed 331 coefficient is (1 - sqrt 2) xi / 4; reconstruction
    // with the opposite sign does not reproduce the sector block.
    for (auto [xi, mu] : testing::kRegimes) {
        auto model = build_vacuum_model(LatticeSpec{}, {xi, mu}, identity_permutation(8));
        EXPECT_NEAR(model.hamiltonian_terms.coefficient("331"), (1 - std::sqrt(2.0)) * xi / 4, 1e-12);
        auto flipped = model.hamiltonian_terms;
        flipped.terms[PauliString::parse("331")] *= -1;
        EXPECT_GT((reconstruct(flipped) - model.embedded_hamiltonian).norm(), 0.1);
    }
}

TEST(Coefficients, IdentityEmbeddingCounts) {
    auto model = build_vacuum_model(LatticeSpec{}, {0.6, 0.1}, identity_permutation(8));
    EXPECT_EQ(model.hamiltonian_terms.non_identity_count(), 19u);
    // 111, 122, 212, 221, 311, 322, 331, 333.
    EXPECT_EQ(model.hamiltonian_terms.full_weight_count(), 8u);
}

TEST(Coefficients, ReferenceEmbedding) {
    for (auto [xi, mu] : testing::kRegimes) {
        auto model = build_vacuum_model(LatticeSpec{}, {xi, mu});
        const auto &d = model.hamiltonian_terms;
        auto table = testing::optimal_embedding_table(xi, mu);
        EXPECT_EQ(d.terms.size(), table.size());
        for (auto &[s, v] : table) EXPECT_NEAR(d.coefficient(s), v, 1e-12) << s;
        EXPECT_EQ(d.non_identity_count(), 15u);
        EXPECT_EQ(d.full_weight_count(), 3u);
    }
}

TEST(Coefficients, Density) {
    for (auto [xi, mu] : testing::kRegimes) {
        auto model = build_vacuum_model(LatticeSpec{}, {xi, mu});
        auto table = testing::density_table();
        EXPECT_EQ(model.density_terms.terms.size(), table.size());
        for (auto &[s, v] : table) EXPECT_NEAR(model.density_terms.coefficient(s), v, 1e-12) << s;
        for (auto &[p, c] : model.density_terms.terms) EXPECT_TRUE(p.is_diagonal());
    }
}

TEST(Coefficients, VacuumHasZeroDensity) {
    auto model = build_vacuum_model(LatticeSpec{}, {0.6, 0.1});
    EXPECT_EQ(model.vacuum_index, 2u);
    CVector v = model.vacuum_state();
    EXPECT_NEAR((v.adjoint() * model.embedded_density * v)(0, 0).real(), 0.0, 1e-14);
}

}  // namespace
}  // namespace znq
