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

#include "znq/embedding.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>

#include "znq/errors.h"
#include "znq/parallel.h"
#include "znq/pauli.h"

namespace znq {

namespace {

constexpr double kZeroTol = 1e-10;

// Cached traces Tr(P M) for every full-weight P, updated per transposition.
class TraceTracker {
public:
    TraceTracker(const CMatrix &m, int q) : m_(m) {
        strings_ = full_weight_strings(q);
        scale_ = 1.0 / static_cast<double>(m.rows());
        traces_.reserve(strings_.size());
        for (const auto &p : strings_) {
            flips_.push_back(p.flip_mask());
            traces_.push_back(pauli_trace(p, m_));
        }
    }

    int objective() const { return count(traces_); }

    // Objective after swapping computational indices i and j.
    int objective_after_swap(std::size_t i, std::size_t j) const {
        int n = 0;
        for (std::size_t k = 0; k < strings_.size(); ++k) {
            Complex t = traces_[k] + delta(k, i, j);
            n += std::abs(t.real() * scale_) > kZeroTol;
        }
        return n;
    }

    void apply_swap(std::size_t i, std::size_t j) {
        m_.row(static_cast<Eigen::Index>(i)).swap(m_.row(static_cast<Eigen::Index>(j)));
        m_.col(static_cast<Eigen::Index>(i)).swap(m_.col(static_cast<Eigen::Index>(j)));
        for (std::size_t k = 0; k < strings_.size(); ++k) {
            traces_[k] = pauli_trace(strings_[k], m_);
        }
    }

private:
    int count(const std::vector<Complex> &t) const {
        int n = 0;
        for (auto v : t) n += std::abs(v.real() * scale_) > kZeroTol;
        return n;
    }

    std::size_t swapped(std::size_t a, std::size_t i, std::size_t j) const {
        return a == i ? j : (a == j ? i : a);
    }

    // Change of Tr(P M) = sum_c phase(c) M[c][c^x] when rows and columns i, j
    // are exchanged. Only columns c in {i, j, i^x, j^x} are touched.
    Complex delta(std::size_t k, std::size_t i, std::size_t j) const {
        std::size_t x = flips_[k];
        std::size_t cs[4] = {i, j, i ^ x, j ^ x};
        Complex d = 0;
        for (int a = 0; a < 4; ++a) {
            bool dup = false;
            for (int b = 0; b < a; ++b) dup = dup || cs[b] == cs[a];
            if (dup) continue;
            std::size_t c = cs[a];
            std::size_t r = c ^ x;
            auto before = m_(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r));
            auto after = m_(static_cast<Eigen::Index>(swapped(c, i, j)),
                            static_cast<Eigen::Index>(swapped(r, i, j)));
            d += pauli_phase(strings_[k], c) * (after - before);
        }
        return d;
    }

    CMatrix m_;
    double scale_;
    std::vector<PauliString> strings_;
    std::vector<std::size_t> flips_;
    std::vector<Complex> traces_;
};

std::vector<int> random_permutation(std::size_t d, std::uint64_t seed) {
    std::vector<int> perm = identity_permutation(d);
    std::mt19937_64 rng(seed);
    for (std::size_t k = d; k > 1; --k) {
        std::size_t r = static_cast<std::size_t>(rng() % k);
        std::swap(perm[k - 1], perm[r]);
    }
    return perm;
}

}  // namespace

std::size_t Embedding::computational_index(std::size_t k) const {
    for (std::size_t l = 0; l < permutation.size(); ++l) {
        if (static_cast<std::size_t>(permutation[l]) == k + 1) return l;
    }
    throw ValidationError("sector state outside the embedding");
}

std::vector<int> reference_permutation() {
    return {7, 6, 1, 2, 4, 5, 8, 3};
}

std::vector<int> identity_permutation(std::size_t dim) {
    std::vector<int> p(dim);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

int qubits_for_dimension(std::size_t d) {
    int m = 1;
    while ((std::size_t{1} << m) < d) ++m;
    return m;
}

void validate_permutation(const std::vector<int> &perm) {
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 1 || static_cast<std::size_t>(v) > perm.size() || seen[static_cast<std::size_t>(v - 1)]) {
            throw ValidationError("permutation is not a bijection on {1.." +
                                  std::to_string(perm.size()) + "}");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

CMatrix pad_and_permute(const CMatrix &h_sector, const std::vector<int> &perm) {
    validate_permutation(perm);
    auto d = static_cast<std::size_t>(h_sector.rows());
    std::size_t dim = std::size_t{1} << qubits_for_dimension(d);
    if (perm.size() != dim) {
        throw ValidationError("permutation size " + std::to_string(perm.size()) +
                              " does not match padded dimension " + std::to_string(dim));
    }
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t l = 0; l < dim; ++l) {
        auto a = static_cast<std::size_t>(perm[l] - 1);
        if (a >= d) continue;
        for (std::size_t m = 0; m < dim; ++m) {
            auto b = static_cast<std::size_t>(perm[m] - 1);
            if (b >= d) continue;
            out(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)) =
                h_sector(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        }
    }
    return out;
}

CVector embed_vector(const CVector &v_sector, const std::vector<int> &perm) {
    validate_permutation(perm);
    auto d = static_cast<std::size_t>(v_sector.size());
    if (perm.size() != (std::size_t{1} << qubits_for_dimension(d))) {
        throw ValidationError("permutation size does not match padded dimension");
    }
    CVector out = CVector::Zero(static_cast<Eigen::Index>(perm.size()));
    for (std::size_t l = 0; l < perm.size(); ++l) {
        auto a = static_cast<std::size_t>(perm[l] - 1);
        if (a < d) out[static_cast<Eigen::Index>(l)] = v_sector[static_cast<Eigen::Index>(a)];
    }
    return out;
}

int embedding_objective(const CMatrix &h_sector, const std::vector<int> &perm) {
    return count_full_weight_terms(pad_and_permute(h_sector, perm), kZeroTol);
}

BruteForceResult brute_force_search(const CMatrix &h_sector) {
    auto d = static_cast<std::size_t>(h_sector.rows());
    int q = qubits_for_dimension(d);
    if (q > 3) {
        throw ValidationError("brute-force search is limited to 3 qubits (8! permutations); "
                              "use greedy local search for larger sectors");
    }
    std::size_t dim = std::size_t{1} << q;
    struct Partial {
        std::vector<int> objectives;
        std::vector<int> best;
        int best_value = 0;
    };
    std::vector<Partial> parts(dim);
    parallel_for(dim, [&](std::size_t first) {
        Partial &part = parts[first];
        std::vector<int> rest;
        for (std::size_t v = 1; v <= dim; ++v) {
            if (v != first + 1) rest.push_back(static_cast<int>(v));
        }
        std::vector<int> perm(dim);
        perm[0] = static_cast<int>(first + 1);
        bool have = false;
        do {
            std::copy(rest.begin(), rest.end(), perm.begin() + 1);
            int value = count_full_weight_terms(pad_and_permute(h_sector, perm), kZeroTol);
            part.objectives.push_back(value);
            if (!have || value < part.best_value) {
                part.best_value = value;
                part.best = perm;
                have = true;
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    });
    BruteForceResult result;
    bool have = false;
    for (auto &part : parts) {
        if (!have || std::pair{part.best_value, part.best} <
                         std::pair{result.best.objective_value, result.best.permutation}) {
            result.best.objective_value = part.best_value;
            result.best.permutation = part.best;
            have = true;
        }
        result.sorted_objectives.insert(result.sorted_objectives.end(), part.objectives.begin(),
                                        part.objectives.end());
    }
    result.best.num_qubits = q;
    std::sort(result.sorted_objectives.begin(), result.sorted_objectives.end(), std::greater<>());
    for (int v : result.sorted_objectives) ++result.histogram[v];
    result.identity_objective = embedding_objective(h_sector, identity_permutation(dim));
    return result;
}

std::vector<int> neighbor_objectives(const CMatrix &h_sector, const std::vector<int> &perm,
                                     bool incremental) {
    std::vector<int> out;
    std::size_t dim = perm.size();
    if (incremental) {
        TraceTracker tracker(pad_and_permute(h_sector, perm), exact_log2(dim));
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i + 1; j < dim; ++j) out.push_back(tracker.objective_after_swap(i, j));
        }
        return out;
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            auto p = perm;
            std::swap(p[i], p[j]);
            out.push_back(embedding_objective(h_sector, p));
        }
    }
    return out;
}

Embedding local_descent(const CMatrix &h_sector, std::vector<int> perm, bool incremental) {
    std::size_t dim = perm.size();
    int q = exact_log2(dim);
    int current = embedding_objective(h_sector, perm);
    std::optional<TraceTracker> tracker;
    if (incremental) tracker.emplace(pad_and_permute(h_sector, perm), q);
    while (true) {
        int best = current;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i + 1; j < dim; ++j) {
                int value;
                if (incremental) {
                    value = tracker->objective_after_swap(i, j);
                } else {
                    std::swap(perm[i], perm[j]);
                    value = embedding_objective(h_sector, perm);
                    std::swap(perm[i], perm[j]);
                }
                if (value < best) {
                    best = value;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best >= current) break;
        std::swap(perm[bi], perm[bj]);
        if (incremental) tracker->apply_swap(bi, bj);
        current = best;
    }
    return Embedding{std::move(perm), q, current};
}

Embedding greedy_local_search(const CMatrix &h_sector, const GreedyOptions &options) {
    if (options.restarts < 1) {
        throw ValidationError("greedy search needs at least one restart");
    }
    auto d = static_cast<std::size_t>(h_sector.rows());
    int q = qubits_for_dimension(d);
    std::size_t dim = std::size_t{1} << q;
    bool incremental = q >= options.incremental_from_qubits;
    std::vector<Embedding> runs(static_cast<std::size_t>(options.restarts));
    parallel_for(runs.size(), [&](std::size_t r) {
        auto start = random_permutation(dim, derive_seed(options.seed, r));
        runs[r] = local_descent(h_sector, std::move(start), incremental);
    });
    auto best = std::min_element(runs.begin(), runs.end(), [](const Embedding &a, const Embedding &b) {
        return std::pair{a.objective_value, a.permutation} < std::pair{b.objective_value, b.permutation};
    });
    return *best;
}

}  // namespace znq
