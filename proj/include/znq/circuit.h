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

#include <string>
#include <vector>

#include "znq/linalg.h"

namespace znq {

/// Base operation of a gate. Controlled variants (CNOT, CY, CZ, CRX, ...)
/// are the same kinds with a non-empty control list.
enum class GateKind { X, Y, Z, H, Phase, RX, RZ, Barrier };

/// RX(t) = exp(-i t X / 2), RZ(t) = exp(-i t Z / 2), PHASE(f) = diag(1, e^{i f}).
/// Controls fire on |1>.
struct Gate {
    GateKind kind = GateKind::X;
    int target = 0;
    std::vector<int> controls;
    double angle = 0.0;

    static Gate x(int q) { return {GateKind::X, q, {}, 0.0}; }
    static Gate y(int q) { return {GateKind::Y, q, {}, 0.0}; }
    static Gate z(int q) { return {GateKind::Z, q, {}, 0.0}; }
    static Gate h(int q) { return {GateKind::H, q, {}, 0.0}; }
    static Gate phase(int q, double f) { return {GateKind::Phase, q, {}, f}; }
    static Gate rx(int q, double t) { return {GateKind::RX, q, {}, t}; }
    static Gate rz(int q, double t) { return {GateKind::RZ, q, {}, t}; }
    static Gate cnot(int c, int t) { return {GateKind::X, t, {c}, 0.0}; }
    static Gate cy(int c, int t) { return {GateKind::Y, t, {c}, 0.0}; }
    static Gate cz(int c, int t) { return {GateKind::Z, t, {c}, 0.0}; }
    static Gate barrier() { return {GateKind::Barrier, -1, {}, 0.0}; }

    bool is_barrier() const { return kind == GateKind::Barrier; }
    bool has_angle() const;
    /// Number of qubits touched (controls + target); 0 for barriers.
    int arity() const;
    /// Controls followed by the target.
    std::vector<int> qubits() const;
    /// CNOT, CY, CZ, CRX, CCX, PHASE, ... ; "C" is repeated per control.
    std::string name() const;
    Gate inverse() const;
    /// 2x2 matrix of the base operation.
    Eigen::Matrix2cd base_matrix() const;

    bool operator==(const Gate &) const = default;
};

class Circuit {
public:
    Circuit() = default;
    explicit Circuit(int width);

    int width() const { return width_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    /// Gates excluding barriers.
    std::size_t gate_count() const;

    /// Validates qubit indices (distinct, within width) and finite angles.
    Circuit &append(const Gate &g);
    Circuit &append(const Circuit &other);

    /// Greedy as-soon-as-possible layering. Barriers are fences: no gate
    /// after a barrier shares a layer with a gate before it.
    std::vector<std::vector<Gate>> layers() const;
    int depth() const;

    /// Reversed sequence of inverted gates.
    Circuit inverse() const;
    /// Same gates on a register of `new_width` qubits, shifted by `offset`.
    Circuit widened(int new_width, int offset = 0) const;
    /// Adds `control` to every gate. The control must lie outside the
    /// circuit's qubits; global phases become relative, so this is only
    /// meaningful for circuits that are exact unitaries (no dropped phases).
    Circuit controlled(int control, int new_width) const;

    /// One gate per line: "NAME q... [angle]", preceded by "width W".
    std::string to_text() const;
    static Circuit from_text(const std::string &text);

    bool operator==(const Circuit &) const = default;

private:
    int width_ = 0;
    std::vector<Gate> gates_;
};

struct FoldedCircuit {
    Circuit circuit;
    int global_folds = 0;
    int partial_layers = 0;
    int base_depth = 0;
    /// lambda = 1 + 2k / d with k = n d + s.
    double scale = 1.0;
};

/// V (V^dagger V)^n followed by the inverse and re-application of the last
/// s layers. Each emitted layer is fenced by a barrier, so the depth is
/// (2n + 1) d + 2 s exactly. n = s = 0 returns the circuit unchanged.
FoldedCircuit fold(const Circuit &circuit, int global_folds, int partial_layers);

/// Decomposes a scale lambda into (n, s) for a depth-d circuit. Throws
/// ValidationError listing the realizable values up to `lambda` if
/// (lambda - 1) d / 2 is not an integer to 1e-9.
std::pair<int, int> fold_parameters(double lambda, int depth);

/// Realizable scales 1 + 2k/d for k = 0..(max_scale - 1) d / 2.
std::vector<double> realizable_scales(int depth, double max_scale);

}  // namespace znq
