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

#include "znq/circuit.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#include "znq/errors.h"

namespace znq {

namespace {

const char *base_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::Phase: return "PHASE";
        case GateKind::RX: return "RX";
        case GateKind::RZ: return "RZ";
        case GateKind::Barrier: return "BARRIER";
    }
    return "?";
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string &s) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ValidationError("bad angle '" + s + "'");
    }
    return v;
}

}  // namespace

bool Gate::has_angle() const {
    return kind == GateKind::Phase || kind == GateKind::RX || kind == GateKind::RZ;
}

int Gate::arity() const {
    return is_barrier() ? 0 : static_cast<int>(controls.size()) + 1;
}

std::vector<int> Gate::qubits() const {
    std::vector<int> q = controls;
    if (!is_barrier()) q.push_back(target);
    return q;
}

std::string Gate::name() const {
    if (kind == GateKind::X && controls.size() == 1) return "CNOT";
    return std::string(controls.size(), 'C') + base_name(kind);
}

Gate Gate::inverse() const {
    Gate g = *this;
    if (has_angle()) g.angle = -angle;
    return g;
}

Eigen::Matrix2cd Gate::base_matrix() const {
    using C = Complex;
    Eigen::Matrix2cd m;
    double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::X: m << 0, 1, 1, 0; break;
        case GateKind::Y: m << 0, C(0, -1), C(0, 1), 0; break;
        case GateKind::Z: m << 1, 0, 0, -1; break;
        case GateKind::H: m << r, r, r, -r; break;
        case GateKind::Phase: m << 1, 0, 0, std::polar(1.0, angle); break;
        case GateKind::RX:
            m << std::cos(angle / 2), C(0, -std::sin(angle / 2)), C(0, -std::sin(angle / 2)),
                std::cos(angle / 2);
            break;
        case GateKind::RZ: m << std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2); break;
        case GateKind::Barrier: m.setIdentity(); break;
    }
    return m;
}

Circuit::Circuit(int width) : width_(width) {
    if (width < 1 || width > 30) {
        throw ValidationError("circuit width must be in [1, 30], got " + std::to_string(width));
    }
}

std::size_t Circuit::gate_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return !g.is_barrier(); }));
}

Circuit &Circuit::append(const Gate &g) {
    if (!g.is_barrier()) {
        auto qs = g.qubits();
        for (std::size_t a = 0; a < qs.size(); ++a) {
            if (qs[a] < 0 || qs[a] >= width_) {
                throw ValidationError(g.name() + " acts on qubit " + std::to_string(qs[a]) +
                                      " outside width " + std::to_string(width_));
            }
            for (std::size_t b = 0; b < a; ++b) {
                if (qs[a] == qs[b]) throw ValidationError(g.name() + " repeats qubit " + std::to_string(qs[a]));
            }
        }
        if (!std::isfinite(g.angle)) throw ValidationError(g.name() + " has a non-finite angle");
    }
    gates_.push_back(g);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.width_ != width_) {
        throw ValidationError("cannot append a width-" + std::to_string(other.width_) +
                              " circuit to a width-" + std::to_string(width_) + " circuit");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

std::vector<std::vector<Gate>> Circuit::layers() const {
    std::vector<std::vector<Gate>> out;
    std::vector<int> level(static_cast<std::size_t>(width_), 0);
    int fence = 0;
    for (const auto &g : gates_) {
        if (g.is_barrier()) {
            fence = static_cast<int>(out.size());
            continue;
        }
        int l = fence;
        for (int q : g.qubits()) l = std::max(l, level[static_cast<std::size_t>(q)]);
        if (l >= static_cast<int>(out.size())) out.resize(static_cast<std::size_t>(l) + 1);
        out[static_cast<std::size_t>(l)].push_back(g);
        for (int q : g.qubits()) level[static_cast<std::size_t>(q)] = l + 1;
    }
    return out;
}

int Circuit::depth() const {
    return static_cast<int>(layers().size());
}

Circuit Circuit::inverse() const {
    Circuit out(width_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(it->inverse());
    return out;
}

Circuit Circuit::widened(int new_width, int offset) const {
    Circuit out(new_width);
    for (auto g : gates_) {
        if (!g.is_barrier()) {
            g.target += offset;
            for (auto &c : g.controls) c += offset;
        }
        out.append(g);
    }
    return out;
}

Circuit Circuit::controlled(int control, int new_width) const {
    Circuit out(new_width);
    for (auto g : gates_) {
        if (!g.is_barrier()) g.controls.insert(g.controls.begin(), control);
        out.append(g);
    }
    return out;
}

std::string Circuit::to_text() const {
    std::ostringstream os;
    os << "width " << width_ << '\n';
    for (const auto &g : gates_) {
        os << g.name();
        for (int q : g.qubits()) os << ' ' << q;
        if (g.has_angle()) os << ' ' << format_double(g.angle);
        os << '\n';
    }
    return os.str();
}

Circuit Circuit::from_text(const std::string &text) {
    std::istringstream is(text);
    std::string line;
    std::optional<Circuit> out;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (!out) {
            if (tok.size() != 2 || tok[0] != "width") {
                throw ValidationError("circuit text must start with 'width W'");
            }
            out.emplace(std::stoi(tok[1]));
            continue;
        }
        std::string name = tok[0];
        if (name == "BARRIER") {
            out->append(Gate::barrier());
            continue;
        }
        std::size_t ncontrols = 0;
        std::string base;
        if (name == "CNOT") {
            ncontrols = 1;
            base = "X";
        } else {
            while (ncontrols < name.size() && name[ncontrols] == 'C') ++ncontrols;
            base = name.substr(ncontrols);
        }
        static const std::pair<const char *, GateKind> kinds[] = {
            {"X", GateKind::X},     {"Y", GateKind::Y},   {"Z", GateKind::Z},  {"H", GateKind::H},
            {"PHASE", GateKind::Phase}, {"RX", GateKind::RX}, {"RZ", GateKind::RZ}};
        auto it = std::find_if(std::begin(kinds), std::end(kinds),
                               [&](const auto &k) { return base == k.first; });
        if (it == std::end(kinds)) {
            throw ValidationError("line " + std::to_string(lineno) + ": unknown gate '" + name + "'");
        }
        Gate g;
        g.kind = it->second;
        std::size_t nq = ncontrols + 1;
        std::size_t expected = nq + (g.has_angle() ? 1 : 0);
        if (tok.size() != expected + 1) {
            throw ValidationError("line " + std::to_string(lineno) + ": wrong operand count for " + name);
        }
        for (std::size_t k = 0; k < ncontrols; ++k) g.controls.push_back(std::stoi(tok[1 + k]));
        g.target = std::stoi(tok[nq]);
        if (g.has_angle()) g.angle = parse_double(tok[nq + 1]);
        out->append(g);
    }
    if (!out) throw ValidationError("empty circuit text");
    return *out;
}

FoldedCircuit fold(const Circuit &circuit, int global_folds, int partial_layers) {
    auto layers = circuit.layers();
    int d = static_cast<int>(layers.size());
    if (global_folds < 0 || partial_layers < 0) {
        throw ValidationError("fold counts must be non-negative");
    }
    if (partial_layers > 0 && partial_layers >= d) {
        throw ValidationError("partial fold of " + std::to_string(partial_layers) +
                              " layers needs depth greater than that, circuit depth is " + std::to_string(d));
    }
    FoldedCircuit out;
    out.global_folds = global_folds;
    out.partial_layers = partial_layers;
    out.base_depth = d;
    int k = global_folds * d + partial_layers;
    out.scale = d == 0 ? 1.0 : 1.0 + 2.0 * k / d;
    if (global_folds == 0 && partial_layers == 0) {
        out.circuit = circuit;
        return out;
    }
    Circuit c(circuit.width());
    auto emit_forward = [&](int from, int to) {
        for (int l = from; l < to; ++l) {
            for (const auto &g : layers[static_cast<std::size_t>(l)]) c.append(g);
            c.append(Gate::barrier());
        }
    };
    auto emit_inverse = [&](int from, int to) {
        for (int l = to - 1; l >= from; --l) {
            const auto &layer = layers[static_cast<std::size_t>(l)];
            for (auto it = layer.rbegin(); it != layer.rend(); ++it) c.append(it->inverse());
            c.append(Gate::barrier());
        }
    };
    emit_forward(0, d);
    for (int n = 0; n < global_folds; ++n) {
        emit_inverse(0, d);
        emit_forward(0, d);
    }
    emit_inverse(d - partial_layers, d);
    emit_forward(d - partial_layers, d);
    out.circuit = std::move(c);
    return out;
}

std::pair<int, int> fold_parameters(double lambda, int depth) {
    if (depth <= 0) throw ValidationError("cannot fold an empty circuit");
    double k = (lambda - 1.0) * depth / 2.0;
    long kr = std::lround(k);
    if (lambda < 1.0 - 1e-12 || std::abs(k - static_cast<double>(kr)) > 1e-9) {
        std::ostringstream os;
        os << "noise scale " << lambda << " is not realizable as 1 + 2k/" << depth << "; realizable:";
        for (double v : realizable_scales(depth, std::max(lambda, 3.0))) os << ' ' << v;
        throw ValidationError(os.str());
    }
    return {static_cast<int>(kr / depth), static_cast<int>(kr % depth)};
}

std::vector<double> realizable_scales(int depth, double max_scale) {
    std::vector<double> out;
    for (int k = 0; 1.0 + 2.0 * k / depth <= max_scale + 1e-12; ++k) out.push_back(1.0 + 2.0 * k / depth);
    return out;
}

}  // namespace znq
