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

#include "znq/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "znq/embedding.h"
#include "znq/errors.h"

namespace znq {

using nlohmann::json;

namespace {

void check_keys(const json &j, const std::string &where, std::initializer_list<const char *> allowed) {
    if (!j.is_object()) throw ValidationError("config section '" + where + "' must be an object");
    std::set<std::string> ok;
    for (const char *k : allowed) ok.insert(k);
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!ok.count(it.key())) {
            throw ValidationError("unknown config key '" + where + "." + it.key() + "'");
        }
    }
}

template <typename T>
void read(const json &j, const char *key, T &out, const std::string &where) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception &) {
        throw ValidationError("config key '" + where + "." + key + "' has the wrong type");
    }
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fnv1a_hex(const std::string &bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

bool ExperimentConfig::operator==(const ExperimentConfig &o) const {
    return lattice == o.lattice && couplings.xi == o.couplings.xi && couplings.mu == o.couplings.mu &&
           dt == o.dt && embedding == o.embedding && noise == o.noise && mitigation == o.mitigation &&
           run == o.run && output == o.output;
}

void ExperimentConfig::validate() const {
    lattice.validate();
    if (!std::isfinite(couplings.xi) || !std::isfinite(couplings.mu)) {
        throw ValidationError("couplings must be finite");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("trotter.dt must be positive");
    if (embedding.mode != "fixed" && embedding.mode != "brute" && embedding.mode != "greedy") {
        throw ValidationError("embedding.mode must be fixed, brute or greedy");
    }
    if (embedding.restarts < 1) throw ValidationError("embedding.restarts must be at least 1");
    if (!embedding.fixed_permutation.empty()) validate_permutation(embedding.fixed_permutation);
    noise.validate();
    if (mitigation.trex_twirls < 1) throw ValidationError("mitigation.trex.twirls must be at least 1");
    zne_config().validate();
    if (!(run.t_max >= 0.0)) throw ValidationError("run.t_max must be non-negative");
    if (!(run.t_step > 0.0)) throw ValidationError("run.t_step must be positive");
    double r = run.t_step / dt;
    if (std::abs(r - std::round(r)) > 1e-9) throw ValidationError("run.t_step must be a multiple of trotter.dt");
    for (double s : run.s_values) {
        if (!(s >= 0.0)) throw ValidationError("run.s_values must be non-negative");
    }
    if (run.regimes.empty()) throw ValidationError("run.regimes must not be empty");
    if (output.dir.empty()) throw ValidationError("output.dir must not be empty");
    for (const auto &f : output.formats) {
        if (f != "csv" && f != "json") throw ValidationError("output.formats accepts csv and json");
    }
}

ZneConfig ExperimentConfig::zne_config() const {
    ZneConfig z;
    z.scales = mitigation.zne_scales;
    if (mitigation.zne_model != "auto") z.model = parse_zne_model(mitigation.zne_model);
    z.order = mitigation.zne_order;
    return z;
}

std::string config_to_json(const ExperimentConfig &c) {
    json j;
    j["lattice"] = {{"num_sites", c.lattice.num_sites}, {"group_order", c.lattice.group_order},
                    {"filling", c.lattice.filling}};
    j["couplings"] = {{"xi", c.couplings.xi}, {"mu", c.couplings.mu}};
    j["trotter"] = {{"dt", c.dt}};
    j["embedding"] = {{"mode", c.embedding.mode},
                      {"restarts", c.embedding.restarts},
                      {"seed", c.embedding.seed},
                      {"fixed_permutation", c.embedding.fixed_permutation}};
    j["noise"] = {{"p1", c.noise.p1}, {"p2", c.noise.p2}, {"p3", c.noise.p3}, {"readout", c.noise.readout_flip}};
    j["mitigation"] = {
        {"trex", {{"twirls", c.mitigation.trex_twirls}, {"shots", c.mitigation.trex_shots}}},
        {"zne", {{"scales", c.mitigation.zne_scales}, {"model", c.mitigation.zne_model}, {"order", c.mitigation.zne_order}}}};
    json regimes = json::array();
    for (auto [xi, mu] : c.run.regimes) regimes.push_back({xi, mu});
    j["run"] = {{"shots", c.run.shots},     {"seed", c.run.seed},
                {"t_max", c.run.t_max},     {"t_step", c.run.t_step},
                {"s_values", c.run.s_values}, {"regimes", regimes},
                {"method", c.run.method}};
    j["output"] = {{"dir", c.output.dir}, {"formats", c.output.formats}};
    return j.dump(2) + "\n";
}

ExperimentConfig config_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    ExperimentConfig c;
    check_keys(j, "", {"lattice", "couplings", "trotter", "embedding", "noise", "mitigation", "run", "output"});
    if (j.contains("lattice")) {
        const auto &s = j["lattice"];
        check_keys(s, "lattice", {"num_sites", "group_order", "filling"});
        read(s, "num_sites", c.lattice.num_sites, "lattice");
        read(s, "group_order", c.lattice.group_order, "lattice");
        c.lattice.filling = c.lattice.num_sites / 2;
        read(s, "filling", c.lattice.filling, "lattice");
    }
    if (j.contains("couplings")) {
        const auto &s = j["couplings"];
        check_keys(s, "couplings", {"xi", "mu"});
        read(s, "xi", c.couplings.xi, "couplings");
        read(s, "mu", c.couplings.mu, "couplings");
    }
    if (j.contains("trotter")) {
        check_keys(j["trotter"], "trotter", {"dt"});
        read(j["trotter"], "dt", c.dt, "trotter");
    }
    if (j.contains("embedding")) {
        const auto &s = j["embedding"];
        check_keys(s, "embedding", {"mode", "restarts", "seed", "fixed_permutation"});
        read(s, "mode", c.embedding.mode, "embedding");
        read(s, "restarts", c.embedding.restarts, "embedding");
        read(s, "seed", c.embedding.seed, "embedding");
        read(s, "fixed_permutation", c.embedding.fixed_permutation, "embedding");
    }
    if (j.contains("noise")) {
        const auto &s = j["noise"];
        check_keys(s, "noise", {"p1", "p2", "p3", "readout"});
        read(s, "p1", c.noise.p1, "noise");
        read(s, "p2", c.noise.p2, "noise");
        read(s, "p3", c.noise.p3, "noise");
        read(s, "readout", c.noise.readout_flip, "noise");
    }
    if (j.contains("mitigation")) {
        const auto &s = j["mitigation"];
        check_keys(s, "mitigation", {"trex", "zne"});
        if (s.contains("trex")) {
            check_keys(s["trex"], "mitigation.trex", {"twirls", "shots"});
            read(s["trex"], "twirls", c.mitigation.trex_twirls, "mitigation.trex");
            read(s["trex"], "shots", c.mitigation.trex_shots, "mitigation.trex");
        }
        if (s.contains("zne")) {
            check_keys(s["zne"], "mitigation.zne", {"scales", "model", "order"});
            read(s["zne"], "scales", c.mitigation.zne_scales, "mitigation.zne");
            read(s["zne"], "model", c.mitigation.zne_model, "mitigation.zne");
            read(s["zne"], "order", c.mitigation.zne_order, "mitigation.zne");
        }
    }
    if (j.contains("run")) {
        const auto &s = j["run"];
        check_keys(s, "run", {"shots", "seed", "t_max", "t_step", "s_values", "regimes", "method"});
        read(s, "shots", c.run.shots, "run");
        read(s, "seed", c.run.seed, "run");
        read(s, "t_max", c.run.t_max, "run");
        read(s, "t_step", c.run.t_step, "run");
        read(s, "s_values", c.run.s_values, "run");
        read(s, "method", c.run.method, "run");
        if (s.contains("regimes")) {
            std::vector<std::vector<double>> raw;
            read(s, "regimes", raw, "run");
            c.run.regimes.clear();
            for (const auto &r : raw) {
                if (r.size() != 2) throw ValidationError("run.regimes entries must be [xi, mu] pairs");
                c.run.regimes.emplace_back(r[0], r[1]);
            }
        }
    }
    if (j.contains("output")) {
        const auto &s = j["output"];
        check_keys(s, "output", {"dir", "formats"});
        read(s, "dir", c.output.dir, "output");
        read(s, "formats", c.output.formats, "output");
    }
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

}  // namespace znq
