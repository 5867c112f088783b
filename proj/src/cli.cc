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

#include "znq/cli.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "znq/config.h"
#include "znq/embedding.h"
#include "znq/errors.h"
#include "znq/lattice.h"
#include "znq/observables.h"
#include "znq/parallel.h"
#include "znq/pauli.h"
#include "znq/symmetry.h"
#include "znq/trotter.h"

namespace znq {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

const std::vector<std::string> kSubcommands = {"basis",          "sectors", "decompose",     "optimize",
                                               "trotter",        "density-evolve", "green", "mitigate-demo",
                                               "reproduce-paper"};

struct Flags {
    std::string config_path;
    std::string out_dir;
    unsigned threads = 0;
    std::optional<std::uint64_t> seed, shots;
    std::optional<double> xi, mu, dt, t_max, s;
    std::optional<int> sites, group_order, restarts, steps;
    std::string method;
    std::string noise;
    std::string mode;
    std::string permutation;
};

// Collects output files; written together with a manifest at the end.
class Artifacts {
public:
    void add(const std::string &name, std::string content) { files_.emplace_back(name, std::move(content)); }

    void write(const fs::path &dir, const std::string &subcommand, const ExperimentConfig &config,
               std::ostream &out) const {
        fs::create_directories(dir);
        ordered_json manifest;
        manifest["tool"] = "znq";
        manifest["version"] = kVersion;
        manifest["subcommand"] = subcommand;
        manifest["config_hash"] = fnv1a_hex(config_to_json(config));
        manifest["seed"] = config.run.seed;
        ordered_json files = ordered_json::object();
        for (const auto &[name, content] : files_) {
            std::ofstream f(dir / name, std::ios::binary);
            if (!f) throw ValidationError("cannot write " + (dir / name).string());
            f << content;
            files[name] = fnv1a_hex(content);
            out << (dir / name).string() << '\n';
        }
        manifest["files"] = files;
        std::ofstream m(dir / "manifest.json", std::ios::binary);
        m << manifest.dump(2) << '\n';
        std::ofstream c(dir / "config.json", std::ios::binary);
        c << config_to_json(config);
    }

private:
    std::vector<std::pair<std::string, std::string>> files_;
};

std::string num(double v) {
    return format_number(v);
}

std::string occupations_string(const GaugeConfig &c) {
    std::string s;
    for (auto o : c.occupations) s.push_back(o ? '1' : '0');
    return s;
}

std::vector<double> time_grid(double start, double stop, double step) {
    std::vector<double> out;
    long n0 = std::lround(start / step);
    long n1 = static_cast<long>(std::floor(stop / step + 1e-9));
    // Rounded to 12 decimals so grid times print as 0.3 rather than 0.30000000000000004.
    for (long k = n0; k <= n1; ++k) out.push_back(std::round(static_cast<double>(k) * step * 1e12) / 1e12);
    return out;
}

std::string regime_tag(double xi, double mu) {
    return "xi" + num(xi) + "_mu" + num(mu);
}

std::vector<int> parse_int_list(const std::string &s) {
    std::vector<int> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception &) {
            throw ValidationError("bad integer '" + item + "' in list '" + s + "'");
        }
    }
    return out;
}

ExperimentConfig resolve_config(const Flags &f) {
    ExperimentConfig c = f.config_path.empty() ? ExperimentConfig{} : load_config(f.config_path);
    if (f.sites) {
        c.lattice.num_sites = *f.sites;
        c.lattice.filling = *f.sites / 2;
    }
    if (f.group_order) c.lattice.group_order = *f.group_order;
    if (f.xi) c.couplings.xi = *f.xi;
    if (f.mu) c.couplings.mu = *f.mu;
    if (f.dt) c.dt = *f.dt;
    if (f.seed) {
        c.run.seed = *f.seed;
        c.embedding.seed = *f.seed;
    }
    if (f.shots) c.run.shots = *f.shots;
    if (f.t_max) c.run.t_max = *f.t_max;
    if (f.s) c.run.s_values = {*f.s};
    if (f.restarts) c.embedding.restarts = *f.restarts;
    if (!f.mode.empty()) c.embedding.mode = f.mode;
    if (!f.method.empty()) c.run.method = f.method;
    if (!f.permutation.empty()) {
        c.embedding.mode = "fixed";
        if (f.permutation == "identity" || f.permutation == "default") {
            c.embedding.fixed_permutation.clear();
        } else {
            c.embedding.fixed_permutation = parse_int_list(f.permutation);
        }
    }
    if (!f.noise.empty()) {
        std::vector<double> v;
        std::stringstream ss(f.noise);
        for (std::string item; std::getline(ss, item, ',');) {
            try {
                v.push_back(std::stod(item));
            } catch (const std::exception &) {
                throw ValidationError("bad --noise value '" + f.noise + "'");
            }
        }
        if (v.size() != 4) throw ValidationError("--noise expects p1,p2,p3,readout");
        c.noise = NoiseModel{v[0], v[1], v[2], v[3]};
    }
    if (f.dt && !f.config_path.empty()) {
        // Keep the output grid aligned with an overridden step.
        double r = c.run.t_step / c.dt;
        if (std::abs(r - std::round(r)) > 1e-9) c.run.t_step = c.dt;
    } else if (f.dt) {
        c.run.t_step = c.dt;
    }
    c.validate();
    return c;
}

fs::path resolve_output_dir(const Flags &f, const ExperimentConfig &c) {
    fs::path dir = c.output.dir;
    if (const char *env = std::getenv("ZNQ_OUTPUT_DIR"); env && *env) dir = env;
    if (!f.out_dir.empty()) dir = f.out_dir;
    return dir;
}

std::vector<int> choose_permutation(const ExperimentConfig &c, const CMatrix &h_sector) {
    std::size_t dim = std::size_t{1} << qubits_for_dimension(static_cast<std::size_t>(h_sector.rows()));
    if (c.embedding.mode == "brute") return brute_force_search(h_sector).best.permutation;
    if (c.embedding.mode == "greedy") {
        return greedy_local_search(h_sector, {c.embedding.restarts, c.embedding.seed}).permutation;
    }
    if (c.embedding.fixed_permutation.empty()) return {};
    if (c.embedding.fixed_permutation.size() != dim) {
        throw ValidationError("embedding.fixed_permutation has " + std::to_string(c.embedding.fixed_permutation.size()) +
                              " entries but the padded sector has dimension " + std::to_string(dim) +
                              "; pass --permutation identity or another mode");
    }
    return c.embedding.fixed_permutation;
}

VacuumModel model_for(const ExperimentConfig &c, const Couplings &couplings) {
    LatticeSpec spec = c.lattice;
    auto basis = enumerate_basis(spec);
    auto h = build_hamiltonian(basis, couplings, spec);
    auto blocks = sector_decompose(basis, spec, h);
    auto vs = vacuum_sector(blocks, basis, spec);
    return build_vacuum_model(spec, couplings, choose_permutation(c, vs.block.hamiltonian));
}

RunOptions run_options(const ExperimentConfig &c) {
    RunOptions o;
    o.dt = c.dt;
    o.noise = c.noise;
    o.shots = c.run.shots;
    o.seed = c.run.seed;
    o.trex_twirls = c.mitigation.trex_twirls;
    o.trex_calibration_shots = c.run.shots == 0 ? 0 : c.mitigation.trex_shots;
    o.zne = c.zne_config();
    return o;
}

std::string terms_csv(const PauliDecomposition &d) {
    std::string s = "indices,coefficient,weight\n";
    for (const auto &[p, c] : d.terms) s += p.digits() + "," + num(c) + "," + std::to_string(p.weight()) + "\n";
    return s;
}

std::string green_csv_header() {
    return "t,s,re,im,stderr_re,stderr_im,method\n";
}

std::string green_csv_rows(const std::vector<GreenPoint> &pts) {
    std::string s;
    for (const auto &g : pts) {
        s += num(g.t) + "," + num(g.s) + "," + num(g.value.real()) + "," + num(g.value.imag()) + "," +
             num(g.std_error_re) + "," + num(g.std_error_im) + "," + to_string(g.method) + "\n";
    }
    return s;
}

ordered_json matrix_json(const CMatrix &m) {
    ordered_json re = ordered_json::array(), im = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json rr = ordered_json::array(), ii = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            rr.push_back(m(i, j).real());
            ii.push_back(m(i, j).imag());
        }
        re.push_back(rr);
        im.push_back(ii);
    }
    return {{"re", re}, {"im", im}};
}

std::vector<Method> methods_for(const std::string &name, std::vector<Method> all) {
    if (name == "all") return all;
    return {parse_method(name)};
}

// Subcommands.

void cmd_basis(const ExperimentConfig &c, Artifacts &a, std::ostream &out) {
    auto basis = enumerate_basis(c.lattice);
    auto h = build_hamiltonian(basis, c.couplings, c.lattice);
    std::string s = "index,occupations,field_indices,field_label,diagonal\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::string fields;
        for (std::size_t k = 0; k < basis[i].field_indices.size(); ++k) {
            if (k) fields += ' ';
            fields += std::to_string(basis[i].field_indices[k]);
        }
        s += std::to_string(i) + "," + occupations_string(basis[i]) + "," + fields + "," +
             field_label(basis[i], c.lattice.group_order) + "," +
             num(h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real()) + "\n";
    }
    a.add("basis.csv", s);
    out << basis.size() << " gauge-invariant states\n";
}

void cmd_sectors(const ExperimentConfig &c, Artifacts &a, std::ostream &out) {
    auto basis = enumerate_basis(c.lattice);
    auto h = build_hamiltonian(basis, c.couplings, c.lattice);
    auto blocks = sector_decompose(basis, c.lattice, h);
    ordered_json j;
    j["num_states"] = basis.size();
    ordered_json arr = ordered_json::array();
    for (const auto &b : blocks) {
        ordered_json bj;
        bj["label"] = b.label.name();
        bj["dimension"] = b.dimension();
        bj["representatives"] = b.representatives;
        bj["hamiltonian"] = matrix_json(b.hamiltonian);
        arr.push_back(bj);
        out << b.label.name() << " dimension " << b.dimension() << '\n';
    }
    j["blocks"] = arr;
    a.add("sectors.json", j.dump(2) + "\n");
}

void cmd_decompose(const ExperimentConfig &c, Artifacts &a, std::ostream &out) {
    auto m = model_for(c, c.couplings);
    a.add("hamiltonian_terms.csv", terms_csv(m.hamiltonian_terms));
    a.add("density_terms.csv", terms_csv(m.density_terms));
    out << m.hamiltonian_terms.non_identity_count() << " non-identity terms, "
        << m.hamiltonian_terms.full_weight_count() << " full weight\n";
}

void cmd_optimize(const ExperimentConfig &c, Artifacts &a, std::ostream &out) {
    auto basis = enumerate_basis(c.lattice);
    auto h = build_hamiltonian(basis, c.couplings, c.lattice);
    auto blocks = sector_decompose(basis, c.lattice, h);
    auto vs = vacuum_sector(blocks, basis, c.lattice);
    const CMatrix &hs = vs.block.hamiltonian;
    ordered_json j;
    j["sector_dimension"] = hs.rows();
    j["num_qubits"] = qubits_for_dimension(static_cast<std::size_t>(hs.rows()));
    j["padded_dimension"] = std::size_t{1} << qubits_for_dimension(static_cast<std::size_t>(hs.rows()));
    std::string mode = c.embedding.mode == "fixed" ? "brute" : c.embedding.mode;
    if (mode == "brute" && qubits_for_dimension(static_cast<std::size_t>(hs.rows())) > 3) mode = "greedy";
    j["mode"] = mode;
    Embedding best;
    if (mode == "brute") {
        auto r = brute_force_search(hs);
        best = r.best;
        j["identity_objective"] = r.identity_objective;
        ordered_json hist = ordered_json::object();
        for (auto it = r.histogram.rbegin(); it != r.histogram.rend(); ++it) hist[std::to_string(it->first)] = it->second;
        j["histogram"] = hist;
        std::string s = "rank,objective\n";
        for (std::size_t k = 0; k < r.sorted_objectives.size(); ++k) {
            s += std::to_string(k) + "," + std::to_string(r.sorted_objectives[k]) + "\n";
        }
        a.add("objectives_sorted.csv", s);
    } else {
        best = greedy_local_search(hs, {c.embedding.restarts, c.embedding.seed});
        j["restarts"] = c.embedding.restarts;
        j["seed"] = c.embedding.seed;
        j["identity_objective"] = embedding_objective(hs, identity_permutation(best.dimension()));
    }
    j["permutation"] = best.permutation;
    j["objective"] = best.objective_value;
    a.add("optimize.json", j.dump(2) + "\n");
    out << "objective " << best.objective_value << '\n';
}

void cmd_trotter(const ExperimentConfig &c, const Flags &f, Artifacts &a, std::ostream &out) {
    auto m = model_for(c, c.couplings);
    Circuit step = trotter_step(m.hamiltonian_terms, c.dt);
    a.add("trotter_step.txt", step.to_text());
    if (f.steps) {
        if (*f.steps < 0) throw ValidationError("--steps must be non-negative");
        Circuit ev = compile_evolution(m.hamiltonian_terms, *f.steps * c.dt, c.dt, true, m.vacuum_index);
        a.add("evolution.txt", ev.to_text());
        out << "evolution: " << ev.gate_count() << " gates, depth " << ev.depth() << '\n';
    }
    out << "step: " << step.gate_count() << " gates, depth " << step.depth() << '\n';
}

std::string density_csv(const VacuumModel &m, const std::vector<double> &grid, const std::vector<Method> &methods,
                        const RunOptions &o) {
    std::vector<std::vector<SeriesPoint>> cols;
    for (Method meth : methods) cols.push_back(density_series(m, grid, meth, o));
    std::string s = "t";
    for (Method meth : methods) s += "," + to_string(meth) + ",stderr_" + to_string(meth);
    s += "\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
        s += num(grid[k]);
        for (const auto &col : cols) s += "," + num(col[k].estimate.value) + "," + num(col[k].estimate.std_error);
        s += "\n";
    }
    return s;
}

void cmd_density(const ExperimentConfig &c, Artifacts &a, std::ostream &out) {
    auto m = model_for(c, c.couplings);
    auto grid = time_grid(0.0, c.run.t_max, c.run.t_step);
    auto methods = methods_for(c.run.method, {Method::Exact, Method::TrotterExact, Method::Noisy, Method::Trex, Method::Zne});
    a.add("density.csv", density_csv(m, grid, methods, run_options(c)));
    out << grid.size() << " time points\n";
}

void cmd_green(const ExperimentConfig &c, Artifacts &a, std::ostream &out) {
    auto m = model_for(c, c.couplings);
    auto o = run_options(c);
    auto methods = methods_for(c.run.method, {Method::Exact, Method::TrotterExact, Method::Noisy, Method::Trex, Method::Zne});
    std::string s = green_csv_header();
    std::size_t n = 0;
    for (double sv : c.run.s_values) {
        auto grid = time_grid(sv, c.run.t_max, c.run.t_step);
        for (Method meth : methods) {
            auto pts = green_series(m, sv, grid, meth, o);
            s += green_csv_rows(pts);
            n += pts.size();
        }
    }
    a.add("green.csv", s);
    out << n << " Green function points\n";
}

void cmd_mitigate_demo(const ExperimentConfig &c, Artifacts &a, std::ostream &out) {
    auto m = model_for(c, c.couplings);
    auto grid = time_grid(0.0, c.run.t_max, c.run.t_step);
    auto o = run_options(c);
    auto exact = density_series(m, grid, Method::Exact, o);
    auto noisy = density_series(m, grid, Method::Noisy, o);
    auto trex = density_series(m, grid, Method::Trex, o);
    auto zne = density_series(m, grid, Method::Zne, o);
    std::string s = "t,exact,noisy,trex,zne,stderr_noisy,stderr_trex,stderr_zne\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
        s += num(grid[k]) + "," + num(exact[k].estimate.value) + "," + num(noisy[k].estimate.value) + "," +
             num(trex[k].estimate.value) + "," + num(zne[k].estimate.value) + "," + num(noisy[k].estimate.std_error) +
             "," + num(trex[k].estimate.std_error) + "," + num(zne[k].estimate.std_error) + "\n";
    }
    a.add("mitigate_demo.csv", s);
    out << grid.size() << " time points\n";
}

void cmd_reproduce(const ExperimentConfig &c, Artifacts &a, std::ostream &out, std::ostream &err) {
    auto clock = std::chrono::steady_clock::now();
    auto lap = [&](const std::string &what) {
        auto now = std::chrono::steady_clock::now();
        err << what << ": " << std::chrono::duration<double>(now - clock).count() << " s\n";
        clock = now;
    };
    LatticeSpec spec = LatticeSpec::half_filled(4, 3);
    auto ident = build_vacuum_model(spec, c.couplings, identity_permutation(8));
    auto opt = build_vacuum_model(spec, c.couplings, reference_permutation());
    a.add("coefficients_identity.csv", terms_csv(ident.hamiltonian_terms));
    a.add("coefficients_optimal.csv", terms_csv(opt.hamiltonian_terms));
    a.add("density_coefficients.csv", terms_csv(opt.density_terms));

    auto brute = brute_force_search(opt.sector.hamiltonian);
    std::string hs = "rank,objective\n";
    for (std::size_t k = 0; k < brute.sorted_objectives.size(); ++k) {
        hs += std::to_string(k) + "," + std::to_string(brute.sorted_objectives[k]) + "\n";
    }
    a.add("objectives_sorted.csv", hs);
    lap("coefficients and brute force");

    std::string table = "num_sites,sector_dimension,padded_dimension,num_qubits,identity_objective,greedy_objective\n";
    for (int n_sites : {2, 4, 6, 8}) {
        LatticeSpec sp = LatticeSpec::half_filled(n_sites, 3);
        auto basis = enumerate_basis(sp);
        auto h = build_hamiltonian(basis, c.couplings, sp);
        auto blocks = sector_decompose(basis, sp, h);
        auto vs = vacuum_sector(blocks, basis, sp);
        auto d = static_cast<std::size_t>(vs.block.dimension());
        int q = qubits_for_dimension(d);
        auto g = greedy_local_search(vs.block.hamiltonian, {c.embedding.restarts, c.embedding.seed});
        table += std::to_string(n_sites) + "," + std::to_string(d) + "," + std::to_string(std::size_t{1} << q) + "," +
                 std::to_string(q) + "," +
                 std::to_string(embedding_objective(vs.block.hamiltonian, identity_permutation(std::size_t{1} << q))) +
                 "," + std::to_string(g.objective_value) + "\n";
    }
    a.add("greedy_sizes.csv", table);
    lap("greedy search over lattice sizes");

    auto o = run_options(c);
    for (auto [xi, mu] : c.run.regimes) {
        auto m = build_vacuum_model(spec, Couplings{xi, mu}, reference_permutation());
        auto grid = time_grid(0.0, c.run.t_max, c.run.t_step);
        a.add("density_" + regime_tag(xi, mu) + ".csv",
              density_csv(m, grid, {Method::Exact, Method::TrotterExact, Method::Noisy, Method::Trex, Method::Zne}, o));
        for (double sv : c.run.s_values) {
            auto ggrid = time_grid(sv, c.run.t_max, c.run.t_step);
            std::string s = green_csv_header();
            for (Method meth : {Method::Exact, Method::TrotterExact, Method::Noisy, Method::Trex, Method::Zne}) {
                s += green_csv_rows(green_series(m, sv, ggrid, meth, o));
            }
            a.add("green_" + regime_tag(xi, mu) + "_s" + num(sv) + ".csv", s);
        }
        lap("regime " + regime_tag(xi, mu));
    }
    out << "reproduction complete\n";
}

void add_common(CLI::App *sub, Flags &f) {
    sub->add_option("--config", f.config_path, "JSON experiment config");
    sub->add_option("--out", f.out_dir, "output directory");
    sub->add_option("--threads", f.threads, "worker thread cap (0 = all cores)");
    sub->add_option("--seed", f.seed, "master seed");
    sub->add_option("--shots", f.shots, "shots per circuit (0 = expectation values)");
    sub->add_option("--xi", f.xi, "hopping coupling");
    sub->add_option("--mu", f.mu, "mass coupling");
    sub->add_option("--dt", f.dt, "Trotter step");
    sub->add_option("--sites", f.sites, "number of lattice sites N");
    sub->add_option("--group-order", f.group_order, "Z_n truncation n");
    sub->add_option("--noise", f.noise, "p1,p2,p3,readout");
    sub->add_option("--permutation", f.permutation, "embedding: identity or comma-separated 1-based list");
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    std::string usage =
        "usage: znq <subcommand> [options]\n"
        "subcommands: basis, sectors, decompose, optimize, trotter, density-evolve, green,\n"
        "             mitigate-demo, reproduce-paper\n"
        "run 'znq <subcommand> --help' for options\n";
    if (argc < 2) {
        err << usage;
        return kExitUsage;
    }
    std::string name = argv[1];
    if (name == "--help" || name == "-h") {
        out << usage;
        return kExitOk;
    }
    if (name == "--version") {
        out << "znq " << kVersion << '\n';
        return kExitOk;
    }
    if (std::find(kSubcommands.begin(), kSubcommands.end(), name) == kSubcommands.end()) {
        err << "unknown subcommand '" << name << "'\n" << usage;
        return kExitUsage;
    }

    CLI::App app{"znq: Z_n lattice Schwinger model simulation"};
    app.name("znq");
    Flags f;
    std::map<std::string, CLI::App *> subs;
    for (const auto &s : kSubcommands) subs[s] = app.add_subcommand(s);
    for (auto &[s, sub] : subs) add_common(sub, f);
    subs["optimize"]->add_option("--mode", f.mode, "brute or greedy");
    subs["optimize"]->add_option("--restarts", f.restarts, "greedy restarts");
    subs["trotter"]->add_option("--steps", f.steps, "also compile this many steps from the vacuum");
    for (const char *s : {"density-evolve", "green"}) {
        subs[s]->add_option("--method", f.method, "exact, trotter_exact, circuit, noisy, trex, zne or all");
        subs[s]->add_option("--t-max", f.t_max, "last time of the grid");
    }
    subs["green"]->add_option("--s", f.s, "earlier time s");
    subs["mitigate-demo"]->add_option("--t-max", f.t_max, "last time of the grid");
    subs["reproduce-paper"]->add_option("--t-max", f.t_max, "last time of the grid");
    std::string phi_convention = "standard";
    subs["green"]
        ->add_option("--phi-convention", phi_convention, "phase readout: phi = 0 gives Im G, phi = pi/2 gives Re G")
        ->check(CLI::IsMember({"standard"}));

    auto start = std::chrono::steady_clock::now();
    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp &) {
            out << app.get_subcommand(name)->help();
            return kExitOk;
        } catch (const CLI::ParseError &e) {
            err << "error: " << e.what() << '\n';
            return kExitValidation;
        }
        set_thread_cap(f.threads);
        ExperimentConfig config = resolve_config(f);
        Artifacts artifacts;
        if (name == "basis") cmd_basis(config, artifacts, out);
        else if (name == "sectors") cmd_sectors(config, artifacts, out);
        else if (name == "decompose") cmd_decompose(config, artifacts, out);
        else if (name == "optimize") cmd_optimize(config, artifacts, out);
        else if (name == "trotter") cmd_trotter(config, f, artifacts, out);
        else if (name == "density-evolve") cmd_density(config, artifacts, out);
        else if (name == "green") cmd_green(config, artifacts, out);
        else if (name == "mitigate-demo") cmd_mitigate_demo(config, artifacts, out);
        else cmd_reproduce(config, artifacts, out, err);
        artifacts.write(resolve_output_dir(f, config), name, config, out);
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const InvariantError &e) {
        err << "invariant violated: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    err << name << " finished in "
        << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
    return kExitOk;
}

}  // namespace znq
