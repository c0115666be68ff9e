// Copyright 2026 The chainbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chainbell/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "chainbell/certify.h"
#include "chainbell/optimizer.h"
#include "chainbell/randomness.h"
#include "chainbell/rng.h"
#include "chainbell/swapcircuit.h"

namespace chainbell::cli {

namespace {

using json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

std::string sci(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string utc_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

const char *ext_for(Format f) {
    switch (f) {
        case Format::json:
            return "json";
        case Format::csv:
            return "csv";
        case Format::text:
            return "txt";
    }
    return "out";
}

Format default_format(Command c) {
    switch (c) {
        case Command::certify:
        case Command::optimize:
        case Command::swap:
        case Command::robustness:
            return Format::json;
        case Command::randomness:
            return Format::text;
        case Command::curves:
            return Format::csv;
    }
    return Format::text;
}

json config_json(const RunConfig &cfg) {
    json j;
    j["command"] = command_name(cfg.command);
    j["n"] = cfg.n;
    j["n_list"] = cfg.n_list;
    j["dim"] = cfg.dim;
    j["seed"] = cfg.seed;
    j["restarts"] = cfg.restarts;
    j["epsilon"] = cfg.epsilon ? json(*cfg.epsilon) : json(nullptr);
    j["eps_grid"] = cfg.eps_grid;
    j["r_grid"] = cfg.r_grid;
    j["tol"] = cfg.tol;
    j["out"] = cfg.out;
    j["format"] = format_name(cfg.format);
    j["which"] = bound_name(cfg.which);
    j["timestamp"] = cfg.timestamp;
    return j;
}

json envelope(const RunConfig &cfg) {
    json j;
    j["version"] = CHAINBELL_VERSION;
    if (cfg.timestamp) {
        j["generated_at"] = utc_timestamp();
    }
    j["config"] = config_json(cfg);
    return j;
}

json pair_json(std::pair<int, int> p) {
    return json::array({p.first, p.second});
}

// Writes via a sibling temp file and rename so a failed run never leaves a
// partial file behind.
void write_atomically(const std::filesystem::path &path, const std::string &content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        f << content;
        f.flush();
        if (!f) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot rename into " + path.string());
    }
}

std::filesystem::path destination(const RunConfig &cfg) {
    const char *env = std::getenv("CHAINBELL_OUTPUT_DIR");
    std::string dir = env ? env : "";
    if (!cfg.out.empty()) {
        std::filesystem::path p(cfg.out);
        if (p.is_relative() && !dir.empty()) {
            return std::filesystem::path(dir) / p;
        }
        return p;
    }
    if (cfg.out.empty() && !dir.empty()) {
        return std::filesystem::path(dir) / (std::string(command_name(cfg.command)) + "." + ext_for(cfg.format));
    }
    return {};
}

void emit(const RunConfig &cfg, const std::string &content, std::ostream &out) {
    std::filesystem::path dest = destination(cfg);
    if (dest.empty()) {
        out << content;
        return;
    }
    write_atomically(dest, content);
    out << "wrote " << dest.string() << "\n";
}

void require_format(const RunConfig &cfg, std::initializer_list<Format> allowed) {
    if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end()) {
        throw std::invalid_argument(std::string("format ") + format_name(cfg.format) + " is not available for " +
                                    command_name(cfg.command));
    }
}

// --- certify -------------------------------------------------------------

int cmd_certify(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg, {Format::json, Format::text});
    Realization r = reference_realization(cfg.n, cfg.dim);
    SOSReport sos = check_selftest_relations(r, cfg.tol);
    SwapObservables s = swap_observables(r);
    SwapRelationReport rel = check_swap_relations(r, s);
    std::optional<StateReconstruction> rec;
    if (cfg.dim == 2) {
        rec = reconstruct_state(r);
    }
    bool rec_ok = !rec || rec->fidelity_with_phi_plus >= 1 - cfg.tol;
    bool pass = sos.pass && rel.max() <= cfg.tol && rec_ok;

    if (cfg.format == Format::json) {
        json j = envelope(cfg);
        json js;
        js["nu"] = sos.nu;
        js["nu_sum"] = sos.nu_sum;
        js["bell_value"] = sos.bell_value;
        js["quantum_optimum"] = quantum_optimum(cfg.n);
        js["gamma_expectation"] = sos.gamma_expectation;
        js["gamma_identity_defect"] = sos.gamma_identity_defect;
        js["l_residuals"] = sos.l_residuals;
        js["alice_anticomm_dev"] = sos.alice_anticomm_dev;
        js["bob_anticomm_dev"] = sos.bob_anticomm_dev;
        js["correlation_dev"] = sos.correlation_dev;
        js["bob_nu"] = sos.bob_nu;
        js["bob_l_residuals"] = sos.bob_l_residuals;
        js["bob_script_anticomm_dev"] = sos.bob_script_anticomm_dev;
        js["pass"] = sos.pass;
        j["sos"] = js;
        json jr;
        jr["z_transfer"] = rel.z_transfer;
        jr["x_transfer"] = rel.x_transfer;
        jr["anticomm_a"] = rel.anticomm_a;
        jr["anticomm_b"] = rel.anticomm_b;
        j["swap_relations"] = jr;
        j["swap_convention"] = s.odd ? std::string("odd n: Z-role projectors, X-role controls, junk (1 + Z_A) psi / sqrt 2")
                                     : "even n: X-role projectors, Z-role controls, junk (1 + X_A) psi / sqrt 2; " +
                                           s.zb_normalizer;
        if (rec) {
            json jc;
            jc["fidelity_with_phi_plus"] = rec->fidelity_with_phi_plus;
            jc["fidelity_with_input"] = rec->fidelity_with_input;
            jc["purity"] = rec->purity;
            jc["min_eigenvalue"] = rec->min_eigenvalue;
            jc["product_defect"] = rec->product_defect;
            j["reconstruction"] = jc;
        } else {
            j["reconstruction"] = nullptr;
        }
        j["pass"] = pass;
        emit(cfg, j.dump(2) + "\n", out);
    } else {
        std::ostringstream t;
        t << "certify n=" << cfg.n << " dim=" << cfg.dim << " tol=" << sci(cfg.tol) << "\n";
        t << "  Bell value      " << fixed(sos.bell_value, 12) << " (optimum " << fixed(quantum_optimum(cfg.n), 12)
          << ")\n";
        t << "  <Gamma>         " << sci(sos.gamma_expectation) << "\n";
        double lmax = *std::max_element(sos.l_residuals.begin(), sos.l_residuals.end());
        t << "  max ||L psi||   " << sci(lmax) << "\n";
        t << "  anticomm dev    " << sci(std::max(sos.alice_anticomm_dev, sos.bob_anticomm_dev)) << "\n";
        t << "  correlation dev " << sci(sos.correlation_dev) << "\n";
        t << "  swap relations  " << sci(rel.max()) << "\n";
        if (rec) {
            t << "  fidelity(phi+)  " << fixed(rec->fidelity_with_phi_plus, 12) << "\n";
        }
        t << (pass ? "PASS" : "FAIL") << "\n";
        emit(cfg, t.str(), out);
    }
    return pass ? kOk : kCertificationFailed;
}

// --- optimize ------------------------------------------------------------

int cmd_optimize(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg, {Format::json, Format::text});
    SeesawConfig sc;
    sc.dim = cfg.dim;
    sc.restarts = cfg.restarts;
    sc.seed = cfg.seed;
    SeesawResult res = seesaw(cfg.n, sc);
    double opt = quantum_optimum(cfg.n);
    size_t restarts = res.iterations.size();
    int n_conv = static_cast<int>(std::count(res.restart_converged.begin(), res.restart_converged.end(), true));

    if (cfg.format == Format::json) {
        json j = envelope(cfg);
        j["best_value"] = res.best_value;
        j["quantum_optimum"] = opt;
        j["classical_bound"] = classical_bound(cfg.n);
        j["gap"] = opt - res.best_value;
        j["restarts"] = restarts;
        j["best_restart"] = res.best_restart;
        j["converged"] = res.converged;
        j["restarts_converged"] = n_conv;
        json finals = json::array();
        json iters = json::array();
        for (const auto &trace : res.iterations) {
            finals.push_back(trace.empty() ? 0.0 : trace.back());
            iters.push_back(trace.size());
        }
        j["restart_final_values"] = finals;
        j["restart_rounds"] = iters;
        emit(cfg, j.dump(2) + "\n", out);
    } else {
        std::ostringstream t;
        t << "optimize n=" << cfg.n << " dim=" << cfg.dim << " restarts=" << restarts << " seed=" << cfg.seed << "\n";
        t << "  best value      " << fixed(res.best_value, 12) << "\n";
        t << "  quantum optimum " << fixed(opt, 12) << "\n";
        t << "  gap             " << sci(opt - res.best_value) << "\n";
        t << "  converged       " << n_conv << "/" << restarts << "\n";
        emit(cfg, t.str(), out);
    }
    return kOk;
}

// --- swap ----------------------------------------------------------------

constexpr int kSwapSamples = 10;

int cmd_swap(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg, {Format::json, Format::text});
    Realization r = reference_realization(cfg.n, cfg.dim);
    SwapObservables s = swap_observables(r);
    using K = Insertion::Kind;
    std::vector<Insertion> ins = {{K::identity, 0, 0}, {K::XA, 0, 0}, {K::XB, 0, 0}, {K::ZA, 0, 0}, {K::ZB, 0, 0}};
    Rng rng(cfg.seed);
    for (int k = 0; k < kSwapSamples; k++) {
        int i = 1 + static_cast<int>(rng.next_u64() % static_cast<uint64_t>(cfg.n));
        int jj = 1 + static_cast<int>(rng.next_u64() % static_cast<uint64_t>(cfg.n));
        ins.push_back(Insertion::joint_ab(i, jj));
    }
    bool pass = true;
    json rows = json::array();
    std::ostringstream t;
    t << "swap n=" << cfg.n << " dim=" << cfg.dim << " (" << (s.odd ? "Z" : "X") << "-projector convention)\n";
    for (const Insertion &x : ins) {
        SwapOutput o = apply_isometry(r, s, x);
        bool ok = o.ancilla_fidelity >= 1 - cfg.tol;
        pass = pass && ok;
        json row;
        row["insertion"] = x.label();
        row["ancilla_fidelity"] = o.ancilla_fidelity;
        row["junk_fidelity"] = o.junk_fidelity;
        row["target_residual"] = o.target_residual;
        row["factorization_residual"] = o.factorization_residual;
        row["pass"] = ok;
        rows.push_back(row);
        t << "  " << x.label() << ": ancilla fidelity " << fixed(o.ancilla_fidelity, 12) << ", junk fidelity "
          << fixed(o.junk_fidelity, 12) << (ok ? "" : "  FAIL") << "\n";
    }
    if (cfg.format == Format::json) {
        json j = envelope(cfg);
        j["relations"] = check_swap_relations(r, s).max();
        j["insertions"] = rows;
        j["pass"] = pass;
        emit(cfg, j.dump(2) + "\n", out);
    } else {
        t << (pass ? "PASS" : "FAIL") << "\n";
        emit(cfg, t.str(), out);
    }
    return pass ? kOk : kCertificationFailed;
}

// --- robustness ----------------------------------------------------------

constexpr double kTargetFidelity = 0.5;

json point_json(const RobustnessPoint &p) {
    json j;
    j["n"] = p.n;
    j["r"] = p.r;
    j["xi"] = p.xi;
    j["epsilon"] = p.epsilon;
    j["f_s"] = p.f_s;
    j["f_o"] = p.f_o;
    j["F_s_lower"] = p.F_s_lower;
    j["F_o_lower"] = p.F_o_lower;
    return j;
}

int cmd_robustness(const RunConfig &cfg, std::ostream &out) {
    std::vector<RobustnessPoint> pts;
    if (!cfg.eps_grid.empty()) {
        for (double e : cfg.eps_grid) {
            pts.push_back(robustness_at_epsilon(cfg.n, e));
        }
    } else {
        std::vector<double> grid = cfg.r_grid.empty() ? parse_grid("0.85:1:0.01", 0.01) : cfg.r_grid;
        for (double r : grid) {
            pts.push_back(robustness_at_r(cfg.n, r));
        }
    }
    double thr_s = threshold_r(cfg.n, kTargetFidelity, BoundKind::state);
    double thr_o = threshold_r(cfg.n, kTargetFidelity, BoundKind::observable);
    double eps_s = epsilon_from_xi(cfg.n, xi_from_r(cfg.n, thr_s));
    double eps_o = epsilon_from_xi(cfg.n, xi_from_r(cfg.n, thr_o));

    if (cfg.format == Format::json) {
        json j = envelope(cfg);
        json th;
        th["target_fidelity"] = kTargetFidelity;
        th["state_r"] = thr_s;
        th["state_epsilon"] = eps_s;
        th["observable_r"] = thr_o;
        th["observable_epsilon"] = eps_o;
        j["thresholds"] = th;
        json rows = json::array();
        for (const auto &p : pts) {
            rows.push_back(point_json(p));
        }
        j["points"] = rows;
        emit(cfg, j.dump(2) + "\n", out);
    } else if (cfg.format == Format::csv) {
        std::ostringstream t;
        t << "n,r,xi,epsilon,f_s,f_o,F_s_lower,F_o_lower\n";
        for (const auto &p : pts) {
            t << p.n << "," << num(p.r) << "," << num(p.xi) << "," << num(p.epsilon) << "," << num(p.f_s) << ","
              << num(p.f_o) << "," << num(p.F_s_lower) << "," << num(p.F_o_lower) << "\n";
        }
        emit(cfg, t.str(), out);
    } else {
        std::ostringstream t;
        t << "robustness n=" << cfg.n << "\n";
        t << "  F_s >= " << kTargetFidelity << " needs r >= " << fixed(thr_s, 4) << " (eps <= " << fixed(eps_s, 4)
          << ")\n";
        t << "  F_o >= " << kTargetFidelity << " needs r >= " << fixed(thr_o, 4) << " (eps <= " << fixed(eps_o, 4)
          << ")\n";
        t << "  r        eps      F_s      F_o\n";
        for (const auto &p : pts) {
            t << "  " << fixed(p.r, 4) << "   " << fixed(p.epsilon, 4) << "   " << fixed(p.F_s_lower, 4) << "   "
              << fixed(p.F_o_lower, 4) << "\n";
        }
        emit(cfg, t.str(), out);
    }
    return kOk;
}

// --- randomness ----------------------------------------------------------

int cmd_randomness(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg, {Format::json, Format::text});
    Realization r = reference_realization(cfg.n, cfg.dim);
    double eps = cfg.epsilon.value_or(0.0);
    RandomnessReport rep = empirical_randomness(r, NoiseModel{eps, true});
    NoisyRandomness closed = noisy_randomness(cfg.n, eps);

    if (cfg.format == Format::json) {
        json j = envelope(cfg);
        j["n"] = rep.n;
        j["epsilon"] = rep.epsilon;
        j["noise"] = NoiseModel{eps, true}.describe();
        j["per_pair_bits"] = rep.per_pair_bits;
        j["r_min"] = rep.r_min;
        j["min_pair"] = pair_json(rep.min_pair);
        j["r_max"] = rep.r_max;
        j["max_pair"] = pair_json(rep.max_pair);
        json mp = json::array();
        for (auto p : rep.max_pairs) {
            mp.push_back(pair_json(p));
        }
        j["max_pairs"] = mp;
        j["r_min_closed"] = closed.r_min;
        j["r_max_closed"] = closed.r_max ? json(*closed.r_max) : json(nullptr);
        emit(cfg, j.dump(2) + "\n", out);
    } else {
        std::ostringstream t;
        t << "randomness n=" << cfg.n << " eps=" << eps << "\n";
        t << "R_min = " << fixed(rep.r_min, 3) << " bits at (A_" << rep.min_pair.first << ", B_" << rep.min_pair.second
          << "); closed form " << fixed(closed.r_min, 10) << "\n";
        t << "R_max = " << fixed(rep.r_max, 3) << " bits at (A_" << rep.max_pair.first << ", B_" << rep.max_pair.second
          << ")";
        if (closed.r_max) {
            t << "; closed form " << fixed(*closed.r_max, 10);
        } else {
            t << "; no closed form for even n";
        }
        t << "\n";
        t << "per-pair bits (rows A_i, columns B_j):\n";
        for (const auto &row : rep.per_pair_bits) {
            t << " ";
            for (double b : row) {
                t << " " << fixed(b, 4);
            }
            t << "\n";
        }
        emit(cfg, t.str(), out);
    }
    return kOk;
}

// --- curves --------------------------------------------------------------

int cmd_curves(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg, {Format::csv, Format::json});
    std::vector<int> ns = cfg.n_list.empty() ? std::vector<int>{3, 5, 7, 11} : cfg.n_list;
    std::vector<double> grid = cfg.r_grid;
    if (grid.empty()) {
        grid = cfg.which == BoundKind::state ? parse_grid("0.85:1:0.001", 0.001) : parse_grid("0.96:1:0.0005", 0.0005);
    }
    if (cfg.format == Format::csv) {
        emit(cfg, curves_csv(ns, grid, cfg.which), out);
        return kOk;
    }
    json j = envelope(cfg);
    json rows = json::array();
    for (int n : ns) {
        for (double r : grid) {
            RobustnessPoint p = robustness_at_r(n, r);
            bool st = cfg.which == BoundKind::state;
            rows.push_back({{"n", n},
                            {"r", p.r},
                            {"xi", p.xi},
                            {"epsilon", p.epsilon},
                            {"f", st ? p.f_s : p.f_o},
                            {"F_lower", st ? p.F_s_lower : p.F_o_lower}});
        }
    }
    j["rows"] = rows;
    emit(cfg, j.dump(2) + "\n", out);
    return kOk;
}

}  // namespace

const char *command_name(Command c) {
    switch (c) {
        case Command::certify:
            return "certify";
        case Command::optimize:
            return "optimize";
        case Command::swap:
            return "swap";
        case Command::robustness:
            return "robustness";
        case Command::randomness:
            return "randomness";
        case Command::curves:
            return "curves";
    }
    return "?";
}

const char *format_name(Format f) {
    switch (f) {
        case Format::json:
            return "json";
        case Format::csv:
            return "csv";
        case Format::text:
            return "text";
    }
    return "?";
}

std::vector<double> parse_grid(const std::string &spec, double default_step) {
    auto to_d = [&](const std::string &s) {
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad number in grid: '" + s + "'");
        }
        if (used != s.size() || !std::isfinite(v)) {
            throw std::invalid_argument("bad number in grid: '" + s + "'");
        }
        return v;
    };
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        std::string part;
        while (std::getline(ss, part, ':')) {
            parts.push_back(part);
        }
        if (parts.size() < 2 || parts.size() > 3) {
            throw std::invalid_argument("grid must be start:stop[:step]");
        }
        double a = to_d(parts[0]);
        double b = to_d(parts[1]);
        double step = parts.size() == 3 ? to_d(parts[2]) : default_step;
        if (!(step > 0) || b < a) {
            throw std::invalid_argument("grid needs start <= stop and a positive step");
        }
        auto count = static_cast<long>(std::floor((b - a) / step + 1e-9));
        for (long k = 0; k <= count; k++) {
            out.push_back(a + static_cast<double>(k) * step);
        }
        if (b - out.back() > 1e-9 * step) {
            out.push_back(b);
        } else {
            out.back() = b;
        }
    } else {
        std::stringstream ss(spec);
        std::string part;
        while (std::getline(ss, part, ',')) {
            out.push_back(to_d(part));
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("grid is empty");
    }
    if (!std::is_sorted(out.begin(), out.end())) {
        throw std::invalid_argument("grid must be sorted ascending");
    }
    return out;
}

std::vector<int> parse_int_list(const std::string &spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad integer: '" + part + "'");
        }
        if (used != part.size()) {
            throw std::invalid_argument("bad integer: '" + part + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty list");
    }
    return out;
}

std::string curves_csv(const std::vector<int> &n_list, const std::vector<double> &r_grid, BoundKind which) {
    std::vector<int> ns = n_list;
    std::sort(ns.begin(), ns.end());
    std::vector<double> rs = r_grid;
    std::sort(rs.begin(), rs.end());
    std::ostringstream t;
    t << "n,r,xi,epsilon,f,F_lower\n";
    for (int n : ns) {
        for (double r : rs) {
            RobustnessPoint p = robustness_at_r(n, r);
            bool st = which == BoundKind::state;
            t << n << "," << num(p.r) << "," << num(p.xi) << "," << num(p.epsilon) << "," << num(st ? p.f_s : p.f_o)
              << "," << num(st ? p.F_s_lower : p.F_o_lower) << "\n";
        }
    }
    return t.str();
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Chained Bell inequality toolkit: SOS certification, see-saw optimization, swap-isometry self-testing, "
                 "robustness bounds and certified randomness.",
                 "chainbell"};
    app.set_version_flag("--version", CHAINBELL_VERSION);
    app.require_subcommand(1, 1);

    RunConfig cfg;
    std::string n_list, eps_grid, r_grid, format, which = "state";
    double eps = 0;
    bool no_timestamp = false;

    app.add_option("--n", cfg.n, "number of settings per party (>= 2)");
    auto *n_list_opt = app.add_option("--n-list", n_list, "comma list of n values (curves)");
    app.add_option("--dim", cfg.dim, "local dimension: 2 or 4")->check(CLI::IsMember({2, 4}));
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--restarts", cfg.restarts, "see-saw restarts (0 = default)")->check(CLI::NonNegativeNumber);
    auto *eps_opt = app.add_option("--eps", eps, "noise strength epsilon")->check(CLI::NonNegativeNumber);
    auto *eps_grid_opt = app.add_option("--eps-grid", eps_grid, "epsilon grid: start:stop:step or a comma list");
    auto *r_grid_opt = app.add_option("--r-grid", r_grid, "relative-violation grid: start:stop:step or a comma list");
    app.add_option("--tol", cfg.tol, "pass/fail tolerance")->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "output file (relative paths resolve under CHAINBELL_OUTPUT_DIR)");
    app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--which", which, "bound family for curves: state or observable")
        ->check(CLI::IsMember({"state", "observable"}));
    app.add_flag("--no-timestamp", no_timestamp, "omit the generated_at field from JSON");

    const std::vector<std::pair<Command, const char *>> commands = {
        {Command::certify, "SOS certificate, state reconstruction and swap relations at the optimum"},
        {Command::optimize, "multi-start see-saw over dichotomic observables"},
        {Command::swap, "swap-isometry self-test with operator insertions"},
        {Command::robustness, "robustness bounds over an r or epsilon grid, with thresholds"},
        {Command::randomness, "certified min-entropy per setting pair"},
        {Command::curves, "fidelity-bound curve data for several n"},
    };
    for (const auto &[c, help] : commands) {
        app.add_subcommand(command_name(c), help)->fallthrough();
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        for (const auto &[c, help] : commands) {
            if (app.got_subcommand(command_name(c))) {
                cfg.command = c;
            }
        }
        if (cfg.n < 2) {
            throw std::invalid_argument("--n must be >= 2");
        }
        if (*n_list_opt) {
            cfg.n_list = parse_int_list(n_list);
            for (int n : cfg.n_list) {
                if (n < 2) {
                    throw std::invalid_argument("--n-list values must be >= 2");
                }
            }
            std::sort(cfg.n_list.begin(), cfg.n_list.end());
            cfg.n_list.erase(std::unique(cfg.n_list.begin(), cfg.n_list.end()), cfg.n_list.end());
        }
        if (*eps_grid_opt) {
            cfg.eps_grid = parse_grid(eps_grid, 0.01);
            if (cfg.eps_grid.front() < 0) {
                throw std::invalid_argument("--eps-grid values must be non-negative");
            }
        }
        if (*r_grid_opt) {
            cfg.r_grid = parse_grid(r_grid, 0.001);
            if (cfg.r_grid.back() > 1) {
                throw std::invalid_argument("--r-grid values must be <= 1");
            }
        }
        if (*eps_opt) {
            cfg.epsilon = eps;
        }
        cfg.format = format.empty() ? default_format(cfg.command)
                                    : (format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text);
        cfg.which = which == "observable" ? BoundKind::observable : BoundKind::state;
        cfg.timestamp = !no_timestamp;

        switch (cfg.command) {
            case Command::certify:
                return cmd_certify(cfg, out);
            case Command::optimize:
                return cmd_optimize(cfg, out);
            case Command::swap:
                return cmd_swap(cfg, out);
            case Command::robustness:
                return cmd_robustness(cfg, out);
            case Command::randomness:
                return cmd_randomness(cfg, out);
            case Command::curves:
                return cmd_curves(cfg, out);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const NumericError &e) {
        err << "numeric failure: " << e.what() << "\n";
        return kNumericFailure;
    } catch (const std::exception &e) {
        err << "failure: " << e.what() << "\n";
        return kNumericFailure;
    }
    return kUsage;
}

}  // namespace chainbell::cli
