// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file config.cpp
 * @brief Run configuration: defaults, validation, JSON and command-line parsing.
 */

#include <qce1d/cli.hpp>
#include <qce1d/error.hpp>
#include <qce1d/specfun.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qce1d::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kCommands = {"zcoeffs", "partition", "counting", "dos",
                                            "eos",     "shift",     "oracle-compare"};

json grid_to_json(const Grid& g) {
    return json{{"min", g.min}, {"max", g.max}, {"points", g.points}, {"log", g.log}};
}

Grid grid_from_json(const json& j) {
    Grid g;
    g.min = j.value("min", 0.0);
    g.max = j.value("max", 0.0);
    g.points = j.value("points", 0);
    g.log = j.value("log", false);
    return g;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

double parse_number(const std::string& s) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    while (b < e && *b == ' ') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) throw DomainError("not a number: '" + s + "'");
    return v;
}

std::vector<Species> parse_species(const std::string& text) {
    std::vector<Species> out;
    for (const auto& item : split(text, ',')) {
        const auto f = split(item, ':');
        if (f.empty() || f.size() > 3) throw DomainError("species entries read count[:statistics[:mass_ratio]]");
        Species sp;
        const double n = parse_number(f[0]);
        if (n != std::floor(n)) throw DomainError("species count must be an integer");
        sp.count = static_cast<int>(n);
        if (f.size() > 1) sp.statistics = statistics_from_string(f[1]);
        if (f.size() > 2) sp.mass_ratio = parse_number(f[2]);
        out.push_back(sp);
    }
    return out;
}

/// Fills the parts of g left unset: the range when min = max = 0, the size when points = 0.
void set_default(Grid& g, double lo, double hi, int n, bool log) {
    if (g.min == 0.0 && g.max == 0.0) {
        g.min = lo;
        g.max = hi;
        g.log = g.log || log;
    }
    if (g.points == 0) g.points = n;
}

} // namespace

std::vector<double> Grid::values() const {
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i) {
        if (points == 1) {
            v[i] = min;
            continue;
        }
        const double t = static_cast<double>(i) / (points - 1);
        v[i] = log ? min * std::pow(max / min, t) : min + (max - min) * t;
    }
    if (points > 1) v.back() = max;
    return v;
}

void Grid::validate(const std::string& name) const {
    if (points < 1) throw DomainError(name + " grid is empty");
    if (!std::isfinite(min) || !std::isfinite(max)) throw DomainError(name + " grid bounds must be finite");
    if (points > 1 && !(max > min)) throw DomainError(name + " grid must be strictly increasing");
    if (log && !(min > 0.0)) throw DomainError(name + " log grid needs a positive minimum");
}

double RunConfig::effective_alpha() const { return beta_alpha ? *beta_alpha / beta : alpha; }

Confinement RunConfig::confinement() const {
    Confinement c;
    if (shape == "ring") c = Confinement::ring(length);
    else if (shape == "harmonic") c = Confinement::harmonic(hbar_omega);
    else if (shape == "power-law") c = Confinement::power_law(mu, stiffness);
    else throw DomainError("unknown confinement shape '" + shape + "'");
    c.D = D;
    return c;
}

SystemSpec RunConfig::system() const {
    SystemSpec spec;
    if (species.empty()) spec.species = {Species{N, statistics_from_string(statistics), 1.0}};
    else spec.species = species;
    spec.confinement = confinement();
    spec.alpha = effective_alpha();
    spec.alpha_pair = alpha_pair;
    spec.validate();
    return spec;
}

void RunConfig::finalize() {
    if (command == "counting" || command == "dos") set_default(E_grid, 0.0, 20.0, 201, false);
    if (command == "eos" && sweep_V) set_default(V_grid, 0.5, 40.0, 80, true);
    if (command == "oracle-compare") set_default(s_grid, 1e-3, 1e3, 25, true);
    if (command == "shift") set_default(eps_grid, 1e-4, 1e4, 33, true);
    validate();
}

void RunConfig::validate() const {
    if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
        throw DomainError("unknown command '" + command + "'");
    if (format != "csv" && format != "json") throw DomainError("format must be csv or json");
    if (shift_base != "free" && shift_base != "qce1") throw DomainError("shift base must be free or qce1");
    if (regime != "direct" && regime != "fermionized") throw DomainError("regime must be direct or fermionized");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be positive");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and >= 0");
    if (beta_alpha && (!(*beta_alpha >= 0.0) || !std::isfinite(*beta_alpha)))
        throw DomainError("beta*alpha must be finite and >= 0");
    if (d && !(*d > 0.0)) throw DomainError("effective dimension must be positive");
    if (virial_order < 0 || virial_order > 8) throw DomainError("virial order must lie in [0, 8]");
    if (n_max < 2 || n_max > 12) throw DomainError("n-max must lie in [2, 12]");
    if (threads < 1) throw DomainError("threads must be >= 1");
    if (basis_size < 16) throw DomainError("basis size must be >= 16");
    Accuracy{rel_tol, 30}.validate();
    const std::pair<const Grid*, const char*> grids[] = {
        {&E_grid, "E"}, {&V_grid, "V"}, {&beta_grid, "beta"}, {&s_grid, "s"}, {&eps_grid, "eps"}};
    for (auto [g, name] : grids)
        if (!g->empty()) g->validate(name);
    system();
}

std::string RunConfig::to_json() const {
    json sp = json::array();
    for (const auto& s : species)
        sp.push_back({{"count", s.count}, {"statistics", qce1d::to_string(s.statistics)}, {"mass_ratio", s.mass_ratio}});
    json j = {
        {"command", command},
        {"N", N},
        {"statistics", statistics},
        {"species", sp},
        {"alpha_pair", alpha_pair},
        {"confinement",
         {{"shape", shape}, {"D", D}, {"length", length}, {"hbar_omega", hbar_omega}, {"mu", mu}, {"stiffness", stiffness}}},
        {"d", d ? json(*d) : json(nullptr)},
        {"alpha", alpha},
        {"beta_alpha", beta_alpha ? json(*beta_alpha) : json(nullptr)},
        {"beta", beta},
        {"grids",
         {{"E", grid_to_json(E_grid)},
          {"V", grid_to_json(V_grid)},
          {"beta", grid_to_json(beta_grid)},
          {"s", grid_to_json(s_grid)},
          {"eps", grid_to_json(eps_grid)}}},
        {"sweep_V", sweep_V},
        {"format", format},
        {"output", output},
        {"oracle", oracle},
        {"split", split},
        {"virial_order", virial_order},
        {"shift", shift},
        {"shift_base", shift_base},
        {"regime", regime},
        {"n_max", n_max},
        {"basis_size", basis_size},
        {"rel_tol", rel_tol},
        {"threads", threads},
    };
    return j.dump(2);
}

RunConfig RunConfig::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("config must be a JSON object");
    RunConfig c;
    try {
        c.command = j.value("command", c.command);
        c.N = j.value("N", c.N);
        c.statistics = j.value("statistics", c.statistics);
        if (j.contains("species"))
            for (const auto& s : j.at("species")) {
                Species sp;
                sp.count = s.at("count").get<int>();
                sp.statistics = statistics_from_string(s.value("statistics", std::string("bose")));
                sp.mass_ratio = s.value("mass_ratio", 1.0);
                c.species.push_back(sp);
            }
        c.alpha_pair = j.value("alpha_pair", c.alpha_pair);
        if (j.contains("confinement")) {
            const auto& k = j.at("confinement");
            c.shape = k.value("shape", c.shape);
            c.D = k.value("D", c.D);
            c.length = k.value("length", c.length);
            c.hbar_omega = k.value("hbar_omega", c.hbar_omega);
            c.mu = k.value("mu", c.mu);
            c.stiffness = k.value("stiffness", c.stiffness);
        }
        if (j.contains("d") && !j.at("d").is_null()) c.d = j.at("d").get<double>();
        c.alpha = j.value("alpha", c.alpha);
        if (j.contains("beta_alpha") && !j.at("beta_alpha").is_null()) c.beta_alpha = j.at("beta_alpha").get<double>();
        c.beta = j.value("beta", c.beta);
        if (j.contains("grids")) {
            const auto& g = j.at("grids");
            if (g.contains("E")) c.E_grid = grid_from_json(g.at("E"));
            if (g.contains("V")) c.V_grid = grid_from_json(g.at("V"));
            if (g.contains("beta")) c.beta_grid = grid_from_json(g.at("beta"));
            if (g.contains("s")) c.s_grid = grid_from_json(g.at("s"));
            if (g.contains("eps")) c.eps_grid = grid_from_json(g.at("eps"));
        }
        c.sweep_V = j.value("sweep_V", c.sweep_V);
        c.format = j.value("format", c.format);
        c.output = j.value("output", c.output);
        c.oracle = j.value("oracle", c.oracle);
        c.split = j.value("split", c.split);
        c.virial_order = j.value("virial_order", c.virial_order);
        c.shift = j.value("shift", c.shift);
        c.shift_base = j.value("shift_base", c.shift_base);
        c.regime = j.value("regime", c.regime);
        c.n_max = j.value("n_max", c.n_max);
        c.basis_size = j.value("basis_size", c.basis_size);
        c.rel_tol = j.value("rel_tol", c.rel_tol);
        c.threads = j.value("threads", c.threads);
    } catch (const json::exception& e) {
        throw DomainError(std::string("config has a field of the wrong type: ") + e.what());
    }
    return c;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, p);
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
    RunConfig cfg;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        std::string path;
        if (a == "--config" && i + 1 < argc) path = argv[i + 1];
        else if (a.rfind("--config=", 0) == 0) path = a.substr(9);
        if (path.empty()) continue;
        std::ifstream is(path);
        if (!is) throw DomainError("cannot read config file '" + path + "'");
        std::stringstream ss;
        ss << is.rdbuf();
        cfg = RunConfig::from_json(ss.str());
    }

    CLI::App app{"First-order quantum cluster expansion for 1D contact-interacting particles", "qce1d"};
    app.set_version_flag("--version", std::string("qce1d ") + QCE1D_VERSION);
    std::string config_path;
    bool dump = false;
    app.add_option("--config", config_path, "JSON config file; flags override its values");
    app.add_flag("--dump-config", dump, "Print the resolved JSON config and exit");

    app.add_option("--N", cfg.N, "Particle number");
    app.add_option("--stats", cfg.statistics, "Exchange statistics: bose | fermi");
    std::string species_text, alpha_pair_text;
    auto* species_opt = app.add_option("--species", species_text, "Species list count:stats:mass_ratio,...");
    auto* pair_opt = app.add_option("--alpha-pair", alpha_pair_text, "Row-major pair couplings a11,a12,...");
    bool ring = false, harmonic = false;
    auto* ring_opt = app.add_flag("--ring", ring, "Ring confinement of length --L");
    auto* harm_opt = app.add_flag("--harmonic", harmonic, "Harmonic confinement with quantum --hbar-omega");
    double power_mu = 0.0;
    auto* power_opt = app.add_option("--power-law", power_mu, "Power-law confinement k|q|^mu with this mu");
    app.add_option("--L", cfg.length, "Ring length");
    app.add_option("--hbar-omega", cfg.hbar_omega, "Oscillator quantum in core energy units");
    app.add_option("--stiffness", cfg.stiffness, "Power-law prefactor k");
    app.add_option("--D", cfg.D, "Physical dimension");
    double d_value = 0.0;
    auto* d_opt = app.add_option("--d", d_value, "Effective dimension override (zcoeffs)");
    auto* alpha_opt = app.add_option("--alpha", cfg.alpha, "Contact coupling alpha");
    double s_value = 0.0;
    auto* s_opt = app.add_option("--beta-alpha", s_value, "Thermal coupling s = beta*alpha (sets alpha)");
    app.add_option("--beta", cfg.beta, "Inverse temperature");

    auto grid_opts = [&](const std::string& name, Grid& g) {
        app.add_option("--" + name + "-min", g.min, name + " grid minimum");
        app.add_option("--" + name + "-max", g.max, name + " grid maximum");
        app.add_option("--" + name + "-points", g.points, name + " grid size");
        app.add_flag("--" + name + "-log", g.log, name + " grid logarithmic");
    };
    grid_opts("E", cfg.E_grid);
    grid_opts("V", cfg.V_grid);
    grid_opts("beta-grid", cfg.beta_grid);
    grid_opts("s", cfg.s_grid);
    grid_opts("eps", cfg.eps_grid);
    app.add_flag("--sweep-V", cfg.sweep_V, "Sweep V_eff in eos");

    app.add_option("--format", cfg.format, "Output format: csv | json");
    app.add_option("-o,--output", cfg.output, "Output file ('-' for stdout)");
    app.add_flag("--oracle", cfg.oracle, "Add the oracle staircase column (counting)");
    app.add_flag("--split", cfg.split, "Use the split ansatz (eos)");
    app.add_option("--virial", cfg.virial_order, "Add virial columns of this order (eos)");
    app.add_flag("--shift", cfg.shift, "Add the shifted counting column (counting)");
    app.add_option("--shift-base", cfg.shift_base, "Counting function the shift acts on: free | qce1");
    app.add_option("--regime", cfg.regime, "Expansion regime: direct | fermionized");
    app.add_option("--n-max", cfg.n_max, "Largest cluster size (oracle-compare)");
    app.add_option("--basis-size", cfg.basis_size, "Oscillator basis size of the harmonic oracle");
    app.add_option("--rel-tol", cfg.rel_tol, "Relative quadrature tolerance");
    app.add_option("--threads", cfg.threads, "Worker threads for sweeps");

    app.require_subcommand(0, 1);
    for (const auto& name : kCommands) app.add_subcommand(name)->fallthrough();

    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << "\n";
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw DomainError(std::string("command line: ") + e.what());
    }
    if (!app.get_subcommands().empty()) cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command.empty()) throw DomainError("command line: a command is required");
    if (species_opt->count()) cfg.species = parse_species(species_text);
    if (pair_opt->count()) {
        cfg.alpha_pair.clear();
        for (const auto& v : split(alpha_pair_text, ',')) cfg.alpha_pair.push_back(parse_number(v));
    }
    if (ring_opt->count() + harm_opt->count() + power_opt->count() > 1)
        throw DomainError("choose one of --ring, --harmonic, --power-law");
    if (ring) cfg.shape = "ring";
    if (harmonic) cfg.shape = "harmonic";
    if (power_opt->count()) {
        cfg.shape = "power-law";
        cfg.mu = power_mu;
    }
    if (d_opt->count()) cfg.d = d_value;
    if (alpha_opt->count() && !s_opt->count()) cfg.beta_alpha.reset();
    if (s_opt->count()) cfg.beta_alpha = s_value;
    cfg.finalize();
    if (dump) {
        out << cfg.to_json() << "\n";
        return std::nullopt;
    }
    return cfg;
}

} // namespace qce1d::cli
