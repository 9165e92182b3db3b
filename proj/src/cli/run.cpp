// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file run.cpp
 * @brief Command implementations and table output for the qce1d tool.
 */

#include <qce1d/cli.hpp>
#include <qce1d/clusters.hpp>
#include <qce1d/combinatorics.hpp>
#include <qce1d/error.hpp>
#include <qce1d/oracles.hpp>
#include <qce1d/partition.hpp>
#include <qce1d/spectral.hpp>
#include <qce1d/thermo.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

namespace qce1d::cli {

namespace {

using nlohmann::json;
using Cell = std::variant<double, long long, std::string>;
using Row = std::vector<Cell>;

struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<Row> rows;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? json(*d) : json(nullptr);
    if (const auto* i = std::get_if<long long>(&c)) return json(*i);
    return json(std::get<std::string>(c));
}

std::string render(const RunConfig& cfg, const Table& t) {
    std::ostringstream os;
    if (cfg.format == "json") {
        json j;
        j["qce1d_version"] = QCE1D_VERSION;
        j["command"] = cfg.command;
        j["config"] = json::parse(cfg.to_json());
        json meta = json::object();
        for (const auto& [k, v] : t.meta) meta[k] = v;
        j["meta"] = meta;
        j["columns"] = t.columns;
        json rows = json::array();
        for (const auto& r : t.rows) {
            json row = json::array();
            for (const auto& c : r) row.push_back(cell_json(c));
            rows.push_back(row);
        }
        j["rows"] = rows;
        os << j.dump(2) << "\n";
        return os.str();
    }
    os << "# qce1d " << QCE1D_VERSION << "\n";
    os << "# command: " << cfg.command << "\n";
    os << "# config: " << json::parse(cfg.to_json()).dump() << "\n";
    for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
    os << "\r\n";
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(r[i]));
        os << "\r\n";
    }
    return os.str();
}

/// Evaluates fn(i) for i < n on up to `threads` workers; results keep index order.
template <class F>
std::vector<Row> parallel_rows(std::size_t n, int threads, F&& fn) {
    std::vector<Row> rows(n);
    std::vector<std::exception_ptr> errors(n);
    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = start; i < n; i += stride) {
            try {
                rows[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t T = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(n, 1));
    if (T <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < T; ++t) pool.emplace_back(work, t, T);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

Regime regime_of(const RunConfig& cfg) { return cfg.regime == "fermionized" ? Regime::Fermionized : Regime::Direct; }

Accuracy accuracy_of(const RunConfig& cfg) { return Accuracy{cfg.rel_tol, 30}; }

const Species& single_species(const SystemSpec& spec, const char* what) {
    if (!spec.single_species()) throw DomainError(std::string(what) + " needs one species");
    return spec.species[0];
}

std::string surd_text(const SurdSum& s) {
    std::string out;
    for (const auto& [rad, q] : s.terms) {
        if (q == 0) continue;
        std::string term = q.str();
        if (rad != 1) term += "*sqrt(" + std::to_string(rad) + ")";
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

Table cmd_zcoeffs(const RunConfig& cfg) {
    const SystemSpec spec = cfg.system();
    const auto& sp = single_species(spec, "zcoeffs");
    const double d = cfg.d ? *cfg.d : effective_dimension(spec.confinement);
    const auto z = nonint_coefficients(sp.count, d, sp.statistics);
    const bool interacting = spec.alpha > 0.0 || cfg.regime == "fermionized";
    const double s = ThermalPoint(cfg.beta).s(spec.alpha);
    Table t;
    t.meta = {{"d", format_double(d)}, {"statistics", to_string(sp.statistics)}};
    t.columns = {"l", "z", "z_exact"};
    std::vector<double> w;
    if (interacting) {
        t.meta.emplace_back("s", format_double(s));
        t.columns.insert(t.columns.end(), {"dz", "w"});
        w = interacting_coefficients(sp.count, d, sp.statistics, s, regime_of(cfg), accuracy_of(cfg));
    }
    for (int l = 1; l <= sp.count; ++l) {
        Row r{static_cast<long long>(l), (*z)[l], z->exact ? surd_text((*z->exact)[l]) : std::string()};
        if (interacting) {
            const double base = cfg.regime == "fermionized"
                                    ? (*nonint_coefficients(sp.count, d, Statistics::Fermi))[l]
                                    : (*z)[l];
            r.push_back(w[l] - base);
            r.push_back(w[l]);
        }
        t.rows.push_back(std::move(r));
    }
    return t;
}

Table cmd_partition(const RunConfig& cfg) {
    const SystemSpec spec = cfg.system();
    const std::vector<double> betas = cfg.beta_grid.empty() ? std::vector<double>{cfg.beta} : cfg.beta_grid.values();
    const double V = effective_volume(spec.confinement);
    const double d = effective_dimension(spec.confinement);
    Table t;
    t.meta = {{"V_eff", format_double(V)}, {"d", format_double(d)}, {"alpha", format_double(spec.alpha)}};
    const Accuracy acc = accuracy_of(cfg);
    if (!spec.single_species()) {
        t.columns = {"beta", "Z0", "Z"};
        t.rows = parallel_rows(betas.size(), cfg.threads, [&](std::size_t i) {
            const ThermalPoint tp(betas[i]);
            SystemSpec free = spec;
            for (auto& a : free.alpha_pair) a = 0.0;
            return Row{betas[i], multispecies_partition(free, tp, acc), multispecies_partition(spec, tp, acc)};
        });
        return t;
    }
    t.columns = {"beta", "s", "x", "Z0", "Z1", "breakdown"};
    t.rows = parallel_rows(betas.size(), cfg.threads, [&](std::size_t i) {
        const ThermalPoint tp(betas[i]);
        const double Z1 = z1_partition(spec, tp, regime_of(cfg), acc);
        return Row{betas[i], tp.s(spec.alpha), tp.x(V, d), z0_partition(spec, tp), Z1,
                   static_cast<long long>(Z1 <= 0.0)};
    });
    return t;
}

oracles::LevelList oracle_levels(const RunConfig& cfg, const SystemSpec& spec, double E_max) {
    const auto& sp = single_species(spec, "oracle staircase");
    std::ostringstream key;
    if (cfg.shape == "harmonic" && sp.count == 2 && sp.statistics == Statistics::Bose) {
        const double w = cfg.hbar_omega;
        key << "harmonic2 alpha=" << format_double(spec.alpha / w) << " basis=" << cfg.basis_size
            << " Emax=" << format_double(E_max / w);
        auto levels = oracles::cached_levels(key.str(), [&] {
            return oracles::two_body_harmonic_levels(spec.alpha / w, cfg.basis_size, E_max / w);
        });
        for (auto& e : levels.energies) e *= w;
        levels.E_max *= w;
        return levels;
    }
    if (cfg.shape == "ring" && sp.count <= 4 && sp.statistics == Statistics::Bose && spec.alpha > 0.0) {
        key << "lieb-liniger N=" << sp.count << " L=" << format_double(cfg.length)
            << " alpha=" << format_double(spec.alpha) << " Emax=" << format_double(E_max);
        return oracles::cached_levels(key.str(), [&] {
            return oracles::lieb_liniger_levels(sp.count, cfg.length, spec.alpha, E_max);
        });
    }
    throw DomainError("oracle staircase is available for two harmonic bosons or up to four bosons on a ring with alpha > 0");
}

Table cmd_counting(const RunConfig& cfg) {
    const SystemSpec spec = cfg.system();
    const auto& sp = single_species(spec, "counting");
    const auto Es = cfg.E_grid.values();
    Table t;
    t.columns = {"E", "N0", "N1"};
    std::optional<ShiftModel> model;
    if (cfg.shift) {
        model = shift_model(sp.count, effective_dimension(spec.confinement), sp.statistics);
        t.columns.push_back("N_shift");
        t.meta.emplace_back("shift_base", cfg.shift_base);
    }
    std::optional<oracles::LevelList> levels;
    if (cfg.oracle) {
        levels = oracle_levels(cfg, spec, Es.back());
        t.columns.push_back("staircase");
        t.meta.emplace_back("oracle", levels->provenance);
    }
    const ShiftBase base = cfg.shift_base == "qce1" ? ShiftBase::FirstOrder : ShiftBase::Free;
    t.rows = parallel_rows(Es.size(), cfg.threads, [&](std::size_t i) {
        const double E = Es[i];
        Row r{E, counting_function_free(spec, E), counting_function(spec, E, regime_of(cfg))};
        if (model) r.push_back(shifted_counting(*model, spec, E, base));
        if (levels) r.push_back(levels->staircase(E));
        return r;
    });
    return t;
}

Table cmd_dos(const RunConfig& cfg) {
    const SystemSpec spec = cfg.system();
    single_species(spec, "dos");
    SystemSpec free = spec;
    free.alpha = 0.0;
    const auto Es = cfg.E_grid.values();
    Table t;
    t.columns = {"E", "rho0", "rho1"};
    t.rows = parallel_rows(Es.size(), cfg.threads, [&](std::size_t i) {
        return Row{Es[i], dos(free, Es[i]), dos(spec, Es[i], regime_of(cfg))};
    });
    return t;
}

SplitAnsatz bethe_ansatz(const SystemSpec& spec) {
    const auto& sp = single_species(spec, "split ansatz");
    if (spec.confinement.shape != Shape::Ring || sp.count > 4 || sp.statistics != Statistics::Bose ||
        !(spec.alpha > 0.0))
        throw DomainError("split ansatz levels come from the Bethe equations: ring, Bose, N <= 4, alpha > 0");
    return oracles::lieb_liniger_split_ansatz(sp.count, spec.alpha);
}

Table cmd_eos(const RunConfig& cfg) {
    const SystemSpec spec = cfg.system();
    single_species(spec, "eos");
    const std::vector<double> Vs =
        cfg.V_grid.empty() ? std::vector<double>{effective_volume(spec.confinement)} : cfg.V_grid.values();
    const ThermalPoint tp(cfg.beta);
    const Accuracy acc = accuracy_of(cfg);
    const double d = effective_dimension(spec.confinement);
    Table t;
    t.meta = {{"beta", format_double(cfg.beta)}, {"alpha", format_double(spec.alpha)}, {"s", format_double(tp.s(spec.alpha))}};
    t.columns = {"V_eff", "x", "P", "kappa_T", "breakdown"};
    std::optional<SplitAnsatz> ansatz;
    if (cfg.split) {
        ansatz = bethe_ansatz(spec);
        t.columns.insert(t.columns.end(), {"P_split", "kappa_T_split"});
    }
    if (cfg.virial_order > 0) t.columns.insert(t.columns.end(), {"P_virial", "kappa_T_virial"});
    t.rows = parallel_rows(Vs.size(), cfg.threads, [&](std::size_t i) {
        const SystemSpec sv = with_effective_volume(spec, Vs[i]);
        const EOSPoint p = eos_point(sv, tp, nullptr, acc);
        Row r{Vs[i], tp.x(Vs[i], d), p.P, p.kappa_T, static_cast<long long>(p.breakdown)};
        if (ansatz) {
            const EOSPoint q = eos_point(sv, tp, &*ansatz, acc);
            r.push_back(q.P);
            r.push_back(q.kappa_T);
        }
        if (cfg.virial_order > 0) {
            r.push_back(virial_pressure(sv, tp, cfg.virial_order));
            r.push_back(virial_compressibility(sv, tp, cfg.virial_order));
        }
        return r;
    });
    return t;
}

Table cmd_shift(const RunConfig& cfg) {
    const SystemSpec spec = cfg.system();
    const auto& sp = single_species(spec, "shift");
    const double d = effective_dimension(spec.confinement);
    const ShiftModel model = shift_model(sp.count, d, sp.statistics);
    Table t;
    t.meta = {{"d", format_double(d)}, {"a_tilde", format_double(model.a_tilde)}};
    if (model.a_tilde_exact) t.meta.emplace_back("a_tilde_exact", model.a_tilde_exact->str());
    const auto eps = cfg.eps_grid.values();
    t.columns = {"eps", "chi"};
    const bool with_energy = spec.alpha > 0.0;
    if (with_energy) t.columns.insert(t.columns.end(), {"E", "dE_inf", "dE"});
    t.rows = parallel_rows(eps.size(), cfg.threads, [&](std::size_t i) {
        const double chi = model.chi(eps[i]);
        Row r{eps[i], chi};
        if (with_energy) {
            const double E = eps[i] * spec.alpha;
            const double full = full_shift(model, spec, E);
            r.push_back(E);
            r.push_back(full);
            r.push_back(chi * full);
        }
        return r;
    });
    return t;
}

Table cmd_oracle_compare(const RunConfig& cfg) {
    std::vector<std::tuple<int, int, double>> jobs;
    for (int n = 2; n <= cfg.n_max; ++n)
        for (int n1 = 1; 2 * n1 <= n; ++n1)
            for (double s : cfg.s_grid.values()) jobs.emplace_back(n1, n - n1, s);
    Table t;
    t.columns = {"n1", "n2", "s", "closed_form", "quadrature", "quadrature_error", "rel_residual"};
    const Accuracy acc = accuracy_of(cfg);
    t.rows = parallel_rows(jobs.size(), cfg.threads, [&](std::size_t i) {
        const auto [n1, n2, s] = jobs[i];
        const double closed = a_cluster(ClusterGeometry(n1, n2), s, Statistics::Bose, acc);
        const auto q = oracles::amplitude_quadrature(n1, n2, s);
        const double res = q.value != 0.0 ? std::abs(closed - q.value) / std::abs(q.value) : std::abs(closed);
        return Row{static_cast<long long>(n1), static_cast<long long>(n2), s, closed, q.value, q.error, res};
    });
    return t;
}

Table dispatch(const RunConfig& cfg) {
    if (cfg.command == "zcoeffs") return cmd_zcoeffs(cfg);
    if (cfg.command == "partition") return cmd_partition(cfg);
    if (cfg.command == "counting") return cmd_counting(cfg);
    if (cfg.command == "dos") return cmd_dos(cfg);
    if (cfg.command == "eos") return cmd_eos(cfg);
    if (cfg.command == "shift") return cmd_shift(cfg);
    if (cfg.command == "oracle-compare") return cmd_oracle_compare(cfg);
    throw DomainError("unknown command '" + cfg.command + "'");
}

int report(std::ostream& err, const std::string& type, const std::string& message, int code) {
    json j = {{"error", {{"type", type}, {"message", message}, {"exit_code", code}}}};
    err << j.dump() << "\n";
    return code;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const DomainError& e) {
        return report(err, "DomainError", e.what(), 2);
    } catch (const ConvergenceError& e) {
        return report(err, "ConvergenceError", e.what(), 3);
    } catch (const BreakdownError& e) {
        return report(err, "BreakdownError", e.what(), 4);
    } catch (const std::exception& e) {
        return report(err, "Error", e.what(), 1);
    }
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::string partial = config.output == "-" ? std::string() : config.output + ".partial";
    const int code = guarded(err, [&] {
        config.validate();
        const std::string text = render(config, dispatch(config));
        if (partial.empty()) {
            out << text;
            out.flush();
            return 0;
        }
        {
            std::ofstream os(partial, std::ios::binary);
            if (!os) throw DomainError("cannot open output file '" + partial + "'");
            os << text;
            if (!os) throw DomainError("failed writing '" + partial + "'");
        }
        if (std::rename(partial.c_str(), config.output.c_str()) != 0)
            throw DomainError("cannot move output into '" + config.output + "'");
        return 0;
    });
    if (code != 0 && !partial.empty()) std::remove(partial.c_str());
    return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::optional<RunConfig> cfg;
    const int code = guarded(err, [&] {
        cfg = parse_args(argc, argv, out);
        return 0;
    });
    if (code != 0 || !cfg) return code;
    return run(*cfg, out, err);
}

} // namespace qce1d::cli
