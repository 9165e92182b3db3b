// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief Run configuration and command dispatch for the qce1d tool.
 */

#pragma once

#include <qce1d/model.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qce1d::cli {

/// Evenly (or logarithmically) spaced grid; points = 1 yields {min}.
struct Grid {
    double min = 0.0;
    double max = 0.0;
    int points = 0;
    bool log = false;

    bool empty() const { return points == 0; }
    std::vector<double> values() const;
    void validate(const std::string& name) const;
};

/// Everything one invocation needs; serializes to and from JSON.
struct RunConfig {
    std::string command;

    int N = 3;
    std::string statistics = "bose";
    std::vector<Species> species;      ///< several species override N and statistics
    std::vector<double> alpha_pair;    ///< row-major S x S couplings
    std::string shape = "ring";        ///< ring | harmonic | power-law
    int D = 1;
    double length = 10.0;
    double hbar_omega = 1.0;
    double mu = 2.0;
    double stiffness = 0.25;
    std::optional<double> d;           ///< effective dimension override (zcoeffs)

    double alpha = 0.0;
    std::optional<double> beta_alpha;  ///< sets alpha = beta_alpha / beta when given
    double beta = 1.0;

    Grid E_grid, V_grid, beta_grid, s_grid, eps_grid;
    bool sweep_V = false;

    std::string format = "csv";        ///< csv | json
    std::string output = "-";

    bool oracle = false;
    bool split = false;
    int virial_order = 0;
    bool shift = false;
    std::string shift_base = "free";   ///< free | qce1
    std::string regime = "direct";     ///< direct | fermionized
    int n_max = 8;
    int basis_size = 400;
    double rel_tol = 1e-12;
    int threads = 1;

    /// Fills command-specific default grids and checks invariants.
    void finalize();
    void validate() const;

    /// Coupling actually used: beta_alpha / beta when given, else alpha.
    double effective_alpha() const;
    Confinement confinement() const;
    SystemSpec system() const;

    std::string to_json() const;
    static RunConfig from_json(const std::string& text);
};

/// Parses argv (a JSON config via --config is read first; flags override it).
/// Returns nullopt when the invocation only asked for help or a config dump.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Executes one command and writes its table. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses and runs; structured error records go to err.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Shortest round-trip formatting at 17 significant digits, locale independent.
std::string format_double(double v);

} // namespace qce1d::cli
