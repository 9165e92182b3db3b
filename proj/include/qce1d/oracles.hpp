// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracles.hpp
 * @brief Brute-force reference implementations used by tests and acceptance runs.
 *
 * None of these routines share formula code with the production modules.
 */

#pragma once

#include <qce1d/model.hpp>
#include <qce1d/partition.hpp>

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qce1d::oracles {

inline constexpr const char* kOracleVersion = "1";

/// Sorted many-body energies with degeneracies, complete below E_max.
struct LevelList {
    std::vector<double> energies;
    std::vector<int> degeneracies;
    double E_max = 0.0;
    std::string provenance;  ///< "diagonalization", "Bethe" or "analytic"

    std::size_t size() const { return energies.size(); }
    /// Total number of states (with degeneracy) at or below E.
    double staircase(double E) const;
    /// Staircase at the midpoint of its jumps: states below E plus half of those at E.
    double staircase_mid(double E, double tol = 1e-9) const;
    void validate() const;
};

/// Merges a raw list of energies into a LevelList (levels closer than tol coincide).
LevelList make_level_list(std::vector<double> raw, double E_max, std::string provenance,
                          double tol = 1e-9);

/**
 * Internal cluster amplitude from the raw (r, z, u) integral of the
 * interacting two-body propagator, by nested adaptive quadrature.
 */
struct AmplitudeResult {
    double value = 0.0;
    double error = 0.0;
};
AmplitudeResult amplitude_quadrature(int n1, int n2, double s, double rel_tol = 1e-9);

/**
 * Even relative levels of -1/2 d^2 + 1/2 y^2 + g delta(y), from the secular
 * equation of the truncated oscillator basis, Richardson-extrapolated in K^{-1/2}.
 */
std::vector<double> relative_even_levels(double g, int count, int basis_size = 400);

/// Busch relation: roots of -Gamma(1/4 - E/2)/(2 Gamma(3/4 - E/2)) = 1/g.
std::vector<double> relative_even_levels_busch(double g, int count);

/**
 * Two harmonically trapped bosons with contact coupling alpha (units hbar*omega = 1).
 * Levels are centre-of-mass n + 1/2 plus interacting even relative levels.
 */
LevelList two_body_harmonic_levels(double alpha, int basis_size, double E_max);

/// Bethe roots and energy derivative for one quantum-number set.
struct BetheState {
    std::vector<int> twoI;  ///< 2 I_j
    std::vector<double> k;
    double energy = 0.0;
    double dE_dL = 0.0;
};

/// Solves k_j L + sum_l 2 atan((k_j - k_l)/c) = 2 pi I_j.
BetheState bethe_solve(const std::vector<int>& twoI, double L, double c);

/// Lieb-Liniger levels on a ring, c = sqrt(2 alpha), complete below E_max.
LevelList lieb_liniger_levels(int N, double L, double alpha, double E_max,
                              std::vector<BetheState>* states = nullptr);

/// Ring ground level and lowest level with nonzero momentum as functions of L.
SplitAnsatz lieb_liniger_split_ansatz(int N, double alpha);

/// Ground-state energy from plane-wave diagonalization at total momentum zero.
double plane_wave_ground_state(int N, double L, double c, int mode_cutoff);

/// Z = sum g exp(-beta E); throws when the list is not complete enough at beta.
double canonical_partition_from_levels(const LevelList& levels, double beta);

/// d ln Z / d beta weights: returns (Z, sum g E exp(-beta E)).
std::pair<double, double> canonical_sums(const LevelList& levels, double beta);

/// Z_N = (1/N) sum_k (+-1)^{k+1} Z_1(k beta) Z_{N-k} from a level list.
double canonical_ideal_recursion(const LevelList& single_particle, int N, Statistics st, double beta);

/// Same recursion with Z_1 supplied as a function of beta.
double canonical_ideal_recursion(const std::function<double(double)>& Z1, int N, Statistics st,
                                 double beta);

/// erfcx(z) = exp(z^2) erfc(z) for Re z >= 0 via the Weideman rational approximation.
std::complex<double> erfcx_complex(std::complex<double> z);

/**
 * Inverse Laplace transform f(eps) of F(s) on the fixed Talbot contour,
 * doubling the node count until successive estimates agree.
 */
double numeric_inverse_laplace(const std::function<std::complex<double>(std::complex<double>)>& F,
                               double eps, double rel_tol = 1e-9);

/// Forward Laplace transform int_0^inf exp(-s eps) f(eps) d eps.
double numeric_laplace(const std::function<double(double)>& f, double s, double rel_tol = 1e-9);

/// Cluster amplitude terms a_j(s) at complex s, independent of the production path.
std::complex<double> amplitude_term_complex(int j, double nu, std::complex<double> s);

/**
 * Partition-function correction of one particle, H = -kappa d^2 + g delta(x) on
 * the line, from a double integral over the free kernel
 * K0(r) = exp(-r^2/(4 kappa beta))/sqrt(4 pi kappa beta).
 */
double static_scatterer_dZ(double g, double kappa, double beta);

/// Level-list text cache: "energy degeneracy" rows behind a commented header.
void write_levels(const LevelList& levels, const std::string& path, const std::string& key);
std::optional<LevelList> read_levels(const std::string& path, const std::string& key);

/// Cache path for a parameter key under QCE1D_CACHE_DIR, or empty when unset.
std::string cache_path(const std::string& key);

/// Loads from cache or computes and stores.
LevelList cached_levels(const std::string& key, const std::function<LevelList()>& compute);

} // namespace qce1d::oracles
