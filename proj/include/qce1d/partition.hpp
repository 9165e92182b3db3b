// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file partition.hpp
 * @brief Canonical partition functions at first order in the interaction.
 *
 * Z_1 = sum_l [z_l + dz_l(s)] x^l with
 * dz_l(s) = sum_{n=2}^{N-l+1} (+-1)^n n^{-d/2} z_{l-1}^{(N-n)} sum_{n1=1}^{n-1} a_(n1,n-n1)(s).
 */

#pragma once

#include <qce1d/model.hpp>
#include <qce1d/specfun.hpp>

#include <functional>
#include <vector>

namespace qce1d {

enum class Regime {
    Direct,      ///< expansion around free particles of the given statistics
    Fermionized  ///< bosons expanded around free fermions (strong coupling)
};

/// dz_l(s) for N particles in effective dimension d.
double delta_z(int N, double d, Statistics st, int l, double s, Regime regime = Regime::Direct,
               const Accuracy& acc = {});

/// Polynomial coefficients w_0..w_N of Z_1 in powers of x (w_0 = 0).
std::vector<double> interacting_coefficients(int N, double d, Statistics st, double s,
                                             Regime regime = Regime::Direct,
                                             const Accuracy& acc = {});

/// sum_l l^p w_l x^l, compensated, accumulated from the highest power down.
double power_sum(const std::vector<double>& w, double x, int p = 0);

/// Non-interacting Z_0 of a single-species system.
double z0_partition(const SystemSpec& spec, const ThermalPoint& tp);

/// First-order Z_1 of a single-species system.
double z1_partition(const SystemSpec& spec, const ThermalPoint& tp,
                    Regime regime = Regime::Direct, const Accuracy& acc = {});

/// True when Z_1 <= 0, i.e. the first-order expansion has broken down.
bool qce_breakdown(const SystemSpec& spec, const ThermalPoint& tp,
                   Regime regime = Regime::Direct, const Accuracy& acc = {});

/**
 * First-order correction for several distinguishable species.
 *
 * Within-species corrections times the other species' Z_0, plus the
 * inter-cycle cross terms joined by alpha_ij. Unequal masses require
 * ring confinement.
 */
double multispecies_delta_Z(const SystemSpec& spec, const ThermalPoint& tp, const Accuracy& acc = {});

/// prod_i Z_0^{(N_i)} + multispecies_delta_Z.
double multispecies_partition(const SystemSpec& spec, const ThermalPoint& tp, const Accuracy& acc = {});

/// Lowest two many-body energies as functions of V_eff.
struct SplitAnsatz {
    std::function<double(double)> E0;
    std::function<double(double)> E1;
};

/// Weights w_0 = -1, w_l = z_l + dz_l(s) of the split ansatz.
std::vector<double> split_weights(const SystemSpec& spec, const ThermalPoint& tp,
                                  const Accuracy& acc = {});

/// Z = exp(-beta E0) + exp(-beta E1) sum_{l=0}^N w_l x^l.
double split_partition(const SystemSpec& spec, const ThermalPoint& tp, const SplitAnsatz& ansatz,
                       const Accuracy& acc = {});

} // namespace qce1d
