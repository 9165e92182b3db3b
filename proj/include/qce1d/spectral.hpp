// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spectral.hpp
 * @brief Energy-domain coefficients, smooth counting function, DOS and shift model.
 *
 * The counting function is
 *   N(E) = sum_l [z_l/Gamma(ld/2+1) + g_l(E/alpha)] V_eff^l E^{ld/2}/(4pi)^{ld/2},
 * where eps^{m/2} b_j^{(m)}(eps) is the inverse Laplace transform of s^{-m/2-1} a_j(s)
 * and g_l collects b_j^{(l d)} over the cluster geometries.
 */

#pragma once

#include <qce1d/combinatorics.hpp>
#include <qce1d/model.hpp>
#include <qce1d/partition.hpp>

#include <array>
#include <optional>

namespace qce1d {

/// Inverse transforms of the four amplitude terms. Zero for eps <= 0.
double b1(int l, double nu, double eps);
double b2(int l, double nu, double eps);  ///< l >= 1
double b3(int l, double nu, double eps);  ///< l >= -1
double b4(int l, double nu, double eps);  ///< l >= 1

/// Fermionized counterparts: ~b1 from ~a1, ~b2 = -b2, ~b3 = b3, ~b4 = -b4.
std::array<double, 4> b_terms(int l, double nu, double eps, Regime regime = Regime::Direct);

/**
 * g_l^{(N)}(eps) in effective dimension d (l*d must be an integer).
 *
 * Fermi statistics in the direct regime gives exactly zero.
 */
double g_l(int N, int l, Statistics st, Regime regime, double eps, double d = 1.0);

/// f_l = (l d/2) g_l + eps g_l'(eps), the DOS coefficient.
double f_l(int N, int l, Statistics st, Regime regime, double eps, double d = 1.0);

/// Smooth counting function of a single-species system at energy E.
double counting_function(const SystemSpec& spec, double E, Regime regime = Regime::Direct);

/// Non-interacting counting function (alpha ignored).
double counting_function_free(const SystemSpec& spec, double E);

/// Smooth density of states dN/dE.
double dos(const SystemSpec& spec, double E, Regime regime = Regime::Direct);

enum class ShiftBase {
    Free,       ///< shift the non-interacting counting function
    FirstOrder  ///< shift the first-order counting function
};

/**
 * Energy-shift interpolation between weak and strong coupling.
 *
 * dE_alpha(E) = chi(E/alpha) dE_inf(E), dE~_inf = a~ N0(E~)^{(2/d-1)/N} on the scaled
 * energy E~ = E V_eff^{2/d}/(4pi).
 */
struct ShiftModel {
    int N = 2;
    double d = 1.0;
    double a_tilde = 0.0;
    std::optional<Rational> a_tilde_exact;  ///< available for d = 2
    std::vector<double> c;                  ///< c_l = z_l/Gamma(ld/2+1)

    /// chi(eps) = -Gamma((N-1)d/2+1) g_{N-1}(eps)/(2 z_{N-1}).
    double chi(double eps) const;
    /// Scaled full shift dE~_inf at scaled energy Et.
    double full_shift_scaled(double Et) const;
    /// Non-interacting counting function in scaled energy.
    double free_counting_scaled(double Et) const;
};

ShiftModel shift_model(int N, double d, Statistics st = Statistics::Bose);

/// Full shift dE_inf(E) in energy units of the system.
double full_shift(const ShiftModel& model, const SystemSpec& spec, double E);

/// N_alpha(E) = N_base(E - chi(E/alpha) dE_inf(E)).
double shifted_counting(const ShiftModel& model, const SystemSpec& spec, double E,
                        ShiftBase base = ShiftBase::Free);

} // namespace qce1d
