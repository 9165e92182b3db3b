// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file thermo.hpp
 * @brief Pressure, isothermal compressibility and the ideal-gas virial baseline.
 *
 * P = (k_B T/V_eff) sum_l l w_l x^l / sum_l w_l x^l for Z = sum_l w_l x^l.
 */

#pragma once

#include <qce1d/model.hpp>
#include <qce1d/partition.hpp>

namespace qce1d {

struct EOSPoint {
    double V_eff = 0.0;
    double beta = 0.0;
    int N = 0;
    double alpha = 0.0;
    double P = 0.0;
    double kappa_T = 0.0;
    bool split = false;
    bool breakdown = false;
};

/// Pressure from the first-order partition function (direct regime).
double pressure(const SystemSpec& spec, const ThermalPoint& tp, Regime regime = Regime::Direct,
                const Accuracy& acc = {});

/// Pressure k_B T d ln Z/dV_eff of the split ansatz; E0', E1' by finite differences.
double pressure_split(const SystemSpec& spec, const ThermalPoint& tp, const SplitAnsatz& ansatz,
                      const Accuracy& acc = {});

/**
 * kappa_T = -1/(V dP/dV) at fixed T and N, from a Richardson-extrapolated
 * central difference of the pressure. The ansatz is used when given.
 */
double compressibility(const SystemSpec& spec, const ThermalPoint& tp,
                       const SplitAnsatz* ansatz = nullptr, const Accuracy& acc = {});

/// Pressure and compressibility together.
EOSPoint eos_point(const SystemSpec& spec, const ThermalPoint& tp,
                   const SplitAnsatz* ansatz = nullptr, const Accuracy& acc = {});

/**
 * Grand-canonical ideal-gas virial pressure truncated at `order`.
 *
 * Cluster integrals in effective dimension d are b_k = (+-1)^{k+1} k^{-1-d/2};
 * the density n = N/V_eff is inverted order by order for the fugacity.
 */
double virial_pressure(const SystemSpec& spec, const ThermalPoint& tp, int order);

/// kappa_T of the truncated virial pressure; NaN where that pressure is not decreasing.
double virial_compressibility(const SystemSpec& spec, const ThermalPoint& tp, int order);

/// Virial coefficients B_1..B_order of beta P lambda^d = sum_k B_k (n lambda^d)^k.
std::vector<double> virial_coefficients(int order, double d, Statistics st);

} // namespace qce1d
