// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file thermo.cpp
 * @brief Equation of state, compressibility and virial baseline.
 */

#include <qce1d/combinatorics.hpp>
#include <qce1d/error.hpp>
#include <qce1d/thermo.hpp>

#include <cmath>
#include <sstream>

namespace qce1d {

namespace {

std::string describe(const SystemSpec& spec, const ThermalPoint& tp) {
    std::ostringstream os;
    os << "N=" << spec.total_count() << " beta=" << tp.beta << " alpha=" << spec.alpha
       << " V_eff=" << effective_volume(spec.confinement);
    return os.str();
}

/// Richardson-extrapolated central difference of f at V with relative step h.
template <class F>
double derivative(F&& f, double V, double rel_step) {
    const double h = V * rel_step;
    auto D = [&](double hh) { return (f(V + hh) - f(V - hh)) / (2.0 * hh); };
    const double D1 = D(h), D2 = D(0.5 * h);
    return (4.0 * D2 - D1) / 3.0;
}

/// Truncated power series helpers, coefficients index = power.
using Series = std::vector<double>;

Series multiply(const Series& a, const Series& b, int K) {
    Series c(K + 1, 0.0);
    for (int i = 0; i <= K; ++i)
        for (int j = 0; i + j <= K; ++j) c[i + j] += a[i] * b[j];
    return c;
}

} // namespace

double pressure(const SystemSpec& spec, const ThermalPoint& tp, Regime regime, const Accuracy& acc) {
    spec.validate();
    if (!spec.single_species()) throw DomainError("pressure needs one species");
    const double d = effective_dimension(spec.confinement);
    const double V = effective_volume(spec.confinement);
    const double x = tp.x(V, d);
    const auto& sp = spec.species[0];
    const auto w = spec.alpha == 0.0 && regime == Regime::Direct
                       ? nonint_coefficients(sp.count, d, sp.statistics)->z
                       : interacting_coefficients(sp.count, d, sp.statistics, tp.s(spec.alpha), regime, acc);
    const double Z = power_sum(w, x, 0);
    if (!(Z > 0.0)) throw BreakdownError("first-order partition function is not positive: " + describe(spec, tp));
    return power_sum(w, x, 1) / (Z * tp.beta * V);
}

double pressure_split(const SystemSpec& spec, const ThermalPoint& tp, const SplitAnsatz& ansatz,
                      const Accuracy& acc) {
    if (!ansatz.E0 || !ansatz.E1) throw DomainError("split ansatz needs E0 and E1 providers");
    const double V = effective_volume(spec.confinement);
    const double d = effective_dimension(spec.confinement);
    const double x = tp.x(V, d);
    const auto w = split_weights(spec, tp, acc);
    const double b = tp.beta;
    const double E0 = ansatz.E0(V), E1 = ansatz.E1(V);
    const double dE0 = derivative(ansatz.E0, V, 1e-4);
    const double dE1 = derivative(ansatz.E1, V, 1e-4);
    const double S = power_sum(w, x, 0);
    // x = V/lambda^d so dx^l/dV = l x^l / V
    const double dS = power_sum(w, x, 1) / V;
    const double g0 = std::exp(-b * (E0 - E1));
    const double Zr = g0 + S;  // Z exp(beta E1)
    if (!(Zr > 0.0)) throw BreakdownError("split partition function is not positive: " + describe(spec, tp));
    const double dZr = -b * dE0 * g0 - b * dE1 * S + dS;
    return dZr / (b * Zr);
}

double compressibility(const SystemSpec& spec, const ThermalPoint& tp, const SplitAnsatz* ansatz,
                       const Accuracy& acc) {
    const double V = effective_volume(spec.confinement);
    auto P = [&](double v) {
        const SystemSpec sv = with_effective_volume(spec, v);
        return ansatz ? pressure_split(sv, tp, *ansatz, acc) : pressure(sv, tp, Regime::Direct, acc);
    };
    const double dPdV = derivative(P, V, 1e-5);
    if (!(dPdV < 0.0))
        throw DomainError("pressure is not decreasing in V_eff at this point; report dP/dV = " +
                          std::to_string(dPdV) + " instead");
    return -1.0 / (V * dPdV);
}

EOSPoint eos_point(const SystemSpec& spec, const ThermalPoint& tp, const SplitAnsatz* ansatz,
                   const Accuracy& acc) {
    EOSPoint pt;
    pt.V_eff = effective_volume(spec.confinement);
    pt.beta = tp.beta;
    pt.N = spec.total_count();
    pt.alpha = spec.alpha;
    pt.split = ansatz != nullptr;
    try {
        pt.P = ansatz ? pressure_split(spec, tp, *ansatz, acc) : pressure(spec, tp, Regime::Direct, acc);
    } catch (const BreakdownError&) {
        pt.breakdown = true;
        pt.P = std::nan("");
        pt.kappa_T = std::nan("");
        return pt;
    }
    try {
        pt.kappa_T = compressibility(spec, tp, ansatz, acc);
    } catch (const DomainError&) {
        pt.kappa_T = std::nan("");
    } catch (const BreakdownError&) {
        pt.kappa_T = std::nan("");
    }
    return pt;
}

std::vector<double> virial_coefficients(int order, double d, Statistics st) {
    if (order < 1 || order > 8) throw DomainError("virial order must lie in [1, 8]");
    const int K = order;
    const double eps = sign(st);
    Series b(K + 1, 0.0);
    for (int k = 1; k <= K; ++k) b[k] = std::pow(eps, k + 1) * std::pow(static_cast<double>(k), -1.0 - 0.5 * d);
    // y = sum k b_k z^k; invert z(y) by fixed-point iteration on truncated series
    Series z(K + 1, 0.0);
    z[1] = 1.0;
    for (int it = 0; it < K; ++it) {
        Series next(K + 1, 0.0);
        next[1] = 1.0;
        Series zp = z;
        for (int k = 2; k <= K; ++k) {
            zp = multiply(zp, z, K);
            for (int j = 0; j <= K; ++j) next[j] -= k * b[k] * zp[j];
        }
        z = next;
    }
    Series P(K + 1, 0.0);
    Series zp(K + 1, 0.0);
    zp[0] = 1.0;
    for (int k = 1; k <= K; ++k) {
        zp = multiply(zp, z, K);
        for (int j = 0; j <= K; ++j) P[j] += b[k] * zp[j];
    }
    return std::vector<double>(P.begin() + 1, P.end());
}

double virial_pressure(const SystemSpec& spec, const ThermalPoint& tp, int order) {
    spec.validate();
    if (!spec.single_species()) throw DomainError("virial pressure needs one species");
    const double d = effective_dimension(spec.confinement);
    const double V = effective_volume(spec.confinement);
    const auto& sp = spec.species[0];
    const auto B = virial_coefficients(order, d, sp.statistics);
    const double lam_d = std::pow(tp.lambda_T(), d);
    const double y = sp.count / V * lam_d;
    double sum = 0.0;
    for (int j = order; j >= 1; --j) sum += B[j - 1] * std::pow(y, j);
    return sum / (tp.beta * lam_d);
}

double virial_compressibility(const SystemSpec& spec, const ThermalPoint& tp, int order) {
    const double V = effective_volume(spec.confinement);
    auto P = [&](double v) { return virial_pressure(with_effective_volume(spec, v), tp, order); };
    const double dPdV = derivative(P, V, 1e-5);
    if (!(dPdV < 0.0)) return std::nan("");
    return -1.0 / (V * dPdV);
}

} // namespace qce1d
