// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file partition.cpp
 * @brief Assembly of Z_0, Z_1, multi-species and split-ansatz partition functions.
 */

#include <qce1d/clusters.hpp>
#include <qce1d/combinatorics.hpp>
#include <qce1d/error.hpp>
#include <qce1d/partition.hpp>

#include <cmath>

namespace qce1d {

namespace {

double geometry_sum(int n, double s, Regime regime, const Accuracy& acc) {
    double sum = 0.0;
    for (int n1 = 1; n1 < n; ++n1) {
        ClusterGeometry g(n1, n - n1);
        sum += regime == Regime::Direct ? a_cluster(g, s, Statistics::Bose, acc)
                                        : a_cluster_fermionized(g, s, acc);
    }
    return sum;
}

void require_single(const SystemSpec& spec) {
    spec.validate();
    if (!spec.single_species()) throw DomainError("single-species operation needs one species");
}

/// Z_0^{(N)} for species i with its own thermal wavelength.
double species_z0(int N, double d, Statistics st, double xi) {
    if (N == 0) return 1.0;
    return power_sum(nonint_coefficients(N, d, st)->z, xi);
}

} // namespace

double delta_z(int N, double d, Statistics st, int l, double s, Regime regime, const Accuracy& acc) {
    if (N < 1 || l < 1 || l > N) throw DomainError("delta_z needs 1 <= l <= N");
    if (!(s >= 0.0)) throw DomainError("thermal coupling s must be non-negative");
    if (regime == Regime::Fermionized && st != Statistics::Bose)
        throw DomainError("the fermionized regime applies to bosons");
    if (regime == Regime::Direct && (st == Statistics::Fermi || s == 0.0)) return 0.0;
    const Statistics zst = regime == Regime::Direct ? Statistics::Bose : Statistics::Fermi;
    const int sgn = regime == Regime::Direct ? 1 : -1;
    double sum = 0.0;
    for (int n = 2; n <= N - l + 1; ++n) {
        const double z = z_coeff(N - n, l - 1, d, zst);
        if (z == 0.0) continue;
        const double pm = (sgn < 0 && n % 2) ? -1.0 : 1.0;
        sum += pm * std::pow(static_cast<double>(n), -0.5 * d) * z * geometry_sum(n, s, regime, acc);
    }
    return sum;
}

std::vector<double> interacting_coefficients(int N, double d, Statistics st, double s,
                                             Regime regime, const Accuracy& acc) {
    const Statistics zst = regime == Regime::Direct ? st : Statistics::Fermi;
    const auto z = nonint_coefficients(N, d, zst);
    std::vector<double> w(N + 1, 0.0);
    for (int l = 1; l <= N; ++l) w[l] = (*z)[l] + delta_z(N, d, st, l, s, regime, acc);
    return w;
}

double power_sum(const std::vector<double>& w, double x, int p) {
    const int N = static_cast<int>(w.size()) - 1;
    double sum = 0.0, comp = 0.0;
    for (int l = N; l >= 0; --l) {
        const double term = std::pow(static_cast<double>(l), p) * w[l] * std::pow(x, l);
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

double z0_partition(const SystemSpec& spec, const ThermalPoint& tp) {
    require_single(spec);
    const double d = effective_dimension(spec.confinement);
    const double x = tp.x(effective_volume(spec.confinement), d);
    const auto& sp = spec.species[0];
    return power_sum(nonint_coefficients(sp.count, d, sp.statistics)->z, x);
}

double z1_partition(const SystemSpec& spec, const ThermalPoint& tp, Regime regime, const Accuracy& acc) {
    require_single(spec);
    const double d = effective_dimension(spec.confinement);
    const double x = tp.x(effective_volume(spec.confinement), d);
    const auto& sp = spec.species[0];
    const double s = tp.s(spec.alpha);
    return power_sum(interacting_coefficients(sp.count, d, sp.statistics, s, regime, acc), x);
}

bool qce_breakdown(const SystemSpec& spec, const ThermalPoint& tp, Regime regime, const Accuracy& acc) {
    return !(z1_partition(spec, tp, regime, acc) > 0.0);
}

double multispecies_delta_Z(const SystemSpec& spec, const ThermalPoint& tp, const Accuracy& acc) {
    spec.validate();
    const double d = effective_dimension(spec.confinement);
    const double V = effective_volume(spec.confinement);
    const std::size_t S = spec.species.size();
    bool equal_masses = true;
    for (const auto& sp : spec.species) equal_masses &= (sp.mass_ratio == spec.species[0].mass_ratio);
    if (!equal_masses && spec.confinement.shape != Shape::Ring)
        throw DomainError("unequal masses are supported for ring confinement only");

    std::vector<double> xi(S);
    std::vector<std::vector<double>> z0(S);  // z0[i][m] = Z_0^{(m)} of species i
    for (std::size_t i = 0; i < S; ++i) {
        const auto& sp = spec.species[i];
        xi[i] = V / std::pow(tp.lambda_T(sp.mass_ratio), d);
        z0[i].resize(sp.count + 1);
        for (int m = 0; m <= sp.count; ++m) z0[i][m] = species_z0(m, d, sp.statistics, xi[i]);
    }
    auto others = [&](std::size_t a, std::size_t b) {
        double p = 1.0;
        for (std::size_t k = 0; k < S; ++k)
            if (k != a && k != b) p *= z0[k].back();
        return p;
    };

    double total = 0.0;
    for (std::size_t i = 0; i < S; ++i) {
        const auto& sp = spec.species[i];
        const double s = tp.s(spec.coupling(i, i));
        double dZ = 0.0;
        for (int l = 1; l <= sp.count; ++l)
            dZ += delta_z(sp.count, d, sp.statistics, l, s, Regime::Direct, acc) * std::pow(xi[i], l);
        total += dZ * others(i, i);
    }
    for (std::size_t i = 0; i < S; ++i) {
        for (std::size_t j = i + 1; j < S; ++j) {
            const double aij = spec.coupling(i, j);
            if (aij == 0.0) continue;
            const double s = tp.s(aij);
            const auto& si = spec.species[i];
            const auto& sj = spec.species[j];
            const MassPair mp(si.mass_ratio, sj.mass_ratio);
            const double xt = V / std::pow(mp.lambda_T(tp.beta), d);
            const double eps_i = sign(si.statistics), eps_j = sign(sj.statistics);
            double cross = 0.0;
            for (int ni = 1; ni <= si.count; ++ni) {
                for (int nj = 1; nj <= sj.count; ++nj) {
                    const double A = xt * std::pow(mp.n_mod(ni, nj), -0.5 * d) *
                                     a_cluster_multispecies(ni, nj, mp, s, acc);
                    cross += std::pow(eps_i, ni - 1) * std::pow(eps_j, nj - 1) * A *
                             z0[i][si.count - ni] * z0[j][sj.count - nj];
                }
            }
            total += cross * others(i, j);
        }
    }
    return total;
}

double multispecies_partition(const SystemSpec& spec, const ThermalPoint& tp, const Accuracy& acc) {
    spec.validate();
    const double d = effective_dimension(spec.confinement);
    const double V = effective_volume(spec.confinement);
    double prod = 1.0;
    for (const auto& sp : spec.species)
        prod *= species_z0(sp.count, d, sp.statistics, V / std::pow(tp.lambda_T(sp.mass_ratio), d));
    return prod + multispecies_delta_Z(spec, tp, acc);
}

std::vector<double> split_weights(const SystemSpec& spec, const ThermalPoint& tp, const Accuracy& acc) {
    require_single(spec);
    const double d = effective_dimension(spec.confinement);
    const auto& sp = spec.species[0];
    auto w = interacting_coefficients(sp.count, d, sp.statistics, tp.s(spec.alpha), Regime::Direct, acc);
    w[0] = -1.0;
    return w;
}

double split_partition(const SystemSpec& spec, const ThermalPoint& tp, const SplitAnsatz& ansatz,
                       const Accuracy& acc) {
    if (!ansatz.E0 || !ansatz.E1) throw DomainError("split ansatz needs E0 and E1 providers");
    const double V = effective_volume(spec.confinement);
    const double d = effective_dimension(spec.confinement);
    const auto w = split_weights(spec, tp, acc);
    const double E0 = ansatz.E0(V), E1 = ansatz.E1(V);
    return std::exp(-tp.beta * E0) + std::exp(-tp.beta * E1) * power_sum(w, tp.x(V, d));
}

} // namespace qce1d
