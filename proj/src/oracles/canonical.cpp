// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file canonical.cpp
 * @brief Level lists and canonical sums over them.
 */

#include <qce1d/error.hpp>
#include <qce1d/oracles.hpp>

#include <algorithm>
#include <cmath>

namespace qce1d::oracles {

double LevelList::staircase(double E) const {
    double n = 0.0;
    for (std::size_t i = 0; i < energies.size() && energies[i] <= E; ++i) n += degeneracies[i];
    return n;
}

double LevelList::staircase_mid(double E, double tol) const {
    double n = 0.0;
    for (std::size_t i = 0; i < energies.size(); ++i) {
        if (energies[i] < E - tol) n += degeneracies[i];
        else if (energies[i] <= E + tol) n += 0.5 * degeneracies[i];
    }
    return n;
}

void LevelList::validate() const {
    if (energies.size() != degeneracies.size()) throw DomainError("level list columns differ in length");
    for (std::size_t i = 0; i < energies.size(); ++i) {
        if (!std::isfinite(energies[i]) || degeneracies[i] < 1) throw DomainError("invalid level entry");
        if (i > 0 && !(energies[i] > energies[i - 1])) throw DomainError("levels must be strictly increasing");
        if (energies[i] > E_max) throw DomainError("level above E_max");
    }
}

LevelList make_level_list(std::vector<double> raw, double E_max, std::string provenance, double tol) {
    std::sort(raw.begin(), raw.end());
    LevelList out;
    out.E_max = E_max;
    out.provenance = std::move(provenance);
    for (double e : raw) {
        if (e > E_max) break;
        if (!out.energies.empty() && e - out.energies.back() <= tol * std::max(1.0, std::abs(e))) {
            ++out.degeneracies.back();
        } else {
            out.energies.push_back(e);
            out.degeneracies.push_back(1);
        }
    }
    return out;
}

std::pair<double, double> canonical_sums(const LevelList& levels, double beta) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    if (levels.size() == 0) throw DomainError("empty level list");
    const double E0 = levels.energies.front();
    double Z = 0.0, U = 0.0;
    for (std::size_t i = levels.size(); i-- > 0;) {
        const double w = levels.degeneracies[i] * std::exp(-beta * (levels.energies[i] - E0));
        Z += w;
        U += w * levels.energies[i];
    }
    if (std::exp(-beta * (levels.E_max - E0)) > 1e-12 * Z)
        throw ConvergenceError("level list is not complete enough at this temperature",
                               std::exp(-beta * (levels.E_max - E0)) / Z);
    const double scale = std::exp(-beta * E0);
    return {Z * scale, U * scale};
}

double canonical_partition_from_levels(const LevelList& levels, double beta) {
    return canonical_sums(levels, beta).first;
}

double canonical_ideal_recursion(const std::function<double(double)>& Z1, int N, Statistics st, double beta) {
    if (N < 0) throw DomainError("N must be non-negative");
    const double eps = sign(st);
    std::vector<double> z1(N + 1), Z(N + 1, 0.0);
    for (int k = 1; k <= N; ++k) z1[k] = Z1(k * beta);
    Z[0] = 1.0;
    for (int n = 1; n <= N; ++n) {
        double sum = 0.0;
        for (int k = 1; k <= n; ++k) sum += ((k % 2 == 1) ? 1.0 : eps) * z1[k] * Z[n - k];
        Z[n] = sum / n;
    }
    return Z[N];
}

double canonical_ideal_recursion(const LevelList& single_particle, int N, Statistics st, double beta) {
    return canonical_ideal_recursion(
        [&](double b) { return canonical_partition_from_levels(single_particle, b); }, N, st, beta);
}

} // namespace qce1d::oracles
