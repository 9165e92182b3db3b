// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file harmonic.cpp
 * @brief Two harmonically trapped bosons with a contact interaction.
 */

#include <qce1d/error.hpp>
#include <qce1d/oracles.hpp>

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <cstdint>
#include <numbers>

namespace qce1d::oracles {

namespace {

/// Squared even oscillator eigenfunctions at the origin, p_n = phi_{2n}(0)^2.
std::vector<double> origin_weights(int K) {
    std::vector<double> p(K);
    p[0] = 1.0 / std::sqrt(std::numbers::pi);
    for (int n = 1; n < K; ++n) p[n] = p[n - 1] * (2.0 * n - 1.0) / (2.0 * n);
    return p;
}

double even_level(int n) { return 2.0 * n + 0.5; }

/// Root of monotone f on the open interval (lo, hi).
template <class F>
double bracketed_root(F&& f, double lo, double hi) {
    const double pad = std::max(1e-14 * (hi - lo), 16.0 * std::numeric_limits<double>::epsilon() * std::abs(hi));
    double a = lo + pad, b = hi - pad;
    std::uintmax_t iters = 200;
    auto tol = boost::math::tools::eps_tolerance<double>(50);
    try {
        auto r = boost::math::tools::toms748_solve(f, a, b, tol, iters);
        return 0.5 * (r.first + r.second);
    } catch (const std::exception& e) {
        throw ConvergenceError(std::string("oscillator level root search failed: ") + e.what(), hi - lo);
    }
}

/// Levels of the secular equation truncated to K even basis states.
std::vector<double> truncated_levels(double g, int count, int K, const std::vector<double>& p) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) {
        auto f = [&](double E) {
            double sum = 0.0;
            for (int n = K - 1; n >= 0; --n) sum += p[n] / (even_level(n) - E);
            return 1.0 / g + sum;
        };
        out[i] = bracketed_root(f, even_level(i), even_level(i + 1));
    }
    return out;
}

} // namespace

std::vector<double> relative_even_levels(double g, int count, int basis_size) {
    if (!(g >= 0.0) || !std::isfinite(g)) throw DomainError("relative levels need finite g >= 0");
    if (count < 1 || basis_size < 2 * count + 2) throw DomainError("basis too small for the requested levels");
    std::vector<double> out(count);
    if (g == 0.0) {
        for (int i = 0; i < count; ++i) out[i] = even_level(i);
        return out;
    }
    const auto p = origin_weights(64 * basis_size);
    std::vector<std::vector<double>> T;
    for (int K = basis_size; K <= 64 * basis_size; K *= 4) T.push_back(truncated_levels(g, count, K, p));
    // h = K^{-1/2} halves per step; eliminate h, h^2, h^3 successively
    for (int i = 0; i < count; ++i) {
        std::vector<double> col;
        for (const auto& row : T) col.push_back(row[i]);
        for (int order = 1; order < static_cast<int>(col.size()); ++order) {
            const double f = std::ldexp(1.0, order);
            for (std::size_t j = col.size() - 1; j >= static_cast<std::size_t>(order); --j)
                col[j] = (f * col[j] - col[j - 1]) / (f - 1.0);
        }
        out[i] = col.back();
    }
    return out;
}

std::vector<double> relative_even_levels_busch(double g, int count) {
    if (!(g >= 0.0) || !std::isfinite(g)) throw DomainError("Busch levels need finite g >= 0");
    if (count < 1) throw DomainError("count must be positive");
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) {
        if (g == 0.0) {
            out[i] = even_level(i);
            continue;
        }
        auto f = [&](double E) {
            const double ratio = std::tgamma(0.25 - 0.5 * E) / std::tgamma(0.75 - 0.5 * E);
            return 1.0 / g + 0.5 * ratio;
        };
        // the root lies between the free level and the fermionized level above it
        out[i] = bracketed_root(f, even_level(i), even_level(i) + 1.0);
    }
    return out;
}

LevelList two_body_harmonic_levels(double alpha, int basis_size, double E_max) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and >= 0");
    if (!(E_max > 1.0)) throw DomainError("E_max must exceed the ground state");
    const double g = std::sqrt(2.0 * alpha);
    const int count = static_cast<int>(std::ceil((E_max - 1.0) / 2.0)) + 1;
    const auto rel = relative_even_levels(g, count, std::max(basis_size, 2 * count + 2));
    std::vector<double> raw;
    for (double e : rel)
        for (int n = 0; n + 0.5 + e <= E_max; ++n) raw.push_back(n + 0.5 + e);
    return make_level_list(std::move(raw), E_max, "diagonalization");
}

} // namespace qce1d::oracles
