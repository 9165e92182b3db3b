// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file amplitude.cpp
 * @brief Raw-integral cluster amplitude and static-scatterer references.
 */

#include <qce1d/error.hpp>
#include <qce1d/oracles.hpp>

#include "../quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qce1d::oracles {

namespace {

constexpr double kDrop = 50.0;  // integrand regions below exp(-kDrop) are dropped

/// Largest u with kappa u + ((A+u)^2 - A^2)/8 <= budget.
double u_extent(double A, double kappa, double budget) {
    const double b = A / 4.0 + kappa;
    return -4.0 * b + std::sqrt(16.0 * b * b + 8.0 * budget);
}

/// Argmax of a concave function on [lo, hi] by golden-section search.
template <class F>
double concave_argmax(F&& f, double lo, double hi) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-12 * (1.0 + std::abs(a)); ++it) {
        const double x1 = b - g * (b - a), x2 = a + g * (b - a);
        if (f(x1) < f(x2)) a = x1;
        else b = x2;
    }
    return 0.5 * (a + b);
}

/// Point between inside (f >= level) and outside (f < level) by bisection.
template <class F>
double level_crossing(F&& f, double level, double inside, double outside) {
    for (int it = 0; it < 100; ++it) {
        const double m = 0.5 * (inside + outside);
        if (f(m) >= level) inside = m;
        else outside = m;
    }
    return 0.5 * (inside + outside);
}

} // namespace

AmplitudeResult amplitude_quadrature(int n1, int n2, double s, double rel_tol) {
    if (n1 < 1 || n2 < 1 || n1 + n2 > 12) throw DomainError("amplitude oracle needs n1, n2 >= 1, n <= 12");
    if (!(s >= 0.0)) throw DomainError("amplitude oracle needs s >= 0");
    AmplitudeResult res;
    if (s == 0.0) return res;
    const int n = n1 + n2;
    const double nu = std::sqrt(static_cast<double>(2 * n1 * n2 - n1 - n2) / n);
    const double kappa = std::sqrt(0.5 * s);
    double inner_rel = 0.0, middle_abs = 0.0;

    auto expo = [&](double z, double r) {
        const double A = std::abs(nu * z + r) + r;
        return -0.125 * z * z - 0.125 * A * A;
    };
    const double far = 4.0 * std::sqrt(kDrop) * (1.0 + nu);
    auto peak = [&](double r) { return expo(concave_argmax([&](double z) { return expo(z, r); }, -far, far), r); };
    const double r_cut = level_crossing(peak, -kDrop, 0.0, far);

    auto inner = [&](double A) {
        auto f = [&](double u) {
            const double t = A + u;
            return std::exp(-kappa * u - 0.125 * (t * t - A * A));
        };
        auto r = detail::gk_global(f, 0.0, u_extent(A, kappa, kDrop), 1e-13);
        if (r.value > 0.0) inner_rel = std::max(inner_rel, r.error / r.value);
        return r.value;
    };
    auto middle = [&](double r) {
        auto e = [&](double z) { return expo(z, r); };
        const double zm = concave_argmax(e, -far, far);
        if (e(zm) < -kDrop) return 0.0;
        const double zlo = level_crossing(e, -kDrop, zm, zm - far);
        const double zhi = level_crossing(e, -kDrop, zm, zm + far);
        auto f = [&](double z) {
            const double A = std::abs(nu * z + r) + r;
            return std::exp(e(z)) * inner(A);
        };
        std::vector<double> cuts{zlo};
        if (nu > 0.0 && -r / nu > zlo && -r / nu < zhi) cuts.push_back(-r / nu);
        cuts.push_back(zhi);
        detail::QuadResult acc;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            auto p = detail::gk_global(f, cuts[i], cuts[i + 1], 1e-12, 1e-24);
            acc.value += p.value;
            acc.error += p.error;
        }
        middle_abs = std::max(middle_abs, acc.error);
        return acc.value;
    };
    auto outer = detail::gk_global(middle, 0.0, r_cut, std::min(rel_tol * 0.1, 1e-10), 1e-22);
    const double pref = -std::sqrt(2.0 * s) / (4.0 * std::numbers::pi);
    res.value = pref * outer.value;
    res.error = std::abs(pref) * (outer.error + r_cut * middle_abs + std::abs(outer.value) * inner_rel);
    if (!std::isfinite(res.value) || res.error > rel_tol * std::abs(res.value))
        throw ConvergenceError("amplitude oracle missed its tolerance", res.error / std::abs(res.value));
    return res;
}

double static_scatterer_dZ(double g, double kappa, double beta) {
    if (!(g >= 0.0) || !(kappa > 0.0) || !(beta > 0.0)) throw DomainError("static scatterer needs g >= 0, kappa, beta > 0");
    if (g == 0.0) return 0.0;
    const double w = 4.0 * kappa * beta;
    const double norm = 1.0 / std::sqrt(std::numbers::pi * w);
    const double decay = g / (2.0 * kappa);
    const double cut = std::sqrt(w * 50.0);
    auto inner = [&](double x) {
        auto f = [&](double u) {
            const double r = 2.0 * x + u;
            return std::exp(-decay * u - r * r / w);
        };
        return detail::gk_graded(f, 0.0, cut, 1.0 / (decay + 1.0 / cut), 1e-13).value;
    };
    auto outer = detail::gk(inner, 0.0, 0.5 * cut, 1e-12);
    // the x integral runs over the whole line; the integrand is even in x
    return -decay * norm * 2.0 * outer.value;
}

} // namespace qce1d::oracles
