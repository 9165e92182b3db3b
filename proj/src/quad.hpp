// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quad.hpp
 * @brief Internal adaptive quadrature helpers built on Boost.Math.
 */

#pragma once

#include <qce1d/error.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <queue>
#include <string>

namespace qce1d::detail {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};

/**
 * Globally adaptive Gauss-Kronrod (15/31): bisects the panel with the largest
 * error until the summed error meets max(rel_tol |I|, abs_tol).
 */
template <class F>
QuadResult gk_global(F&& f, double a, double b, double rel_tol, double abs_tol = 0.0,
                     int max_panels = 4000) {
    struct Panel {
        double a, b, value, error;
        bool operator<(const Panel& o) const { return error < o.error; }
    };
    auto eval = [&](double lo, double hi) {
        double err = 0.0;
        const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 0, 0.0, &err);
        // the single-panel estimate is reported for the interval mapped onto [-1, 1]
        return Panel{lo, hi, v, err * 0.5 * (hi - lo)};
    };
    QuadResult r;
    if (a == b) return r;
    std::priority_queue<Panel> heap;
    Panel first = eval(a, b);
    r.value = first.value;
    r.error = first.error;
    heap.push(first);
    for (int n = 1; n < max_panels; ++n) {
        if (r.error <= std::max(rel_tol * std::abs(r.value), abs_tol)) break;
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = eval(worst.a, mid), right = eval(mid, worst.b);
        r.value += left.value + right.value - worst.value;
        r.error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // recompute the sums to shed accumulated cancellation
    r.value = r.error = 0.0;
    while (!heap.empty()) {
        r.value += heap.top().value;
        r.error += heap.top().error;
        heap.pop();
    }
    return r;
}

/// Adaptive Gauss-Kronrod (15/31) on a finite interval, at most 100 * max_depth panels.
template <class F>
QuadResult gk(F&& f, double a, double b, double rel_tol, int max_depth = 30) {
    return gk_global(f, a, b, rel_tol, 0.0, 100 * max_depth);
}

/**
 * Integral over [a, b] split at a + w*4^k, k = 0, 1, ...
 *
 * Resolves integrands whose structure sits in a narrow layer of width w
 * next to a while the interval itself is long.
 */
template <class F>
QuadResult gk_graded(F&& f, double a, double b, double w, double rel_tol, int max_depth = 30) {
    QuadResult total;
    double lo = a;
    double width = w > 0.0 && w < (b - a) ? w : (b - a);
    while (lo < b) {
        double hi = std::min(b, a + width);
        if (b - hi < 1e-3 * (hi - a)) hi = b;
        QuadResult piece = gk(f, lo, hi, rel_tol, max_depth);
        total.value += piece.value;
        total.error += piece.error;
        lo = hi;
        width *= 4.0;
    }
    return total;
}

/// Throws ConvergenceError when the error estimate misses the target.
inline void require(const QuadResult& r, double rel_tol, double abs_floor, const char* what) {
    const double target = std::max(rel_tol * std::abs(r.value), abs_floor);
    if (!std::isfinite(r.value) || r.error > 100.0 * target)
        throw ConvergenceError(std::string(what) + ": quadrature did not converge",
                               r.error / std::max(std::abs(r.value), 1e-300));
}

} // namespace qce1d::detail
