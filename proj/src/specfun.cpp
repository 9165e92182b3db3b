// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file specfun.cpp
 * @brief erfcx, Owen's T and the cluster kernel F_nu(s).
 */

#include <qce1d/error.hpp>
#include <qce1d/specfun.hpp>

#include "quad.hpp"

#include <cmath>
#include <numbers>

namespace qce1d {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

/// Continued fraction 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), modified Lentz.
double erfcx_cf(double x) {
    const double tiny = 1e-300;
    double f = x;
    double C = x;
    double D = 0.0;
    for (int k = 1; k < 500; ++k) {
        const double a = 0.5 * k;
        D = x + a * D;
        if (D == 0.0) D = tiny;
        C = x + a / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        const double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return 1.0 / (kSqrtPi * f);
}

} // namespace

void Accuracy::validate() const {
    if (!(rel_tol > 1e-15 && rel_tol < 1e-3))
        throw DomainError("accuracy target must lie in (1e-15, 1e-3)");
    if (max_depth < 1) throw DomainError("max_depth must be positive");
}

double erfcx(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) {
        if (x < -26.6) return std::numeric_limits<double>::infinity();
        return 2.0 * std::exp(x * x) - erfcx(-x);
    }
    if (x < 3.0) return std::exp(x * x) * std::erfc(x);
    if (x > 1e7) {
        const double ix2 = 1.0 / (x * x);
        return (1.0 - 0.5 * ix2 + 0.75 * ix2 * ix2) / (kSqrtPi * x);
    }
    return erfcx_cf(x);
}

double owen_t(double h, double a, const Accuracy& acc) {
    acc.validate();
    if (!std::isfinite(h) || std::isnan(a)) throw DomainError("owen_t needs finite arguments");
    if (a == 0.0) return 0.0;
    if (a < 0.0) return -owen_t(h, -a, acc);
    const double h2 = 0.5 * h * h;
    if (h2 > 745.0) return 0.0;
    auto f = [h2](double t) { return std::exp(-h2 * t * t) / (1.0 + t * t); };
    const double w = std::min(a, 1.0 / std::max(std::abs(h), 1.0));
    auto r = detail::gk_graded(f, 0.0, a, w, acc.rel_tol * 1e-2, acc.max_depth);
    detail::require(r, acc.rel_tol, 0.0, "owen_t");
    return std::exp(-h2) * r.value / (2.0 * std::numbers::pi);
}

double f_nu(double nu, double s, const Accuracy& acc) {
    acc.validate();
    if (!(nu >= 0.0) || !(s >= 0.0)) throw DomainError("f_nu needs nu >= 0 and s >= 0");
    using std::numbers::pi;
    const double c = 1.0 + nu * nu;
    const double rs = std::sqrt(s);
    double tail;
    if (s == 0.0) {
        tail = 0.5 * pi - std::atan(nu);
    } else {
        // int_0^inf exp(-s t (2 nu + t)) / (1 + (nu + t)^2) dt with x = nu + t
        auto f = [nu, s](double t) { return std::exp(-s * t * (2.0 * nu + t)) / (1.0 + (nu + t) * (nu + t)); };
        const double T = -nu + std::sqrt(nu * nu + 46.0 / s);
        const double w = 1.0 / (2.0 * nu * s + rs + 1.0 / T);
        auto r = detail::gk_graded(f, 0.0, T, w, acc.rel_tol * 1e-2, acc.max_depth);
        detail::require(r, acc.rel_tol, 0.0, "f_nu tail");
        tail = r.value;
    }
    const double bracket = erfcx(std::sqrt(c * s)) - erfcx(nu * rs) * erfcx(rs) + (2.0 / pi) * tail;
    return 0.5 * kSqrtPi * bracket;
}

} // namespace qce1d
