// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file specfun.hpp
 * @brief Scaled complementary error function, Owen's T and the cluster kernel F.
 */

#pragma once

namespace qce1d {

/// Quadrature accuracy request.
struct Accuracy {
    double rel_tol = 1e-12;
    int max_depth = 30;

    void validate() const;
};

/// erfcx(x) = exp(x^2) erfc(x) for x >= 0; overflow free.
double erfcx(double x);

/// T(h, a) = (1/2pi) int_0^a exp(-h^2 (1+t^2)/2)/(1+t^2) dt, odd in a.
double owen_t(double h, double a, const Accuracy& acc = {});

/**
 * Cluster kernel F_nu(s) = int_0^inf exp(-(1+nu^2) z^2) erfcx(sqrt(s) + nu z) dz.
 *
 * Evaluated as (sqrt(pi)/2) [erfcx(sqrt(c s)) - erfcx(nu sqrt(s)) erfcx(sqrt(s))
 * + (2/pi) int_nu^inf exp(-s(x^2 - nu^2))/(1+x^2) dx] with c = 1 + nu^2.
 */
double f_nu(double nu, double s, const Accuracy& acc = {});

} // namespace qce1d
