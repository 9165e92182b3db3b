// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file laplace.cpp
 * @brief Complex scaled complementary error function and numerical Laplace pairs.
 */

#include <qce1d/error.hpp>
#include <qce1d/oracles.hpp>

#include "../quad.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <array>
#include <cmath>
#include <numbers>

namespace qce1d::oracles {

namespace {

using cd = std::complex<double>;

constexpr int kWeidemanN = 32;

struct Weideman {
    double L = 0.0;
    std::array<double, kWeidemanN> a{};  ///< p(Z) = sum_n a[n] Z^n

    Weideman() {
        const int N = kWeidemanN, M = 2 * N;
        L = std::sqrt(N / std::numbers::sqrt2);
        std::vector<double> f(2 * M, 0.0);  // samples at k = -M+1 .. M-1, f(-M) = 0
        for (int k = -M + 1; k < M; ++k) {
            const double t = L * std::tan(0.5 * k * std::numbers::pi / M);
            f[k + M] = std::exp(-t * t) * (L * L + t * t);
        }
        for (int n = 1; n <= N; ++n) {
            double s = 0.0;
            for (int k = -M + 1; k < M; ++k) s += f[k + M] * std::cos(std::numbers::pi * n * k / M);
            a[n - 1] = s / (2.0 * M);
        }
    }
};

const Weideman& weideman() {
    static const Weideman w;
    return w;
}

/// Faddeeva w(z) for Im z >= 0.
cd faddeeva_upper(cd z) {
    const auto& W = weideman();
    const cd i(0.0, 1.0);
    const cd den = W.L - i * z;
    const cd Z = (W.L + i * z) / den;
    cd p = 0.0;
    for (int n = kWeidemanN - 1; n >= 0; --n) p = p * Z + W.a[n];
    return 2.0 * p / (den * den) + 1.0 / (std::sqrt(std::numbers::pi) * den);
}

/// int_0^inf exp(-c z^2) erfcx(r + nu z) dz for Re r >= 0.
cd f_integral(double nu, cd r) {
    const double c = 1.0 + nu * nu;
    const double cut = std::sqrt(40.0 / c);
    auto part = [&](bool imag) {
        auto g = [&](double z) {
            const cd v = std::exp(-c * z * z) * erfcx_complex(r + nu * z);
            return imag ? v.imag() : v.real();
        };
        return detail::gk(g, 0.0, cut, 1e-13).value;
    };
    return {part(false), part(true)};
}

} // namespace

cd erfcx_complex(cd z) {
    if (z.real() < 0.0) throw DomainError("erfcx_complex needs Re z >= 0");
    // erfcx(z) = w(i z), and Re z >= 0 places i z in the upper half plane
    return faddeeva_upper(cd(-z.imag(), z.real()));
}

double numeric_inverse_laplace(const std::function<cd(cd)>& F, double eps, double rel_tol) {
    if (!(eps > 0.0)) throw DomainError("inverse Laplace needs eps > 0");
    auto talbot = [&](int M) {
        const double r = 2.0 * M / (5.0 * eps);
        double sum = 0.5 * std::exp(r * eps) * F(cd(r, 0.0)).real();
        for (int k = 1; k < M; ++k) {
            const double th = k * std::numbers::pi / M;
            const double cot = 1.0 / std::tan(th);
            const cd s = r * th * cd(cot, 1.0);
            const double sigma = th + (th * cot - 1.0) * cot;
            sum += (std::exp(eps * s) * F(s) * cd(1.0, sigma)).real();
        }
        return r / M * sum;
    };
    double prev = talbot(8);
    double best_diff = HUGE_VAL;
    for (int M = 16; M <= 64; M *= 2) {
        const double cur = talbot(M);
        const double diff = std::abs(cur - prev);
        if (diff <= rel_tol * std::abs(cur)) return cur;
        best_diff = std::min(best_diff, diff / std::max(std::abs(cur), 1e-300));
        prev = cur;
    }
    throw ConvergenceError("fixed Talbot inversion did not settle", best_diff);
}

double numeric_laplace(const std::function<double(double)>& f, double s, double rel_tol) {
    if (!(s > 0.0)) throw DomainError("Laplace transform needs s > 0");
    boost::math::quadrature::exp_sinh<double> integrator;
    double err = 0.0, l1 = 0.0;
    const double v = integrator.integrate([&](double e) { return std::exp(-s * e) * f(e); },
                                          std::min(rel_tol, 1e-10), &err, &l1);
    if (!std::isfinite(v) || err > rel_tol * std::max(std::abs(v), 1e-300) * 100.0)
        throw ConvergenceError("Laplace quadrature did not converge", err / std::max(std::abs(v), 1e-300));
    return v;
}

cd amplitude_term_complex(int j, double nu, cd s) {
    if (j < 1 || j > 4) throw DomainError("amplitude term index must lie in 1..4");
    const double c = 1.0 + nu * nu;
    const cd rs = std::sqrt(s);
    const double pi = std::numbers::pi;
    switch (j) {
    case 1:
        return 2.0 / pi * std::atan(nu) - 1.0 + 2.0 * nu * nu * rs / std::sqrt(pi * c);
    case 2:
        return -2.0 / std::sqrt(pi) * nu * rs * erfcx_complex(rs);
    case 3:
        return 2.0 / std::sqrt(pi) * f_integral(nu, rs);
    default:
        return -2.0 * nu * nu * s * 2.0 / std::sqrt(pi) * f_integral(nu, rs);
    }
}

} // namespace qce1d::oracles
