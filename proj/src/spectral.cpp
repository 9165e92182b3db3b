// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spectral.cpp
 * @brief Closed-form inverse transforms b_j, coefficients g_l and the shift model.
 *
 * The closed forms of b2 and b3 carry a factor (1 + c/eps)^{l/2} that multiplies
 * a cancelling bracket. Where that factor is large the same functions are
 * evaluated from their fractional-integral representation
 *   b^{(m)}(eps) = eps^{-m/2}/Gamma(p+1) int_0^eps (eps - x)^p rho(x) dx.
 */

#include <qce1d/error.hpp>
#include <qce1d/spectral.hpp>

#include "quad.hpp"

#include <cmath>
#include <numbers>

namespace qce1d {

namespace {

using std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kAmplification = 1e3;

double gamma_half(int m) { return std::tgamma(0.5 * m + 1.0); }

/**
 * eps^{-m/2} int_0^eps (eps - x)^p rho(x) dx.
 *
 * [0, eps/2] uses x = eps u^2 and [eps/2, eps] uses x = eps(1 - v^2), which
 * remove the x^{-1/2} and (eps - x)^p end-point behaviour.
 */
template <class Rho>
double fractional_integral(int m, double p, double eps, Rho&& rho_sqrtx) {
    // rho_sqrtx(x) returns sqrt(x) * rho(x), regular at x = 0
    const double scale = std::pow(eps, p - 0.5 * m);
    auto left = [&](double u) {
        const double x = eps * u * u;
        return 2.0 * std::sqrt(eps) * std::pow(1.0 - u * u, p) * rho_sqrtx(x);
    };
    auto right = [&](double v) {
        const double x = eps * (1.0 - v * v);
        return 2.0 * std::pow(v, 2.0 * p + 1.0) * eps * rho_sqrtx(x) / std::sqrt(x);
    };
    const double tol = 1e-14;
    auto r1 = detail::gk(left, 0.0, std::sqrt(0.5), tol);
    auto r2 = detail::gk(right, 0.0, std::sqrt(0.5), tol);
    return scale * (r1.value + r2.value);
}

double b2_closed(int l, double nu, double eps) {
    const double L = 0.5 * l;
    const double h = (l % 2) ? (2.0 / pi) * std::atan(std::sqrt(eps)) : 1.0;
    const double q = 1.0 + 1.0 / eps;
    double r = -(2.0 * nu / kSqrtPi) * std::pow(q, L - 0.5) / (std::tgamma(L + 0.5) * std::sqrt(eps)) * h;
    for (int k = 1; k <= l / 2; ++k)
        r += (2.0 * nu / pi) * std::tgamma(L - k + 0.5) /
             (std::tgamma(L - k + 1.0) * std::tgamma(L + 0.5)) * std::pow(q, k - 1) / eps;
    return r;
}

double b2_fractional(int l, double nu, double eps) {
    const double p = 0.5 * (l - 1);
    auto rho = [](double x) { return 1.0 / (pi * (1.0 + x)); };
    return -(2.0 * nu / kSqrtPi) / std::tgamma(p + 1.0) * fractional_integral(l, p, eps, rho);
}

bool b2_use_fractional(int l, double eps) {
    return std::pow(1.0 + 1.0 / eps, 0.5 * l) > kAmplification;
}

double t_branch(int l, double nu, double eps) {
    const double c = 1.0 + nu * nu;
    if (l % 2) {
        if (nu == 0.0) return 1.0;
        return (2.0 / pi) * std::atan(std::sqrt(1.0 + c / eps) / nu);
    }
    return (2.0 / pi) * (std::atan(std::sqrt(eps / c)) + std::atan(nu / std::sqrt(1.0 + eps)) - std::atan(nu));
}

double b3_closed(int l, double nu, double eps) {
    const double c = 1.0 + nu * nu;
    const int odd = (l % 2 != 0);
    const double lam = 0.5 * odd;
    const double L = 0.5 * l;
    const double q = 1.0 + c / eps;
    const int kmax = static_cast<int>(std::ceil(L));
    double S = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        const int idx = 2 * k - odd;
        const double b2v = nu == 0.0 ? 0.0 : b2(idx, nu, eps);
        S += std::tgamma(k - lam) * std::pow(q, lam - k) *
             (0.5 * kSqrtPi * b2v + std::sqrt(c) / (std::tgamma(k - lam + 0.5) * std::sqrt(eps)));
    }
    return std::pow(q, L) / std::tgamma(L + 1.0) * (t_branch(l, nu, eps) - S / kSqrtPi);
}

double b3_fractional(int l, double nu, double eps) {
    const double c = 1.0 + nu * nu;
    const double p = 0.5 * l;
    auto rho = [c, nu](double x) {
        return (std::sqrt(c) - nu * std::sqrt(x / (1.0 + x))) / (pi * (x + c));
    };
    return fractional_integral(l, p, eps, rho) / std::tgamma(p + 1.0);
}

bool b3_use_fractional(int l, double nu, double eps) {
    return std::pow(1.0 + (1.0 + nu * nu) / eps, 0.5 * l) > kAmplification;
}

struct Branch {
    bool frac2 = false;
    bool frac3 = false;
    bool frac3_shift = false;  ///< branch for b3^{(m-2)} inside b4
    bool joint14 = false;      ///< b1 tail and b4 evaluated as one integral
};

Branch choose_branch(int m, double nu, double eps) {
    const double c = 1.0 + nu * nu;
    const double tail = 2.0 * nu * nu / std::sqrt(pi * c) / (std::tgamma(0.5 * m + 0.5) * std::sqrt(eps));
    return {m >= 1 && b2_use_fractional(m, eps), b3_use_fractional(m, nu, eps),
            b3_use_fractional(m - 2, nu, eps), nu != 0.0 && tail > kAmplification};
}

/**
 * Tail of b1 plus b4, i.e. (2 nu^2/eps) [sqrt(eps)/(sqrt(pi c) Gamma(m/2+1/2)) - b3^{(m-2)}],
 * written as 2 nu^2/Gamma(k/2+1) int_0^1 (1-t)^{k/2} rho(eps t) dt with k = m-2 and the
 * regular density rho(x) = [sqrt(x/c) + nu/sqrt(1+x)] / (pi (x + c)).
 */
double tail_plus_b4(int m, double nu, double eps) {
    const double c = 1.0 + nu * nu;
    const double p = 0.5 * (m - 2);
    auto rho = [c, nu, eps](double t) {
        const double x = eps * t;
        return (std::sqrt(x / c) + nu / std::sqrt(1.0 + x)) / (pi * (x + c));
    };
    // t = u^2 on [0, 1/2] and t = 1 - v^2 on [1/2, 1]
    auto left = [&](double u) { return 2.0 * u * std::pow(1.0 - u * u, p) * rho(u * u); };
    auto right = [&](double v) { return 2.0 * std::pow(v, 2.0 * p + 1.0) * rho(1.0 - v * v); };
    const double tol = 1e-14;
    const double I = detail::gk(left, 0.0, std::sqrt(0.5), tol).value + detail::gk(right, 0.0, std::sqrt(0.5), tol).value;
    return 2.0 * nu * nu * I / std::tgamma(p + 1.0);
}

double b1_value(int m, double nu, double eps, Regime regime) {
    const double c = 1.0 + nu * nu;
    const double tail = 2.0 * nu * nu / std::sqrt(pi * c) / (std::tgamma(0.5 * m + 0.5) * std::sqrt(eps));
    if (regime == Regime::Direct)
        return ((2.0 / pi) * std::atan(nu) - 1.0) / std::tgamma(0.5 * m + 1.0) + tail;
    return -(2.0 / pi) * (nu / c) / std::tgamma(0.5 * m + 1.0) - tail;
}

std::array<double, 4> b_terms_branch(int m, double nu, double eps, Regime regime, const Branch& br) {
    if (!(eps > 0.0)) return {0.0, 0.0, 0.0, 0.0};
    const double v1 = b1_value(m, nu, eps, regime);
    double v2 = 0.0, v4 = 0.0;
    if (nu != 0.0) {
        v2 = br.frac2 ? b2_fractional(m, nu, eps) : b2_closed(m, nu, eps);
        const double b3s = br.frac3_shift ? b3_fractional(m - 2, nu, eps) : b3_closed(m - 2, nu, eps);
        v4 = -2.0 * nu * nu / eps * b3s;
    }
    const double v3 = br.frac3 ? b3_fractional(m, nu, eps) : b3_closed(m, nu, eps);
    if (regime == Regime::Fermionized) return {v1, -v2, v3, -v4};
    return {v1, v2, v3, v4};
}

int integer_order(int l, double d) {
    const double m = l * d;
    const double r = std::round(m);
    if (std::abs(m - r) > 1e-12) throw DomainError("l*d must be an integer for spectral coefficients");
    return static_cast<int>(r);
}

/// sum over cluster geometries of n^{-d/2} z_{l-1}^{(N-n)} sum_j b_j at one branch policy.
template <class BranchFn>
double g_sum(int N, int l, Statistics st, Regime regime, double eps, double d, BranchFn&& branch) {
    if (N < 1 || l < 1 || l > N) throw DomainError("g_l needs 1 <= l <= N");
    if (regime == Regime::Fermionized && st != Statistics::Bose)
        throw DomainError("the fermionized regime applies to bosons");
    if (regime == Regime::Direct && st == Statistics::Fermi) return 0.0;
    if (!(eps > 0.0)) return 0.0;
    const int m = integer_order(l, d);
    const Statistics zst = regime == Regime::Direct ? Statistics::Bose : Statistics::Fermi;
    double total = 0.0;
    for (int n = 2; n <= N - l + 1; ++n) {
        const double z = z_coeff(N - n, l - 1, d, zst);
        if (z == 0.0) continue;
        const double pm = (regime == Regime::Fermionized && n % 2) ? -1.0 : 1.0;
        double inner = 0.0;
        for (int n1 = 1; n1 < n; ++n1) {
            const double nu = std::sqrt(static_cast<double>(2 * n1 * (n - n1) - n) / n);
            const Branch br = branch(m, nu);
            const auto b = b_terms_branch(m, nu, eps, regime, br);
            if (br.joint14) {
                const double t14 = tail_plus_b4(m, nu, eps);
                const double b1c = regime == Regime::Direct
                                       ? ((2.0 / pi) * std::atan(nu) - 1.0) / gamma_half(m)
                                       : -(2.0 / pi) * (nu / (1.0 + nu * nu)) / gamma_half(m);
                inner += (b1c + b[1]) + (b[2] + (regime == Regime::Direct ? t14 : -t14));
            } else {
                inner += (b[0] + b[1]) + (b[2] + b[3]);
            }
        }
        total += pm * std::pow(static_cast<double>(n), -0.5 * d) * z * inner;
    }
    return total;
}

} // namespace

double b1(int l, double nu, double eps) {
    if (l < 0) throw DomainError("b1 needs l >= 0");
    if (!(eps > 0.0)) return 0.0;
    return b1_value(l, nu, eps, Regime::Direct);
}

double b2(int l, double nu, double eps) {
    if (l < 1) throw DomainError("b2 needs l >= 1");
    if (!(eps > 0.0) || nu == 0.0) return 0.0;
    return b2_use_fractional(l, eps) ? b2_fractional(l, nu, eps) : b2_closed(l, nu, eps);
}

double b3(int l, double nu, double eps) {
    if (l < -1) throw DomainError("b3 needs l >= -1");
    if (!(eps > 0.0)) return 0.0;
    return b3_use_fractional(l, nu, eps) ? b3_fractional(l, nu, eps) : b3_closed(l, nu, eps);
}

double b4(int l, double nu, double eps) {
    if (l < 1) throw DomainError("b4 needs l >= 1");
    if (!(eps > 0.0) || nu == 0.0) return 0.0;
    return -2.0 * nu * nu / eps * b3(l - 2, nu, eps);
}

std::array<double, 4> b_terms(int l, double nu, double eps, Regime regime) {
    if (l < 1) throw DomainError("b_terms needs l >= 1");
    return b_terms_branch(l, nu, eps, regime, choose_branch(l, nu, eps));
}

double g_l(int N, int l, Statistics st, Regime regime, double eps, double d) {
    return g_sum(N, l, st, regime, eps, d, [eps](int m, double nu) { return choose_branch(m, nu, eps); });
}

double f_l(int N, int l, Statistics st, Regime regime, double eps, double d) {
    if (!(eps > 0.0)) return 0.0;
    const int m = integer_order(l, d);
    // the branch is frozen at eps so that the difference quotient sees one formula
    auto frozen = [eps](int mm, double nu) { return choose_branch(mm, nu, eps); };
    auto g = [&](double e) { return g_sum(N, l, st, regime, e, d, frozen); };
    const double h = eps * 1e-3;
    auto D = [&](double hh) { return (g(eps + hh) - g(eps - hh)) / (2.0 * hh); };
    const double D1 = D(h), D2 = D(0.5 * h), D3 = D(0.25 * h);
    const double R1 = (4.0 * D2 - D1) / 3.0, R2 = (4.0 * D3 - D2) / 3.0;
    const double deriv = (16.0 * R2 - R1) / 15.0;
    return 0.5 * m * g(eps) + eps * deriv;
}

double counting_function_free(const SystemSpec& spec, double E) {
    if (!spec.single_species()) throw DomainError("counting function needs one species");
    if (!(E > 0.0)) return 0.0;
    const double d = effective_dimension(spec.confinement);
    const double V = effective_volume(spec.confinement);
    const auto& sp = spec.species[0];
    const auto z = nonint_coefficients(sp.count, d, sp.statistics);
    const double Et = E * std::pow(V, 2.0 / d) / (4.0 * pi);
    double sum = 0.0;
    for (int l = sp.count; l >= 1; --l)
        sum += (*z)[l] / std::tgamma(0.5 * l * d + 1.0) * std::pow(Et, 0.5 * l * d);
    return sum;
}

double counting_function(const SystemSpec& spec, double E, Regime regime) {
    spec.validate();
    if (!spec.single_species()) throw DomainError("counting function needs one species");
    if (!(E > 0.0)) return 0.0;
    const auto& sp = spec.species[0];
    if (spec.alpha == 0.0 && regime == Regime::Direct) return counting_function_free(spec, E);
    const double d = effective_dimension(spec.confinement);
    const double V = effective_volume(spec.confinement);
    const Statistics zst = regime == Regime::Direct ? sp.statistics : Statistics::Fermi;
    const auto z = nonint_coefficients(sp.count, d, zst);
    const double Et = E * std::pow(V, 2.0 / d) / (4.0 * pi);
    const double eps = spec.alpha > 0.0 ? E / spec.alpha : std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int l = sp.count; l >= 1; --l) {
        const int m = integer_order(l, d);
        double coef = (*z)[l] / gamma_half(m);
        if (std::isfinite(eps)) coef += g_l(sp.count, l, sp.statistics, regime, eps, d);
        sum += coef * std::pow(Et, 0.5 * m);
    }
    return sum;
}

double dos(const SystemSpec& spec, double E, Regime regime) {
    spec.validate();
    if (!spec.single_species()) throw DomainError("density of states needs one species");
    if (!(E > 0.0)) return 0.0;
    const auto& sp = spec.species[0];
    const double d = effective_dimension(spec.confinement);
    const double V = effective_volume(spec.confinement);
    const Statistics zst = regime == Regime::Direct ? sp.statistics : Statistics::Fermi;
    const auto z = nonint_coefficients(sp.count, d, zst);
    const double k = std::pow(V, 2.0 / d) / (4.0 * pi);
    const bool interacting = spec.alpha > 0.0 || regime == Regime::Fermionized;
    const double eps = spec.alpha > 0.0 ? E / spec.alpha : std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int l = sp.count; l >= 1; --l) {
        const int m = integer_order(l, d);
        double coef = (*z)[l] / std::tgamma(0.5 * m);
        if (interacting && std::isfinite(eps)) coef += f_l(sp.count, l, sp.statistics, regime, eps, d);
        sum += coef * std::pow(k, 0.5 * m) * std::pow(E, 0.5 * m - 1.0);
    }
    return sum;
}

double ShiftModel::chi(double eps) const {
    const int m = integer_order(N - 1, d);
    const double zN1 = c[N - 1] * gamma_half(m);
    if (zN1 == 0.0) throw DomainError("z_{N-1} vanishes; shift fraction undefined");
    return -gamma_half(m) * g_l(N, N - 1, Statistics::Bose, Regime::Direct, eps, d) / (2.0 * zN1);
}

double ShiftModel::free_counting_scaled(double Et) const {
    if (!(Et > 0.0)) return 0.0;
    double sum = 0.0;
    for (int l = N; l >= 1; --l) sum += c[l] * std::pow(Et, 0.5 * l * d);
    return sum;
}

double ShiftModel::full_shift_scaled(double Et) const {
    const double expo = (2.0 / d - 1.0) / N;
    if (expo == 0.0) return a_tilde;
    return a_tilde * std::pow(free_counting_scaled(Et), expo);
}

ShiftModel shift_model(int N, double d, Statistics st) {
    if (N < 2) throw DomainError("shift model needs N >= 2");
    if (st != Statistics::Bose) throw DomainError("shift model is defined for bosons");
    ShiftModel model;
    model.N = N;
    model.d = d;
    const auto z = nonint_coefficients(N, d, st);
    model.c.assign(N + 1, 0.0);
    for (int l = 1; l <= N; ++l) model.c[l] = (*z)[l] / std::tgamma(0.5 * l * d + 1.0);
    if (model.c[N - 1] == 0.0) throw DomainError("z_{N-1} vanishes; shift undefined");
    const double expo = (2.0 / d - 1.0) / N;
    model.a_tilde = 2.0 * model.c[N - 1] / (0.5 * N * d * std::pow(model.c[N], 1.0 + expo));
    if (d == 2.0 && z->exact) {
        const auto& ex = *z->exact;
        // d = 2: c_l = z_l / l!, a~ = 2 c_{N-1} / (N c_N), all rational
        const Rational cN1 = ex[N - 1].rational_part() / Rational(factorial(N - 1));
        const Rational cN = ex[N].rational_part() / Rational(factorial(N));
        model.a_tilde_exact = Rational(2) * cN1 / (Rational(N) * cN);
        model.a_tilde = model.a_tilde_exact->convert_to<double>();
    }
    return model;
}

double full_shift(const ShiftModel& model, const SystemSpec& spec, double E) {
    const double V = effective_volume(spec.confinement);
    const double k = std::pow(V, 2.0 / model.d) / (4.0 * pi);
    return model.full_shift_scaled(E * k) / k;
}

double shifted_counting(const ShiftModel& model, const SystemSpec& spec, double E, ShiftBase base) {
    if (!(E > 0.0)) return 0.0;
    const double chi = spec.alpha > 0.0 ? model.chi(E / spec.alpha) : 0.0;
    const double Es = E - chi * full_shift(model, spec, E);
    if (base == ShiftBase::Free) return counting_function_free(spec, Es);
    return counting_function(spec, Es, Regime::Direct);
}

} // namespace qce1d
