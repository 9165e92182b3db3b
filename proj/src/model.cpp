// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file model.cpp
 * @brief Effective dimension, effective volume and system validation.
 */

#include <qce1d/error.hpp>
#include <qce1d/model.hpp>

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <numbers>

namespace qce1d {

std::string to_string(Statistics st) { return st == Statistics::Bose ? "bose" : "fermi"; }

Statistics statistics_from_string(const std::string& s) {
    if (s == "bose" || s == "Bose" || s == "b") return Statistics::Bose;
    if (s == "fermi" || s == "Fermi" || s == "f") return Statistics::Fermi;
    throw DomainError("unknown statistics '" + s + "'");
}

Confinement Confinement::ring(double L) {
    Confinement c;
    c.shape = Shape::Ring;
    c.length = L;
    return c;
}

Confinement Confinement::harmonic(double hbar_omega) {
    return power_law(2.0, 0.25 * hbar_omega * hbar_omega);
}

Confinement Confinement::power_law(double mu, double k) {
    Confinement c;
    c.shape = Shape::PowerLaw;
    c.mu = mu;
    c.stiffness = k;
    return c;
}

Confinement Confinement::sampled(double mu, std::function<double(double)> V, double e0) {
    Confinement c;
    c.shape = Shape::Sampled;
    c.mu = mu;
    c.potential = std::move(V);
    c.e0 = e0;
    return c;
}

double effective_dimension(const Confinement& conf) {
    if (conf.D < 1) throw DomainError("physical dimension must be positive");
    if (conf.shape == Shape::Ring || std::isinf(conf.mu)) return conf.D;
    if (!(conf.mu > 0.0)) throw DomainError("homogeneity degree mu must be positive");
    return conf.D * (1.0 + 2.0 / conf.mu);
}

double effective_volume(const Confinement& conf) {
    using std::numbers::pi;
    if (conf.D != 1) throw DomainError("only D = 1 confinement is supported");
    switch (conf.shape) {
    case Shape::Ring:
        if (!(conf.length > 0.0)) throw DomainError("ring length must be positive");
        return conf.length;
    case Shape::PowerLaw: {
        if (!(conf.mu > 0.0) || std::isinf(conf.mu))
            throw DomainError("power-law confinement needs finite mu > 0");
        if (!(conf.stiffness > 0.0)) throw DomainError("stiffness must be positive");
        // int exp(-k|q|^mu/e0) dq = 2 Gamma(1+1/mu) (e0/k)^{1/mu}
        return 2.0 * std::tgamma(1.0 + 1.0 / conf.mu) *
               std::pow(4.0 * pi / conf.stiffness, 1.0 / conf.mu);
    }
    case Shape::Sampled: {
        if (!conf.potential) throw DomainError("sampled confinement without potential");
        if (!(conf.mu > 0.0) || std::isinf(conf.mu))
            throw DomainError("sampled confinement needs finite mu > 0");
        const double e0 = conf.e0;
        const auto& V = conf.potential;
        const double far = 1e6;
        if (std::exp(-V(far) / e0) > 1e-12 || std::exp(-V(-far) / e0) > 1e-12)
            throw DomainError("potential is not confining: Boltzmann weight does not decay");
        boost::math::quadrature::exp_sinh<double> integrator;
        double err_p = 0.0, err_m = 0.0, l1 = 0.0;
        double plus = integrator.integrate([&](double q) { return std::exp(-V(q) / e0); },
                                           1e-10, &err_p, &l1);
        double minus = integrator.integrate([&](double q) { return std::exp(-V(-q) / e0); },
                                            1e-10, &err_m, &l1);
        double total = plus + minus;
        if (!std::isfinite(total) || err_p + err_m > 1e-8 * std::abs(total))
            throw DomainError("divergent or unconverged effective-volume quadrature");
        return std::pow(4.0 * pi / e0, 1.0 / conf.mu) * total;
    }
    }
    throw DomainError("unknown confinement shape");
}

int SystemSpec::total_count() const {
    int n = 0;
    for (const auto& sp : species) n += sp.count;
    return n;
}

double SystemSpec::coupling(std::size_t i, std::size_t j) const {
    if (alpha_pair.empty()) return alpha;
    const std::size_t S = species.size();
    return alpha_pair.at(i * S + j);
}

void SystemSpec::validate() const {
    if (species.empty()) throw DomainError("species list is empty");
    for (const auto& sp : species) {
        if (sp.count < 1) throw DomainError("species count must be positive");
        if (!(sp.mass_ratio > 0.0)) throw DomainError("mass ratio must be positive");
    }
    if (!(alpha >= 0.0)) throw DomainError("interaction strength must be non-negative");
    if (!alpha_pair.empty()) {
        const std::size_t S = species.size();
        if (alpha_pair.size() != S * S) throw DomainError("alpha_pair must be S x S");
        for (std::size_t i = 0; i < S; ++i)
            for (std::size_t j = 0; j < S; ++j) {
                if (!(alpha_pair[i * S + j] >= 0.0))
                    throw DomainError("pair coupling must be non-negative");
                if (alpha_pair[i * S + j] != alpha_pair[j * S + i])
                    throw DomainError("pair coupling matrix must be symmetric");
            }
    }
}

SystemSpec SystemSpec::single(int N, Statistics st, Confinement conf, double alpha) {
    SystemSpec spec;
    spec.species = {Species{N, st, 1.0}};
    spec.confinement = std::move(conf);
    spec.alpha = alpha;
    spec.validate();
    return spec;
}

SystemSpec with_effective_volume(const SystemSpec& spec, double V) {
    if (!(V > 0.0)) throw DomainError("effective volume must be positive");
    SystemSpec out = spec;
    auto& c = out.confinement;
    const double V0 = effective_volume(c);
    switch (c.shape) {
    case Shape::Ring:
        c.length = V;
        break;
    case Shape::PowerLaw:
        // V_eff scales as k^{-1/mu}
        c.stiffness *= std::pow(V0 / V, c.mu);
        break;
    case Shape::Sampled: {
        const double lam = V / V0;
        auto Vq = c.potential;
        c.potential = [Vq, lam](double q) { return Vq(q / lam); };
        break;
    }
    }
    return out;
}

ThermalPoint::ThermalPoint(double b) : beta(b) {
    if (!(b > 0.0)) throw DomainError("beta must be positive");
}

double ThermalPoint::lambda_T() const { return std::sqrt(4.0 * std::numbers::pi * beta); }

double ThermalPoint::lambda_T(double mass_ratio) const {
    return std::sqrt(4.0 * std::numbers::pi * beta / mass_ratio);
}

double ThermalPoint::s(double alpha) const {
    if (!(alpha >= 0.0)) throw DomainError("interaction strength must be non-negative");
    return beta * alpha;
}

double ThermalPoint::x(double V_eff, double d) const { return V_eff / std::pow(lambda_T(), d); }

} // namespace qce1d
