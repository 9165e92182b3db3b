// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file model.hpp
 * @brief System description, confinement geometry and thermal scales.
 *
 * Units fix hbar^2/2m = 1 for the reference mass. Energies, lengths and
 * inverse temperatures are expressed in these units throughout the core.
 */

#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace qce1d {

enum class Statistics { Bose, Fermi };

/// +1 for bosons, -1 for fermions.
inline int sign(Statistics st) noexcept { return st == Statistics::Bose ? 1 : -1; }

std::string to_string(Statistics st);
Statistics statistics_from_string(const std::string& s);

enum class Shape {
    Ring,      ///< periodic ring of length L, no external potential
    PowerLaw,  ///< V(q) = k |q|^mu, harmonic for mu = 2
    Sampled    ///< user potential V(q), integrated numerically
};

/**
 * Homogeneous confinement of degree mu in D physical dimensions.
 *
 * Ring confinement is the unconfined case (mu -> infinity). For the
 * power-law family the stiffness k multiplies |q|^mu.
 */
struct Confinement {
    int D = 1;
    double mu = std::numeric_limits<double>::infinity();
    Shape shape = Shape::Ring;
    double length = 1.0;                   ///< ring length L
    double stiffness = 0.25;               ///< k in V = k|q|^mu
    std::function<double(double)> potential;  ///< sampled shape only
    double e0 = 1.0;                       ///< reference energy

    static Confinement ring(double L);
    /// V(q) = q^2/4, i.e. hbar*omega = 1 in units hbar^2/2m = 1.
    static Confinement harmonic(double hbar_omega = 1.0);
    static Confinement power_law(double mu, double k);
    static Confinement sampled(double mu, std::function<double(double)> V, double e0 = 1.0);
};

/// d = D(1 + 2/mu); D for unconfined rings.
double effective_dimension(const Confinement& conf);

/// V_eff = (4 pi/e0)^{D/mu} int dq exp(-V(q)/e0); L for rings.
double effective_volume(const Confinement& conf);

struct Species {
    int count = 1;
    Statistics statistics = Statistics::Bose;
    double mass_ratio = 1.0;  ///< m_i / m_ref
};

/**
 * Full system description.
 *
 * alpha is the single-species coupling. For several species alpha_pair
 * holds the symmetric matrix alpha_ij (row-major, size S*S); each entry is
 * the coupling of the relative coordinate of a pair, so that beta*alpha_ij
 * is the thermal coupling of that pair.
 */
struct SystemSpec {
    std::vector<Species> species{Species{}};
    Confinement confinement;
    double alpha = 0.0;
    std::vector<double> alpha_pair;

    int total_count() const;
    bool single_species() const { return species.size() == 1; }
    double coupling(std::size_t i, std::size_t j) const;
    void validate() const;

    static SystemSpec single(int N, Statistics st, Confinement conf, double alpha);
};

/// Copy of spec with the confinement rescaled so that its V_eff equals V.
SystemSpec with_effective_volume(const SystemSpec& spec, double V);

/// Inverse temperature and the derived scales.
struct ThermalPoint {
    double beta = 1.0;

    explicit ThermalPoint(double b);
    /// lambda_T = sqrt(4 pi beta).
    double lambda_T() const;
    /// Thermal wavelength of a particle with mass ratio m.
    double lambda_T(double mass_ratio) const;
    /// s = beta * alpha.
    double s(double alpha) const;
    /// x = V_eff / lambda_T^d.
    double x(double V_eff, double d) const;
};

} // namespace qce1d
