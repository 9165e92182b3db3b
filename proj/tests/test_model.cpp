// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file test_model.cpp
 * @brief Effective dimension, effective volume and thermal point checks.
 */

#include <doctest.h>

#include <qce1d/error.hpp>
#include <qce1d/model.hpp>

#include <cmath>
#include <numbers>

using namespace qce1d;

TEST_CASE("effective dimension of homogeneous confinements") {
    CHECK(effective_dimension(Confinement::harmonic()) == 2.0);
    CHECK(effective_dimension(Confinement::ring(3.0)) == 1.0);
    CHECK(effective_dimension(Confinement::power_law(4.0, 1.0)) == 1.5);
    double prev = effective_dimension(Confinement::power_law(0.5, 1.0));
    for (double mu = 1.0; mu < 1e4; mu *= 1.7) {
        const double d = effective_dimension(Confinement::power_law(mu, 1.0));
        CHECK(d < prev);
        CHECK(d > 1.0);
        prev = d;
    }
    CHECK_THROWS_AS(effective_dimension(Confinement::power_law(-1.0, 1.0)), DomainError);
}

TEST_CASE("ring volume is its length") {
    CHECK(effective_volume(Confinement::ring(7.0)) == 7.0);
    CHECK_THROWS_AS(effective_volume(Confinement::ring(0.0)), DomainError);
}

TEST_CASE("harmonic volume is independent of the reference energy") {
    const auto V = [](double q) { return 0.25 * q * q; };
    const double ref = effective_volume(Confinement::sampled(2.0, V, 1.0));
    CHECK(std::abs(ref - 4.0 * std::numbers::pi) <= 1e-10 * ref);
    CHECK(std::abs(effective_volume(Confinement::harmonic()) - ref) <= 1e-10 * ref);
    for (double e0 : {1e-3, 1e-1, 1e1, 1e3}) {
        const double v = effective_volume(Confinement::sampled(2.0, V, e0));
        CHECK(std::abs(v / ref - 1.0) <= 1e-10);
    }
}

TEST_CASE("quartic sampled volume matches the closed form") {
    const double k = 0.3;
    const double closed = effective_volume(Confinement::power_law(4.0, k));
    for (double e0 : {1e-2, 1.0, 1e2, 1e4}) {
        const double v = effective_volume(
            Confinement::sampled(4.0, [k](double q) { return k * q * q * q * q; }, e0));
        CHECK(std::abs(v / closed - 1.0) <= 1e-10);
    }
}

TEST_CASE("harmonic volume reproduces the high-temperature oscillator") {
    const double V = effective_volume(Confinement::harmonic());
    for (double beta : {0.05, 0.02, 0.01}) {
        const double x = ThermalPoint(beta).x(V, 2.0);
        const double exact = 1.0 / (2.0 * std::sinh(0.5 * beta));
        CHECK(std::abs(x / exact - 1.0) <= beta * beta);
    }
}

TEST_CASE("volume rescaling hits the requested value") {
    const auto spec = SystemSpec::single(3, Statistics::Bose, Confinement::harmonic(), 0.0);
    for (double V : {0.5, 3.0, 40.0})
        CHECK(std::abs(effective_volume(with_effective_volume(spec, V).confinement) / V - 1.0) <= 1e-13);
}

TEST_CASE("thermal point fields") {
    const ThermalPoint tp(0.7);
    CHECK(tp.lambda_T() * tp.lambda_T() == doctest::Approx(4.0 * std::numbers::pi * 0.7).epsilon(1e-15));
    CHECK(tp.s(0.0) == 0.0);
    CHECK(tp.s(2.0) == doctest::Approx(1.4));
    CHECK(tp.x(5.0, 1.0) == tp.x(5.0, 1.0));
    CHECK_THROWS_AS(ThermalPoint(0.0), DomainError);
    CHECK_THROWS_AS(tp.s(-1.0), DomainError);
}

TEST_CASE("system validation") {
    SystemSpec spec;
    spec.species = {Species{2, Statistics::Bose, 1.0}, Species{1, Statistics::Fermi, 2.0}};
    CHECK(spec.total_count() == 3);
    spec.alpha_pair = {0.0, 1.0, 2.0, 0.0};
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.alpha_pair = {0.0, 1.0, 1.0, 0.0};
    CHECK_NOTHROW(spec.validate());
    CHECK(spec.coupling(0, 1) == 1.0);
    CHECK_THROWS_AS(SystemSpec::single(0, Statistics::Bose, Confinement::ring(1.0), 0.0), DomainError);
    CHECK(statistics_from_string("fermi") == Statistics::Fermi);
    CHECK_THROWS_AS(statistics_from_string("anyon"), DomainError);
}
