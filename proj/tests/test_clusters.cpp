// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file test_clusters.cpp
 * @brief Closed-form two-cycle amplitudes.
 */

#include <doctest.h>

#include <qce1d/clusters.hpp>
#include <qce1d/error.hpp>
#include <qce1d/oracles.hpp>

#include <cmath>
#include <numbers>

using namespace qce1d;

namespace {

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

double free_pair(double s) { return -1.0 + erfcx(std::sqrt(s)); }

} // namespace

TEST_CASE("cluster geometry") {
    CHECK(ClusterGeometry(1, 1).nu() == 0.0);
    for (int n1 = 1; n1 <= 8; ++n1)
        for (int n2 = 1; n2 <= 8; ++n2) {
            const ClusterGeometry g(n1, n2);
            if (n1 + n2 > 2) CHECK(g.nu() > 0.0);
            CHECK(rel_close(g.nu() * g.nu() + 1.0, g.c(), 1e-15));
            CHECK(g.c() == 2.0 * n1 * n2 / double(n1 + n2));
        }
    CHECK_THROWS_AS(ClusterGeometry(0, 1), DomainError);
}

TEST_CASE("equal masses reduce to single-species quantities") {
    const MassPair mp(1.0, 1.0);
    CHECK(mp.prefactor() == 1.0);
    for (int ni = 1; ni <= 5; ++ni)
        for (int nj = 1; nj <= 5; ++nj) {
            const ClusterGeometry g(ni, nj);
            CHECK(mp.n_mod(ni, nj) == doctest::Approx(g.n()).epsilon(1e-15));
            CHECK(mp.nu_mod(ni, nj) == doctest::Approx(g.nu()).epsilon(1e-14));
            for (double s : {0.1, 1.0, 10.0})
                CHECK(rel_close(a_cluster_multispecies(ni, nj, mp, s), a_cluster(g, s, Statistics::Bose), 1e-14));
        }
}

TEST_CASE("unequal-mass prefactor") {
    const MassPair mp(1.0, 2.0);
    CHECK(rel_close(mp.prefactor(), std::sqrt(9.0 / 8.0), 1e-15));
    const double a = a_cluster_multispecies(1, 1, mp, 1.0);
    CHECK(std::isfinite(a));
    CHECK(mp.nu_mod(1, 1) == 0.0);
    CHECK(rel_close(a, std::sqrt(9.0 / 8.0) * free_pair(1.0), 1e-14));
}

TEST_CASE("pair of single cycles") {
    for (double s : {0.0, 1e-3, 0.5, 1.0, 20.0, 1e3}) {
        const auto t = a_terms(ClusterGeometry(1, 1), s);
        CHECK(t[0] == -1.0);
        CHECK(t[1] == 0.0);
        CHECK(t[3] == 0.0);
        CHECK(rel_close(t[2], erfcx(std::sqrt(s)), 1e-13));
        CHECK(std::abs(a_cluster(ClusterGeometry(1, 1), s, Statistics::Bose) - free_pair(s)) <= 1e-13);
    }
    CHECK(rel_close(a_cluster(ClusterGeometry(1, 1), 1.0, Statistics::Bose), -0.57241642384419299559, 1e-13));
}

TEST_CASE("reference amplitudes") {
    CHECK(rel_close(a_cluster(ClusterGeometry(2, 1), 1.0, Statistics::Bose), -0.5139657268, 1e-9));
    CHECK(rel_close(a_cluster(ClusterGeometry(3, 2), 1.0, Statistics::Bose), -0.3944733899, 1e-9));
    CHECK(rel_close(a_cluster(ClusterGeometry(3, 2), 0.1, Statistics::Bose), -0.1832876894, 1e-9));
}

TEST_CASE("amplitude vanishes without interaction") {
    for (int n1 = 1; n1 <= 6; ++n1)
        for (int n2 = 1; n2 <= 6; ++n2) {
            const auto t = a_terms(ClusterGeometry(n1, n2), 0.0);
            CHECK(std::abs(t[0] + t[1] + t[2] + t[3]) <= 1e-15);
            CHECK(std::abs(a_cluster(ClusterGeometry(n1, n2), 0.0, Statistics::Bose)) <= 1e-15);
        }
}

TEST_CASE("spinless fermions do not feel contact interactions") {
    for (int n1 = 1; n1 <= 5; ++n1)
        for (int n2 = 1; n2 <= 5; ++n2)
            for (double s : {0.0, 0.1, 10.0, 1e5}) CHECK(a_cluster(ClusterGeometry(n1, n2), s, Statistics::Fermi) == 0.0);
}

TEST_CASE("amplitude is decreasing in s and bounded below") {
    for (int n1 = 1; n1 <= 5; ++n1)
        for (int n2 = n1; n1 + n2 <= 10; ++n2) {
            const ClusterGeometry g(n1, n2);
            double prev = 0.0;
            for (double s = 1e-3; s <= 1e3; s *= 1.4) {
                const double a = a_cluster(g, s, Statistics::Bose);
                CHECK(a < prev);
                CHECK(a > -1.0);
                prev = a;
            }
        }
}

TEST_CASE("large-s asymptotics of the (2,1) amplitude") {
    const ClusterGeometry g(2, 1);
    const double nu = g.nu(), c = g.c();
    const double limit = (2.0 / std::numbers::pi) * (std::atan(nu) - nu / c) - 1.0;
    const double slope = (c + nu * nu) / (std::sqrt(std::numbers::pi) * std::pow(c, 1.5));
    for (double s : {1e4, 1e5, 1e6, 1e8}) {
        const double a = a_cluster(g, s, Statistics::Bose);
        CHECK(std::abs(a - limit - slope / std::sqrt(s)) <= 1.0 / s);
    }
}

TEST_CASE("fermionized amplitude relations") {
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= 4; ++n2)
            for (double s : {0.0, 0.5, 3.0, 100.0}) {
                const ClusterGeometry g(n1, n2);
                const auto a = a_terms(g, s);
                const auto f = a_terms_fermionized(g, s);
                CHECK(f[1] + a[1] == 0.0);
                CHECK(f[3] + a[3] == 0.0);
                CHECK(f[2] == a[2]);
            }
    const auto f = a_terms_fermionized(ClusterGeometry(1, 1), 2.0);
    CHECK(f[0] == 0.0);
    CHECK(rel_close(a_cluster_fermionized(ClusterGeometry(1, 1), 2.0), erfcx(std::sqrt(2.0)), 1e-13));
    const auto a22 = a_terms(ClusterGeometry(2, 2), 0.5);
    const auto f22 = a_terms_fermionized(ClusterGeometry(2, 2), 0.5);
    CHECK((f22[1] + f22[3]) * (a22[1] + a22[3]) < 0.0);
    CHECK(std::isfinite(a_cluster_fermionized(ClusterGeometry(2, 2), 0.5)));
}

TEST_CASE("fermionized amplitude vanishes at strong coupling") {
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= 4; ++n2) {
            const ClusterGeometry g(n1, n2);
            double prev = std::abs(a_cluster_fermionized(g, 1.0));
            for (double s : {1e2, 1e4, 1e6, 1e8}) {
                const double v = std::abs(a_cluster_fermionized(g, s));
                CHECK(v < prev);
                CHECK(v <= 1.0 / std::sqrt(s));
                prev = v;
            }
        }
}

TEST_CASE("closed form matches the triple integral") {
    for (double s : {0.1, 1.0, 10.0}) {
        const auto r = oracles::amplitude_quadrature(3, 2, s);
        CHECK(rel_close(a_cluster(ClusterGeometry(3, 2), s, Statistics::Bose), r.value, 1e-6));
    }
    const auto r11 = oracles::amplitude_quadrature(1, 1, 1.0);
    CHECK(std::abs(r11.value - free_pair(1.0)) <= 1e-7);
    CHECK(oracles::amplitude_quadrature(2, 3, 0.0).value == 0.0);
}

TEST_CASE("heavy partner acts as a static scatterer") {
    const double beta = 0.8;
    for (double M : {1.0, 3.0, 1e3, 1e6})
        for (double s : {0.2, 2.0}) {
            const MassPair mp(1.0, M);
            const double mu = mp.reduced();
            const double qce = std::pow(mp.n_mod(1, 1), -0.5) / mp.lambda_T(beta) *
                               a_cluster_multispecies(1, 1, mp, s);
            const double ref = std::sqrt(mp.total() / (4.0 * std::numbers::pi * beta)) *
                               oracles::static_scatterer_dZ(2.0 * std::sqrt(s / (beta * mu)), 1.0 / mu, beta);
            CHECK(rel_close(qce, ref, 1e-9));
        }
}
