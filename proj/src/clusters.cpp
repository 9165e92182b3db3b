// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file clusters.cpp
 * @brief Closed-form cluster amplitudes for contact interactions.
 */

#include <qce1d/clusters.hpp>
#include <qce1d/error.hpp>

#include <cmath>
#include <numbers>

namespace qce1d {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

void check_s(double s) {
    if (!(s >= 0.0)) throw DomainError("thermal coupling s must be non-negative");
}

} // namespace

ClusterGeometry::ClusterGeometry(int a, int b) : n1(a), n2(b) {
    if (a < 1 || b < 1) throw DomainError("cycle lengths must be positive");
}

double ClusterGeometry::nu() const {
    return std::sqrt(static_cast<double>(2 * n1 * n2 - n1 - n2) / n());
}

double ClusterGeometry::c() const { return 2.0 * n1 * n2 / static_cast<double>(n()); }

MassPair::MassPair(double mi, double mj) : m_i(mi), m_j(mj) {
    if (!(mi > 0.0) || !(mj > 0.0)) throw DomainError("masses must be positive");
}

double MassPair::n_mod(int n_i, int n_j) const { return 2.0 * cluster_total(n_i, n_j) / total(); }

double MassPair::nu_mod(int n_i, int n_j) const {
    const double v = total() * n_i * n_j / cluster_total(n_i, n_j) - 1.0;
    return std::sqrt(std::max(v, 0.0));
}

double MassPair::lambda_T(double beta) const {
    return std::sqrt(2.0 * std::numbers::pi * beta / reduced());
}

double MassPair::prefactor() const { return std::sqrt(total() / (4.0 * reduced())); }

std::array<double, 4> a_terms_nu(double nu, double s, const Accuracy& acc) {
    check_s(s);
    using std::numbers::pi;
    const double c = 1.0 + nu * nu;
    const double rs = std::sqrt(s);
    const double a3 = (2.0 / kSqrtPi) * f_nu(nu, s, acc);
    return {(2.0 / pi) * std::atan(nu) - 1.0 + 2.0 * nu * nu * rs / std::sqrt(pi * c),
            -(2.0 / kSqrtPi) * nu * rs * erfcx(rs),
            a3,
            -2.0 * nu * nu * s * a3};
}

std::array<double, 4> a_terms(const ClusterGeometry& g, double s, const Accuracy& acc) {
    return a_terms_nu(g.nu(), s, acc);
}

double a_cluster(const ClusterGeometry& g, double s, Statistics st, const Accuracy& acc) {
    check_s(s);
    if (st == Statistics::Fermi || s == 0.0) return 0.0;
    const auto t = a_terms(g, s, acc);
    return (t[0] + t[1]) + (t[2] + t[3]);
}

std::array<double, 4> a_terms_fermionized_nu(double nu, double s, const Accuracy& acc) {
    const auto t = a_terms_nu(nu, s, acc);
    using std::numbers::pi;
    const double c = 1.0 + nu * nu;
    return {-(2.0 / pi) * nu / c - 2.0 * nu * nu * std::sqrt(s) / std::sqrt(pi * c),
            -t[1], t[2], -t[3]};
}

std::array<double, 4> a_terms_fermionized(const ClusterGeometry& g, double s, const Accuracy& acc) {
    return a_terms_fermionized_nu(g.nu(), s, acc);
}

double a_cluster_fermionized(const ClusterGeometry& g, double s, const Accuracy& acc) {
    const auto t = a_terms_fermionized(g, s, acc);
    return (t[0] + t[1]) + (t[2] + t[3]);
}

double a_cluster_multispecies(int n_i, int n_j, const MassPair& masses, double s,
                              const Accuracy& acc) {
    if (n_i < 1 || n_j < 1) throw DomainError("cycle lengths must be positive");
    const auto t = a_terms_nu(masses.nu_mod(n_i, n_j), s, acc);
    return masses.prefactor() * ((t[0] + t[1]) + (t[2] + t[3]));
}

} // namespace qce1d
