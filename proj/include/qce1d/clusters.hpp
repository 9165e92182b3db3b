// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file clusters.hpp
 * @brief Dimensionless interacting cluster amplitudes for contact interactions.
 *
 * A cluster joins a cycle of length n1 and a cycle of length n2 by one
 * interaction. Its amplitude is A = (V_eff/lambda_T^d) n^{-d/2} a(s) with
 * n = n1 + n2 and s = beta*alpha; this module returns the internal part a(s).
 */

#pragma once

#include <qce1d/model.hpp>
#include <qce1d/specfun.hpp>

#include <array>

namespace qce1d {

struct ClusterGeometry {
    int n1 = 1;
    int n2 = 1;

    ClusterGeometry(int a, int b);
    int n() const { return n1 + n2; }
    /// nu = sqrt((2 n1 n2 - n1 - n2)/n).
    double nu() const;
    /// 1 + nu^2 = 2 n1 n2 / n.
    double c() const;
};

/**
 * Two particle species joined in one cluster, masses relative to m_ref.
 *
 * Holds the reduced mass mu, pair mass M, cluster mass m_tot = n_i m_i + n_j m_j
 * and the modified cycle length n~ and geometry nu~.
 */
struct MassPair {
    double m_i = 1.0;
    double m_j = 1.0;

    MassPair(double mi, double mj);
    double reduced() const { return m_i * m_j / (m_i + m_j); }
    double total() const { return m_i + m_j; }
    double cluster_total(int n_i, int n_j) const { return n_i * m_i + n_j * m_j; }
    double n_mod(int n_i, int n_j) const;
    double nu_mod(int n_i, int n_j) const;
    /// sqrt(pi beta hbar^2/mu) in units hbar^2/2m_ref = 1.
    double lambda_T(double beta) const;
    /// sqrt(M / 4 mu).
    double prefactor() const;
};

/// Internal amplitude terms a_1..a_4 at geometry nu.
std::array<double, 4> a_terms_nu(double nu, double s, const Accuracy& acc = {});
std::array<double, 4> a_terms(const ClusterGeometry& g, double s, const Accuracy& acc = {});

/// a_(n1,n2)(s): sum of the four terms for bosons, exactly zero for fermions.
double a_cluster(const ClusterGeometry& g, double s, Statistics st, const Accuracy& acc = {});

/// Fermionized terms ~a_1..~a_4.
std::array<double, 4> a_terms_fermionized_nu(double nu, double s, const Accuracy& acc = {});
std::array<double, 4> a_terms_fermionized(const ClusterGeometry& g, double s, const Accuracy& acc = {});

/// ~a_(n1,n2)(s) of the effective fermionic theory.
double a_cluster_fermionized(const ClusterGeometry& g, double s, const Accuracy& acc = {});

/**
 * Cross-species inter-cycle amplitude, mass-modified.
 *
 * Returns sqrt(M/4mu) a(nu~, s). The full amplitude is
 * (V_eff/lambda~_T^d) n~^{-d/2} times this value, assembled in the partition module.
 */
double a_cluster_multispecies(int n_i, int n_j, const MassPair& masses, double s,
                              const Accuracy& acc = {});

} // namespace qce1d
