// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file combinatorics.hpp
 * @brief Integer partitions, cycle-type counts and non-interacting coefficients.
 *
 * Z_0 = sum_l z_l x^l with x = V_eff/lambda_T^d and
 * z_l = (+-1)^{N-l} (1/N!) sum_{|P| = l} c_P prod_{n in P} n^{-d/2}.
 */

#pragma once

#include <qce1d/model.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace qce1d {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Partition of an integer into parts stored in descending order.
struct IntegerPartition {
    std::vector<int> parts;

    int total() const;
    int length() const { return static_cast<int>(parts.size()); }
    /// Number of parts equal to k.
    int multiplicity(int k) const;
};

/// All partitions of N in reverse lexicographic order, starting with {N}.
std::vector<IntegerPartition> partitions(int N);

/// Number of permutations of N elements with the given cycle type.
BigInt cycle_count(const IntegerPartition& p);

/**
 * Exact value sum_r q_r sqrt(r) over square-free radicands r.
 *
 * Represents n^{-d/2} products exactly for d = 1 and d = 2.
 */
struct SurdSum {
    std::map<unsigned long long, Rational> terms;

    SurdSum& operator+=(const SurdSum& o);
    SurdSum operator*(const Rational& q) const;
    double to_double() const;
    /// True if the value is a rational number.
    bool is_rational() const;
    Rational rational_part() const;
};

struct NonintCoefficients {
    int N = 0;
    double d = 1.0;
    Statistics statistics = Statistics::Bose;
    std::vector<double> z;  ///< z[l], l = 0..N, z[0] = delta_{N0}
    std::optional<std::vector<SurdSum>> exact;  ///< present when d is 1 or 2

    double operator[](int l) const { return z.at(l); }
};

/// Coefficients z_l^{(N)} (cached, thread-safe). N = 0 yields z_0 = 1.
std::shared_ptr<const NonintCoefficients> nonint_coefficients(int N, double d, Statistics st);

/// z_l^{(m)} with the convention z_0^{(m)} = delta_{m0}; zero for l > m or l < 0.
double z_coeff(int m, int l, double d, Statistics st);

/// N! as a big integer.
BigInt factorial(int n);

} // namespace qce1d
