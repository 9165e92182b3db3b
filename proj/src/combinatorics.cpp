// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file combinatorics.cpp
 * @brief Partition enumeration and exact non-interacting coefficients.
 */

#include <qce1d/combinatorics.hpp>
#include <qce1d/error.hpp>

#include <cmath>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace qce1d {

namespace {

constexpr int kMaxPartitionN = 64;
constexpr int kMaxExactN = 24;

/// Visits every partition of N in reverse lexicographic order.
void for_each_partition(int N, const std::function<void(const std::vector<int>&)>& visit) {
    if (N < 1 || N > kMaxPartitionN)
        throw DomainError("partition size must lie in [1, 64]");
    std::vector<int> a{N};
    for (;;) {
        visit(a);
        int k = static_cast<int>(a.size()) - 1;
        int rem = 0;
        while (k >= 0 && a[k] == 1) {
            rem += 1;
            --k;
        }
        if (k < 0) return;
        const int v = a[k] - 1;
        a.resize(k + 1);
        a[k] = v;
        rem += 1;
        while (rem >= v) {
            a.push_back(v);
            rem -= v;
        }
        if (rem > 0) a.push_back(rem);
    }
}

/// prod n * prod m(n)! for a descending partition.
BigInt cycle_denominator(const std::vector<int>& parts) {
    BigInt den = 1;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const int m = static_cast<int>(j - i);
        for (std::size_t k = i; k < j; ++k) den *= parts[k];
        for (int q = 2; q <= m; ++q) den *= q;
        i = j;
    }
    return den;
}

/// Writes prod(parts) = q^2 r with r square-free; returns (q, r).
std::pair<BigInt, unsigned long long> square_free_split(const std::vector<int>& parts) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
                                 37, 41, 43, 47, 53, 59, 61};
    std::map<int, int> expo;
    for (int n : parts) {
        int v = n;
        for (int p : primes) {
            while (v % p == 0) {
                ++expo[p];
                v /= p;
            }
        }
    }
    BigInt q = 1;
    unsigned long long r = 1;
    for (auto [p, e] : expo) {
        for (int i = 0; i < e / 2; ++i) q *= p;
        if (e % 2) r *= static_cast<unsigned long long>(p);
    }
    return {q, r};
}

using CacheKey = std::tuple<int, double, int>;

std::shared_ptr<const NonintCoefficients> compute(int N, double d, Statistics st) {
    auto out = std::make_shared<NonintCoefficients>();
    out->N = N;
    out->d = d;
    out->statistics = st;
    out->z.assign(N + 1, 0.0);
    if (N == 0) {
        out->z[0] = 1.0;
        return out;
    }
    const bool exact = (d == 1.0 || d == 2.0) && N <= kMaxExactN;
    std::vector<SurdSum> ex(exact ? N + 1 : 0);
    std::vector<long double> acc(N + 1, 0.0L);
    for_each_partition(N, [&](const std::vector<int>& parts) {
        const int l = static_cast<int>(parts.size());
        if (exact) {
            const BigInt den = cycle_denominator(parts);
            SurdSum term;
            if (d == 2.0) {
                BigInt prod = 1;
                for (int n : parts) prod *= n;
                term.terms[1] = Rational(1, den * prod);
            } else {
                auto [q, r] = square_free_split(parts);
                term.terms[r] = Rational(1, den * q * r);
            }
            ex[l] += term;
        } else {
            long double w = 1.0L;
            std::size_t i = 0;
            while (i < parts.size()) {
                std::size_t j = i;
                while (j < parts.size() && parts[j] == parts[i]) ++j;
                for (std::size_t k = i; k < j; ++k)
                    w /= static_cast<long double>(parts[k]) *
                         std::pow(static_cast<long double>(parts[k]), d / 2.0L);
                for (std::size_t q = 2; q <= j - i; ++q) w /= static_cast<long double>(q);
                i = j;
            }
            acc[l] += w;
        }
    });
    for (int l = 1; l <= N; ++l) {
        const int sgn = (st == Statistics::Fermi && (N - l) % 2) ? -1 : 1;
        if (exact) {
            if (sgn < 0) ex[l] = ex[l] * Rational(-1);
            out->z[l] = ex[l].to_double();
        } else {
            out->z[l] = sgn * static_cast<double>(acc[l]);
        }
    }
    if (exact) out->exact = std::move(ex);
    return out;
}

} // namespace

int IntegerPartition::total() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

int IntegerPartition::multiplicity(int k) const {
    int m = 0;
    for (int p : parts) m += (p == k);
    return m;
}

std::vector<IntegerPartition> partitions(int N) {
    std::vector<IntegerPartition> out;
    for_each_partition(N, [&](const std::vector<int>& a) { out.push_back(IntegerPartition{a}); });
    return out;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt cycle_count(const IntegerPartition& p) {
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] < 1) throw DomainError("partition parts must be positive");
        if (i > 0 && p.parts[i] > p.parts[i - 1])
            throw DomainError("partition parts must be in descending order");
    }
    return factorial(p.total()) / cycle_denominator(p.parts);
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& [r, q] : o.terms) {
        terms[r] += q;
        if (terms[r] == 0) terms.erase(r);
    }
    return *this;
}

SurdSum SurdSum::operator*(const Rational& q) const {
    SurdSum out;
    if (q == 0) return out;
    for (const auto& [r, c] : terms) out.terms[r] = c * q;
    return out;
}

double SurdSum::to_double() const {
    long double s = 0.0L;
    for (const auto& [r, q] : terms)
        s += static_cast<long double>(q.convert_to<double>()) *
             std::sqrt(static_cast<long double>(r));
    return static_cast<double>(s);
}

bool SurdSum::is_rational() const {
    for (const auto& [r, q] : terms)
        if (r != 1 && q != 0) return false;
    return true;
}

Rational SurdSum::rational_part() const {
    auto it = terms.find(1);
    return it == terms.end() ? Rational(0) : it->second;
}

std::shared_ptr<const NonintCoefficients> nonint_coefficients(int N, double d, Statistics st) {
    if (N < 0) throw DomainError("particle number must be non-negative");
    if (!(d > 0.0)) throw DomainError("effective dimension must be positive");
    static std::shared_mutex mtx;
    static std::map<CacheKey, std::shared_ptr<const NonintCoefficients>> cache;
    const CacheKey key{N, d, static_cast<int>(st)};
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto value = compute(N, d, st);
    std::unique_lock lock(mtx);
    auto [it, inserted] = cache.emplace(key, value);
    return it->second;
}

double z_coeff(int m, int l, double d, Statistics st) {
    if (l < 0 || l > m) return 0.0;
    if (l == 0) return m == 0 ? 1.0 : 0.0;
    return (*nonint_coefficients(m, d, st))[l];
}

} // namespace qce1d
