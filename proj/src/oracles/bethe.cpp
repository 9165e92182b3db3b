// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bethe.cpp
 * @brief Lieb-Liniger levels from the Bethe equations and a plane-wave check.
 */

#include <qce1d/error.hpp>
#include <qce1d/oracles.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace qce1d::oracles {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Yang-Yang action whose stationary point solves the Bethe equations.
double action(const Eigen::VectorXd& k, const std::vector<int>& twoI, double L, double c) {
    const int N = static_cast<int>(k.size());
    double S = 0.0;
    for (int j = 0; j < N; ++j) S += 0.5 * L * k[j] * k[j] - std::numbers::pi * twoI[j] * k[j];
    for (int j = 0; j < N; ++j)
        for (int l = j + 1; l < N; ++l) {
            const double d = k[j] - k[l];
            S += 2.0 * d * std::atan(d / c) - c * std::log1p(d * d / (c * c));
        }
    return S;
}

Eigen::VectorXd residual(const Eigen::VectorXd& k, const std::vector<int>& twoI, double L, double c) {
    const int N = static_cast<int>(k.size());
    Eigen::VectorXd r(N);
    for (int j = 0; j < N; ++j) {
        double v = L * k[j] - std::numbers::pi * twoI[j];
        for (int l = 0; l < N; ++l)
            if (l != j) v += 2.0 * std::atan((k[j] - k[l]) / c);
        r[j] = v;
    }
    return r;
}

Eigen::MatrixXd jacobian(const Eigen::VectorXd& k, double L, double c) {
    const int N = static_cast<int>(k.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Constant(N, N, 0.0);
    for (int j = 0; j < N; ++j) {
        J(j, j) = L;
        for (int l = 0; l < N; ++l) {
            if (l == j) continue;
            const double d = k[j] - k[l];
            const double w = 2.0 * c / (c * c + d * d);
            J(j, j) += w;
            J(j, l) = -w;
        }
    }
    return J;
}

/// Appends all non-decreasing integer tuples n with sum (2 pi n/L)^2 <= bound.
void enumerate_bosonic(int N, double L, double bound, std::vector<int>& cur, double used,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == N) {
        out.push_back(cur);
        return;
    }
    const double q = kTwoPi / L;
    const int nmax = static_cast<int>(std::floor(std::sqrt(std::max(0.0, bound) ) / q));
    const int lo = cur.empty() ? -nmax : cur.back();
    for (int n = lo; n <= nmax; ++n) {
        const double e = (q * n) * (q * n);
        // remaining particles sit at or above n, so each costs at least min over m >= n of (q m)^2
        const int rest = N - static_cast<int>(cur.size()) - 1;
        const double floor_rest = n >= 0 ? rest * e : 0.0;
        if (used + e + floor_rest > bound) {
            if (n >= 0) break;
            continue;
        }
        cur.push_back(n);
        enumerate_bosonic(N, L, bound, cur, used + e, out);
        cur.pop_back();
    }
}

} // namespace

BetheState bethe_solve(const std::vector<int>& twoI, double L, double c) {
    const int N = static_cast<int>(twoI.size());
    if (N < 1 || !(L > 0.0) || !(c > 0.0)) throw DomainError("Bethe solver needs N >= 1, L > 0, c > 0");
    for (int j = 1; j < N; ++j)
        if (twoI[j] <= twoI[j - 1]) throw DomainError("Bethe quantum numbers must increase strictly");
    for (int j = 0; j < N; ++j)
        if (((twoI[j] + N + 1) % 2 + 2) % 2 != 0) throw DomainError("Bethe quantum numbers have the wrong parity");
    // interpolate between the free-boson and free-fermion momenta
    const double w = c * L / (c * L + 2.0 * N);
    Eigen::VectorXd k(N);
    for (int j = 0; j < N; ++j) {
        const double kf = std::numbers::pi * twoI[j] / L;
        const double kb = std::numbers::pi * (twoI[j] - 2 * j + (N - 1)) / L;
        k[j] = w * kf + (1.0 - w) * kb;
    }
    double S = action(k, twoI, L, c);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        const Eigen::VectorXd r = residual(k, twoI, L, c);
        if (r.lpNorm<Eigen::Infinity>() < 1e-13 * std::max(1.0, L * k.lpNorm<Eigen::Infinity>())) {
            converged = true;
            break;
        }
        const Eigen::VectorXd step = jacobian(k, L, c).ldlt().solve(-r);
        double t = 1.0;
        Eigen::VectorXd trial = k + step;
        double St = action(trial, twoI, L, c);
        const double rn = r.norm();
        auto accepted = [&] {
            return St <= S + 1e-4 * t * r.dot(step) || residual(trial, twoI, L, c).norm() <= 0.5 * rn;
        };
        while (!accepted() && t > 1e-12) {
            t *= 0.5;
            trial = k + t * step;
            St = action(trial, twoI, L, c);
        }
        k = trial;
        S = St;
    }
    if (!converged) {
        const Eigen::VectorXd r = residual(k, twoI, L, c);
        if (r.lpNorm<Eigen::Infinity>() > 1e-9 * std::max(1.0, L * k.lpNorm<Eigen::Infinity>()))
            throw ConvergenceError("Bethe equations did not converge", r.lpNorm<Eigen::Infinity>());
    }
    BetheState st;
    st.twoI = twoI;
    st.k.assign(k.data(), k.data() + N);
    st.energy = k.squaredNorm();
    const Eigen::VectorXd dk = jacobian(k, L, c).ldlt().solve(-k);
    st.dE_dL = 2.0 * k.dot(dk);
    return st;
}

LevelList lieb_liniger_levels(int N, double L, double alpha, double E_max, std::vector<BetheState>* states) {
    if (N < 1 || N > 4) throw DomainError("Lieb-Liniger oracle supports 1 <= N <= 4");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("Lieb-Liniger oracle needs finite alpha > 0");
    if (!(L > 0.0) || !(E_max >= 0.0)) throw DomainError("Lieb-Liniger oracle needs L > 0, E_max >= 0");
    const double c = std::sqrt(2.0 * alpha);
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    // at fixed quantum numbers the energy increases with c, so the free-boson energy bounds it below
    enumerate_bosonic(N, L, E_max, cur, 0.0, tuples);
    std::vector<double> raw;
    if (states) states->clear();
    for (const auto& n : tuples) {
        std::vector<int> twoI(N);
        for (int j = 0; j < N; ++j) twoI[j] = 2 * n[j] + 2 * j - (N - 1);
        BetheState st = bethe_solve(twoI, L, c);
        if (st.energy > E_max) continue;
        raw.push_back(st.energy);
        if (states) states->push_back(std::move(st));
    }
    if (states)
        std::sort(states->begin(), states->end(),
                  [](const BetheState& a, const BetheState& b) { return a.energy < b.energy; });
    return make_level_list(std::move(raw), E_max, "Bethe");
}

SplitAnsatz lieb_liniger_split_ansatz(int N, double alpha) {
    if (N < 1 || N > 4) throw DomainError("Lieb-Liniger split ansatz supports 1 <= N <= 4");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("Lieb-Liniger split ansatz needs finite alpha > 0");
    const double c = std::sqrt(2.0 * alpha);
    std::vector<int> ground(N);
    for (int j = 0; j < N; ++j) ground[j] = 2 * j - (N - 1);
    std::vector<int> excited = ground;
    excited.back() += 2;
    SplitAnsatz a;
    a.E0 = [ground, c](double L) { return bethe_solve(ground, L, c).energy; };
    a.E1 = [excited, c](double L) { return bethe_solve(excited, L, c).energy; };
    return a;
}

double plane_wave_ground_state(int N, double L, double c, int mode_cutoff) {
    if (N < 1 || N > 4 || mode_cutoff < 1) throw DomainError("plane-wave check needs 1 <= N <= 4, cutoff >= 1");
    if (!(L > 0.0) || !(c >= 0.0)) throw DomainError("plane-wave check needs L > 0, c >= 0");
    const int M = mode_cutoff;
    // basis: non-decreasing mode tuples with total momentum zero
    std::vector<std::vector<int>> basis;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == N) {
            int P = 0;
            for (int m : cur) P += m;
            if (P == 0) basis.push_back(cur);
            return;
        }
        for (int m = lo; m <= M; ++m) {
            cur.push_back(m);
            self(self, m);
            cur.pop_back();
        }
    };
    rec(rec, -M);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    const int D = static_cast<int>(basis.size());
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(D, D);
    const double q = kTwoPi / L;
    for (int a = 0; a < D; ++a) {
        std::map<int, int> occ;
        for (int m : basis[a]) ++occ[m];
        for (auto [m, n] : occ) H(a, a) += n * (q * m) * (q * m);
        // (c/L) sum_{p,q,k} a+_{p+k} a+_{q-k} a_q a_p
        for (auto [p, np] : occ)
            for (auto [qq, nq] : occ) {
                const double ann = p == qq ? std::sqrt(double(np) * (np - 1)) : std::sqrt(double(np) * nq);
                if (ann == 0.0) continue;
                for (int k = -2 * M; k <= 2 * M; ++k) {
                    const int p2 = p + k, q2 = qq - k;
                    if (std::abs(p2) > M || std::abs(q2) > M) continue;
                    std::map<int, int> o2 = occ;
                    if (--o2[p] == 0) o2.erase(p);
                    if (--o2[qq] == 0) o2.erase(qq);
                    const double c1 = std::sqrt(double(o2[q2] + 1));
                    ++o2[q2];
                    const double c2 = std::sqrt(double(o2[p2] + 1));
                    ++o2[p2];
                    std::vector<int> key;
                    for (auto [m, n] : o2)
                        for (int i = 0; i < n; ++i) key.push_back(m);
                    H(index.at(key), a) += (c / L) * ann * c1 * c2;
                }
            }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
    return es.eigenvalues()[0];
}

} // namespace qce1d::oracles
