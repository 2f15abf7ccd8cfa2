/*
   Copyright 2026 The qtmac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <qtmac/linsolve.hpp>
#include <qtmac/xpoly.hpp>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace qtmac {

/// p_k(x_1..x_n).
inline XPoly power_sum(int k, int n) {
    XPoly r(n);
    for (int i = 1; i <= n; ++i) r += XPoly::var(n, i, k);
    return r;
}

/// e_r(x_1..x_n).
inline XPoly elementary(int r, int n) { return elementary_on_subset(n, r, SubsetMask::full(n)); }

/// h_r(x_1..x_n); zero for r < 0.
inline XPoly complete(int r, int n) {
    XPoly out(n);
    if (r < 0) return out;
    for (const auto& mu : partitions_of(r, n)) out += monomial_symmetric(mu, n);
    return out;
}

namespace detail {

// Determinant of a k×k matrix of XPoly via subset dynamic programming over rows.
template <class Entry>
XPoly determinant(int k, int n, Entry entry) {
    std::vector<XPoly> f(1U << static_cast<unsigned>(k), XPoly(n));
    f[0] = XPoly(n, QT(1));
    for (unsigned mask = 0; mask < (1U << static_cast<unsigned>(k)); ++mask) {
        if (f[mask].is_zero()) continue;
        const int row = __builtin_popcount(mask);
        if (row == k) continue;
        for (int j = 0; j < k; ++j) {
            if ((mask >> static_cast<unsigned>(j)) & 1U) continue;
            XPoly a = entry(row, j);
            if (a.is_zero()) continue;
            const int above = __builtin_popcount(mask >> static_cast<unsigned>(j + 1));
            XPoly prod = f[mask] * a;
            if (above % 2) prod = -prod;
            f[mask | (1U << static_cast<unsigned>(j))] += prod;
        }
    }
    return f[(1U << static_cast<unsigned>(k)) - 1];
}

inline std::mutex& symfunc_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace detail

/// q_r(x;t), Σ_r q_r y^r = Π_i (1 - t x_i y)/(1 - x_i y); cached per (r, n).
inline XPoly q_function(int r, int n) {
    if (r < 0) return XPoly(n);
    static std::map<std::pair<int, int>, XPoly> cache;
    {
        std::lock_guard<std::mutex> lock(detail::symfunc_mutex());
        auto it = cache.find({r, n});
        if (it != cache.end()) return it->second;
    }
    // series[d] = coefficient of y^d, expanded factor by factor
    std::vector<XPoly> series(static_cast<std::size_t>(r + 1), XPoly(n));
    series[0] = XPoly(n, QT(1));
    const QT one_minus_t = QT(1) - QT::t();
    for (int i = 1; i <= n; ++i) {
        std::vector<XPoly> next(series.size(), XPoly(n));
        for (int d = 0; d <= r; ++d) {
            if (series[static_cast<std::size_t>(d)].is_zero()) continue;
            next[static_cast<std::size_t>(d)] += series[static_cast<std::size_t>(d)];
            for (int k = 1; d + k <= r; ++k)
                next[static_cast<std::size_t>(d + k)].add_scaled(series[static_cast<std::size_t>(d)], one_minus_t,
                                                                 Monomial::var(i - 1, k));
        }
        series = std::move(next);
    }
    std::lock_guard<std::mutex> lock(detail::symfunc_mutex());
    for (int d = 0; d <= r; ++d) cache.emplace(std::make_pair(d, n), series[static_cast<std::size_t>(d)]);
    return series[static_cast<std::size_t>(r)];
}

/// The basis element b_λ as a polynomial in n variables.
inline XPoly basis_polynomial(Basis b, const Partition& lambda, int n) {
    switch (b) {
        case Basis::m: return monomial_symmetric(lambda, n);
        case Basis::e: {
            XPoly r(n, QT(1));
            for (int p : lambda.parts()) r *= elementary(p, n);
            return r;
        }
        case Basis::p: {
            XPoly r(n, QT(1));
            for (int p : lambda.parts()) r *= power_sum(p, n);
            return r;
        }
        case Basis::s:
            return detail::determinant(lambda.length(), n, [&](int i, int j) {
                return complete(lambda[i + 1] - (i + 1) + (j + 1), n);
            });
        case Basis::bigS:
            return detail::determinant(lambda.length(), n, [&](int i, int j) {
                return q_function(lambda[i + 1] - (i + 1) + (j + 1), n);
            });
    }
    throw std::logic_error("basis_polynomial: unknown basis");
}

/// m-expansion of b_λ computed in n variables; cached.
inline SymExpansion basis_in_m(Basis b, const Partition& lambda, int n) {
    static std::map<std::tuple<int, Partition, int>, SymExpansion> cache;
    const auto key = std::make_tuple(static_cast<int>(b), lambda, n);
    {
        std::lock_guard<std::mutex> lock(detail::symfunc_mutex());
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SymExpansion e = b == Basis::m ? SymExpansion::single(Basis::m, lambda) : to_msym(basis_polynomial(b, lambda, n), false);
    std::lock_guard<std::mutex> lock(detail::symfunc_mutex());
    cache.emplace(key, e);
    return e;
}

inline void require_context(const SymExpansion& e, int n_context) {
    if (e.max_size() > n_context)
        throw TooFewVariables("basis conversion needs at least " + std::to_string(e.max_size()) + " variables, got " +
                              std::to_string(n_context));
}

/// Expresses e in the m basis.
inline SymExpansion to_m_basis(const SymExpansion& e, int n_context) {
    if (e.basis == Basis::m) return e;
    require_context(e, n_context);
    SymExpansion r(Basis::m);
    for (const auto& [lam, c] : e.coeffs)
        for (const auto& [mu, v] : basis_in_m(e.basis, lam, n_context).coeffs) r.add(mu, c * v);
    return r;
}

/// Exact change of basis, routed through the m basis in n_context variables.
inline SymExpansion basis_convert(const SymExpansion& e, Basis target, int n_context) {
    require_context(e, n_context);
    SymExpansion m = to_m_basis(e, n_context);
    if (target == Basis::m) return m;
    std::map<int, std::vector<std::pair<Partition, QT>>> by_degree;
    for (const auto& [mu, c] : m.coeffs) by_degree[mu.size()].emplace_back(mu, c);
    SymExpansion r(target);
    for (const auto& [N, entries] : by_degree) {
        const auto parts = partitions_of(N);
        std::map<Partition, std::size_t> index;
        for (std::size_t i = 0; i < parts.size(); ++i) index[parts[i]] = i;
        QTMatrix A(parts.size(), std::vector<QT>(parts.size()));
        for (std::size_t j = 0; j < parts.size(); ++j)
            for (const auto& [mu, v] : basis_in_m(target, parts[j], n_context).coeffs) A[index.at(mu)][j] = v;
        std::vector<QT> rhs(parts.size());
        for (const auto& [mu, c] : entries) rhs[index.at(mu)] = c;
        std::vector<QT> x = solve_vector(A, rhs);
        for (std::size_t j = 0; j < parts.size(); ++j) r.add(parts[j], x[j]);
    }
    return r;
}

/// S_λ(x;t) in the m basis.
inline SymExpansion big_schur(const Partition& lambda, int n_context) {
    if (lambda.size() > n_context) throw TooFewVariables("big_schur needs n_context >= |λ|");
    return basis_in_m(Basis::bigS, lambda, n_context);
}

/// Classical Kostka number: coefficient of m_μ in s_λ.
inline BigInt kostka_number(const Partition& lambda, const Partition& mu) {
    QT c = basis_in_m(Basis::s, lambda, lambda.size()).coeff(mu);
    return c.to_rational().get_num();
}

/// Product of two expansions, returned in the basis of a.
inline SymExpansion multiply(const SymExpansion& a, const SymExpansion& b, int n_context) {
    SymExpansion pa = basis_convert(a, Basis::p, n_context), pb = basis_convert(b, Basis::p, n_context);
    SymExpansion r(Basis::p);
    for (const auto& [la, ca] : pa.coeffs)
        for (const auto& [lb, cb] : pb.coeffs) {
            std::vector<int> parts(la.parts());
            parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
            std::sort(parts.rbegin(), parts.rend());
            r.add(Partition(std::move(parts)), ca * cb);
        }
    const int need = std::max(n_context, r.max_size());
    return basis_convert(r, a.basis, need);
}

/// f[X/(1-t)]: p_k -> p_k / (1 - t^k), returned in the basis of e.
inline SymExpansion plethysm_substitute(const SymExpansion& e, int n_context) {
    SymExpansion p = basis_convert(e, Basis::p, n_context);
    SymExpansion r(Basis::p);
    for (const auto& [lam, c] : p.coeffs) {
        QT d(1);
        for (int k : lam.parts()) d *= QT(1) - QT::t().pow(k);
        r.add(lam, c / d);
    }
    return e.basis == Basis::p ? r : basis_convert(r, e.basis, n_context);
}

}  // namespace qtmac
