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

#include <qtmac/hecke.hpp>
#include <qtmac/report.hpp>
#include <qtmac/symfunc.hpp>

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace qtmac {

class EigenvalueCollision : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// c(u) = Σ_r coeffs_in_u[r] u^r.
struct EigenvaluePoly {
    std::vector<QT> coeffs_in_u;

    QT at(const QT& u) const {
        QT r(0), p(1);
        for (const QT& c : coeffs_in_u) {
            r += c * p;
            p *= u;
        }
        return r;
    }
    /// Coefficient of (-u)^r, the eigenvalue of D^(r).
    QT signed_coeff(int r) const {
        if (r < 0 || r >= static_cast<int>(coeffs_in_u.size())) return QT(0);
        return r % 2 ? -coeffs_in_u[static_cast<std::size_t>(r)] : coeffs_in_u[static_cast<std::size_t>(r)];
    }
};

struct MacdonaldPair {
    Partition lambda;
    int n = 0;
    SymExpansion P{Basis::m};
    SymExpansion J{Basis::m};
};

namespace detail {

inline void require_symmetric(const XPoly& f, const char* who) {
    if (auto w = symmetry_witness(f))
        throw NotSymmetric(std::string(who) + ": input is not symmetric in x_" + std::to_string(w->first) + ", x_" +
                           std::to_string(w->second),
                           w->first, w->second);
}

inline void require_length(const Partition& lambda, int n, const char* who) {
    if (lambda.length() > n)
        throw TooFewVariables(std::string(who) + ": " + lambda.to_string() + " has more than " + std::to_string(n) +
                              " parts");
}

inline std::mutex& macdonald_mutex() {
    static std::mutex m;
    return m;
}

// sign(I) Π_{i∈I, j∉I} (t x_i - x_j) Π_{pairs within I or within I^c} (x_i - x_j), so that
// a_I = N_I / Δ. With `flipped` the cross factors are (x_i - t x_j) instead.
inline XPoly subset_numerator(int n, const SubsetMask& I, bool flipped = false) {
    static std::map<std::tuple<int, unsigned, bool>, XPoly> cache;
    const auto key = std::make_tuple(n, I.bits(), flipped);
    {
        std::lock_guard<std::mutex> lock(macdonald_mutex());
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const QT t = QT::t();
    XPoly r(n, QT(1));
    int inversions = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (I.contains(i) && !I.contains(j)) {
                if (i > j) ++inversions;
                XPoly xi = XPoly::var(n, i), xj = XPoly::var(n, j);
                r *= flipped ? xi - xj * t : xi * t - xj;
            } else if (i < j && I.contains(i) == I.contains(j)) {
                r *= XPoly::var(n, i) - XPoly::var(n, j);
            }
        }
    }
    if (inversions % 2) r = -r;
    std::lock_guard<std::mutex> lock(macdonald_mutex());
    cache.emplace(key, r);
    return r;
}

// Σ_I C_I(x) a_I(x) τ_I f over the given subsets. Every a_I is cleared against Δ(x);
// subsets with a_I = 1 (I empty or full) skip the Vandermonde round trip.
inline XPoly subset_operator(const XPoly& f, const std::vector<std::pair<SubsetMask, XPoly>>& parts,
                             bool flipped = false) {
    const int n = f.nvars();
    XPoly direct(n), cleared(n);
    for (const auto& [I, C] : parts) {
        if (C.is_zero()) continue;
        XPoly shifted = f.qshift(I) * C;
        if (I.size() == 0 || I.size() == n)
            direct += shifted;
        else
            cleared += shifted * subset_numerator(n, I, flipped);
    }
    if (cleared.is_zero()) return direct;
    // clear negative exponents so the division runs on an honest polynomial
    Monomial low = cleared.min_exponents(), shift;
    for (int i = 0; i < n; ++i) shift[i] = static_cast<std::int16_t>(low[i] < 0 ? -low[i] : 0);
    XPoly q = vandermonde_divide(cleared.times_monomial(shift));
    if (!shift.is_one()) q = q.times_monomial(shift.inverse());
    return direct + q;
}

inline int choose2(int r) { return r * (r - 1) / 2; }

}  // namespace detail

/// D^(r) f = t^{C(r,2)} Σ_{|I|=r} a_I(x) τ_I f for symmetric f.
inline XPoly macdonald_Dr(const XPoly& f, int r) {
    const int n = f.nvars();
    if (r < 0 || r > n) throw std::out_of_range("macdonald_Dr: r must lie in [0, n]");
    detail::require_symmetric(f, "macdonald_Dr");
    const XPoly scale(n, QT::t().pow(detail::choose2(r)));
    std::vector<std::pair<SubsetMask, XPoly>> parts;
    for (const auto& I : subsets_of_size(n, r)) parts.emplace_back(I, scale);
    return detail::subset_operator(f, parts);
}

/// [D^(0) f, ..., D^(n) f]; D(u) f = Σ_r (-u)^r D^(r) f.
inline std::vector<XPoly> macdonald_Du(const XPoly& f) {
    std::vector<XPoly> out;
    for (int r = 0; r <= f.nvars(); ++r) out.push_back(macdonald_Dr(f, r));
    return out;
}

/// Determinantal form of D(u), coefficient-wise: entry r is the coefficient of (-u)^r in
/// (1/Δ) det(x_j^{n-i}(1 - u t^{n-i} τ_j)), expanded over permutations.
inline std::vector<XPoly> macdonald_Du_determinant_coeffs(const XPoly& f) {
    const int n = f.nvars();
    detail::require_symmetric(f, "macdonald_Du_determinant");
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i + 1;
    // For each shift set S gather Σ_σ sgn σ t^{Σ_{j∈S}(n-σ(j))} Π_j x_j^{n-σ(j)}.
    std::vector<XPoly> weight(1U << static_cast<unsigned>(n), XPoly(n));
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (sigma[static_cast<std::size_t>(a)] > sigma[static_cast<std::size_t>(b)]) ++inv;
        Monomial mono;
        for (int j = 0; j < n; ++j) mono[j] = static_cast<std::int16_t>(n - sigma[static_cast<std::size_t>(j)]);
        for (unsigned S = 0; S < weight.size(); ++S) {
            int te = 0;
            for (int j = 0; j < n; ++j)
                if ((S >> static_cast<unsigned>(j)) & 1U) te += n - sigma[static_cast<std::size_t>(j)];
            const QT c = QT::monomial(inv % 2 ? -1 : 1, 0, te);
            weight[S].add_term(mono, c);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::vector<XPoly> out(static_cast<std::size_t>(n + 1), XPoly(n));
    for (unsigned S = 0; S < weight.size(); ++S) {
        SubsetMask I;
        for (int j = 0; j < n; ++j)
            if ((S >> static_cast<unsigned>(j)) & 1U) I.insert(j + 1);
        out[static_cast<std::size_t>(I.size())] += f.qshift(I) * weight[S];
    }
    for (auto& p : out) p = vandermonde_divide(p);
    return out;
}

/// D(u) f from the determinantal form at a fixed value of u.
inline XPoly macdonald_Du_determinant(const XPoly& f, const QT& u) {
    const auto coeffs = macdonald_Du_determinant_coeffs(f);
    XPoly r(f.nvars());
    QT p(1);
    for (const auto& c : coeffs) {
        r += c * p;
        p *= -u;
    }
    return r;
}

/// c^n_λ(u) = Π_{i=1}^n (1 - u t^{n-i} q^{λ_i}), expanded in u.
inline EigenvaluePoly eigenvalue_c(const Partition& lambda, int n) {
    detail::require_length(lambda, n, "eigenvalue_c");
    std::vector<QT> c{QT(1)};
    for (int i = 1; i <= n; ++i) {
        const QT a = QT::monomial(1, lambda[i], n - i);
        std::vector<QT> next(c.size() + 1, QT(0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += c[k];
            next[k + 1] -= c[k] * a;
        }
        c = std::move(next);
    }
    return EigenvaluePoly{std::move(c)};
}

/// D^(r) m_μ in n variables, as an m-expansion; cached.
inline SymExpansion dr_on_monomial(const Partition& mu, int n, int r) {
    static std::map<std::tuple<Partition, int, int>, SymExpansion> cache;
    const auto key = std::make_tuple(mu, n, r);
    {
        std::lock_guard<std::mutex> lock(detail::macdonald_mutex());
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SymExpansion e = to_msym(macdonald_Dr(monomial_symmetric(mu, n), r), false);
    std::lock_guard<std::mutex> lock(detail::macdonald_mutex());
    cache.emplace(key, e);
    return e;
}

/// D^(r) applied to an m-expansion through the cached images of the m_μ.
inline SymExpansion macdonald_Dr(const SymExpansion& f, int n, int r) {
    if (f.basis != Basis::m) throw std::invalid_argument("macdonald_Dr: expansion must be in the m basis");
    SymExpansion out(Basis::m);
    for (const auto& [mu, c] : f.coeffs)
        for (const auto& [nu, d] : dr_on_monomial(mu, n, r).coeffs) out.add(nu, c * d);
    return out;
}

/// P_λ and J_λ from the eigen-equation of D^(1), solved by back substitution down the
/// dominance order. Independent of the raising operators.
inline MacdonaldPair eigen_P(const Partition& lambda, int n) {
    detail::require_length(lambda, n, "eigen_P");
    static std::map<std::pair<Partition, int>, MacdonaldPair> cache;
    {
        std::lock_guard<std::mutex> lock(detail::macdonald_mutex());
        auto it = cache.find({lambda, n});
        if (it != cache.end()) return it->second;
    }
    auto energy = [n](const Partition& p) {
        QT e(0);
        for (int i = 1; i <= n; ++i) e += QT::monomial(1, p[i], n - i);
        return e;
    };
    const QT E = energy(lambda);
    // partitions in the order dominant first; only those ≤ λ can appear
    std::vector<Partition> below;
    for (const auto& mu : partitions_of(lambda.size(), n))
        if (dominance_leq(mu, lambda)) below.push_back(mu);
    std::map<Partition, SymExpansion> d;
    for (const auto& mu : below) d.emplace(mu, dr_on_monomial(mu, n, 1));
    // Solve for c_λ P so the arithmetic stays on polynomials whenever it can.
    const QT c = c_lambda(lambda);
    SymExpansion J(Basis::m);
    J.add(lambda, c);
    for (const auto& nu : below) {
        if (nu == lambda) continue;
        QT rhs(0);
        for (const auto& [mu, u] : J.coeffs) rhs += u * d.at(mu).coeff(nu);
        if (rhs.is_zero()) continue;
        const QT gap = E - energy(nu);
        if (gap.is_zero()) throw EigenvalueCollision("eigen_P: eigenvalue collision at " + nu.to_string());
        J.add(nu, rhs / gap);
    }
    MacdonaldPair out{lambda, n, J.scaled(c.inverse()), J};
    std::lock_guard<std::mutex> lock(detail::macdonald_mutex());
    cache.emplace(std::make_pair(lambda, n), out);
    return out;
}

/// (B_m)_sym f = Σ_r (-1)^r t^{C(r,2)+(m-n+1)r} Σ_{|I|=r} x_I e_{m-r}(x_{I^c}) a_I τ_I f.
inline XPoly raising_Bm_qdiff(const XPoly& f, int m) {
    const int n = f.nvars();
    if (m < 1 || m > n) throw std::out_of_range("raising_Bm_qdiff: m must lie in [1, n]");
    detail::require_symmetric(f, "raising_Bm_qdiff");
    std::vector<std::pair<SubsetMask, XPoly>> parts;
    for (int r = 0; r <= m; ++r) {
        const int sign = r % 2 ? -1 : 1;
        const QT c = QT::monomial(sign, 0, detail::choose2(r) + (m - n + 1) * r);
        for (const auto& I : subsets_of_size(n, r)) {
            XPoly C = elementary_on_subset(n, m - r, I.complement(n)).times_monomial(subset_monomial(I)) * c;
            parts.emplace_back(I, std::move(C));
        }
    }
    return detail::subset_operator(f, parts);
}

/// (A_m)_sym f = Σ_r (-1)^r t^{C(r,2)} Σ_{|I|=r} x_I^{-1} e_{m-r}(x^{-1}_{I^c}) a_I τ_I f.
inline XPoly lowering_Am_qdiff(const XPoly& f, int m) {
    const int n = f.nvars();
    if (m < 1 || m > n) throw std::out_of_range("lowering_Am_qdiff: m must lie in [1, n]");
    detail::require_symmetric(f, "lowering_Am_qdiff");
    std::vector<std::pair<SubsetMask, XPoly>> parts;
    for (int r = 0; r <= m; ++r) {
        const int sign = r % 2 ? -1 : 1;
        const QT c = QT::monomial(sign, 0, detail::choose2(r));
        for (const auto& I : subsets_of_size(n, r)) {
            XPoly C = elementary_on_subset(n, m - r, I.complement(n), true).times_monomial(subset_monomial(I, -1)) * c;
            parts.emplace_back(I, std::move(C));
        }
    }
    return detail::subset_operator(f, parts);
}

/// B_m = Σ_K x_K (1 - t^m Y_{k_1}) ... (1 - t Y_{k_m}), applied literally.
inline XPoly raising_Bm_dunkl(const XPoly& f, int m) {
    const int n = f.nvars();
    if (m < 1 || m > n) throw std::out_of_range("raising_Bm_dunkl: m must lie in [1, n]");
    XPoly out(n);
    for (const auto& K : subsets_of_size(n, m)) {
        const auto ks = K.members();
        XPoly g(f);
        for (int j = m; j >= 1; --j) g -= apply_Y(g, ks[static_cast<std::size_t>(j - 1)]) * QT::t().pow(m - j + 1);
        out += g.times_monomial(subset_monomial(K));
    }
    return out;
}

/// A_m = Σ_K x_K^{-1} (1 - Y*_{k_1})(1 - t Y*_{k_2}) ... (1 - t^{m-1} Y*_{k_m}), applied literally.
inline XPoly lowering_Am_dunkl(const XPoly& f, int m) {
    const int n = f.nvars();
    if (m < 1 || m > n) throw std::out_of_range("lowering_Am_dunkl: m must lie in [1, n]");
    XPoly out(n);
    for (const auto& K : subsets_of_size(n, m)) {
        const auto ks = K.members();
        XPoly g(f);
        for (int j = m; j >= 1; --j) g -= apply_Y(g, ks[static_cast<std::size_t>(j - 1)], true) * QT::t().pow(j - 1);
        out += g.times_monomial(subset_monomial(K, -1));
    }
    return out;
}

/// J_λ = (B_n)^{λ_n} ... (B_1)^{λ_1-λ_2}(1) in n variables, as an m-expansion; cached.
inline SymExpansion rodrigues_J(const Partition& lambda, int n) {
    detail::require_length(lambda, n, "rodrigues_J");
    static std::map<std::pair<Partition, int>, SymExpansion> cache;
    {
        std::lock_guard<std::mutex> lock(detail::macdonald_mutex());
        auto it = cache.find({lambda, n});
        if (it != cache.end()) return it->second;
    }
    XPoly f(n, QT(1));
    for (int m = 1; m <= n; ++m)
        for (int k = 0; k < lambda[m] - lambda[m + 1]; ++k) f = raising_Bm_qdiff(f, m);
    SymExpansion out = to_msym(f, false);
    std::lock_guard<std::mutex> lock(detail::macdonald_mutex());
    cache.emplace(std::make_pair(lambda, n), out);
    return out;
}

/// Coefficient of (-u)^r in c^n_λ(u) times P_λ must equal D^(r) P_λ, for every |λ| = N.
inline Report verify_eigen_equation(int N, int n) {
    Report rep("eigen-equation size=" + std::to_string(N) + " n=" + std::to_string(n));
    for (const auto& lambda : partitions_of(N, n)) {
        const SymExpansion P = eigen_P(lambda, n).P;
        const EigenvaluePoly c = eigenvalue_c(lambda, n);
        for (int r = 0; r <= n; ++r)
            rep.record("D^(r) P = c_r P", macdonald_Dr(P, n, r) == P.scaled(c.signed_coeff(r)),
                       lambda.to_string() + " r=" + std::to_string(r));
    }
    return rep;
}

/// Rodrigues chain against c_λ P_λ from the eigen-solver, plus integrality of J.
inline Report verify_rodrigues(int N) {
    Report rep("rodrigues size=" + std::to_string(N));
    const int n = std::max(N, 1);
    for (const auto& lambda : partitions_of(N)) {
        const SymExpansion J = rodrigues_J(lambda, n);
        rep.record("rodrigues J = c_lambda P", J == eigen_P(lambda, n).J, lambda.to_string());
        bool integral = true;
        for (const auto& [mu, c] : J.coeffs) integral = integral && c.is_laurent_integral() && c.num().min_t() >= 0;
        rep.record("J integral", integral, lambda.to_string());
    }
    return rep;
}

/// B_m P_λ = Π_{i≤m} (1 - t^{m-i+1} q^{λ_i}) P_{λ+(1^m)} for ℓ(λ) ≤ m ≤ n.
inline Report verify_raising(int max_size, int n) {
    Report rep("raising n=" + std::to_string(n));
    for (const auto& lambda : partitions_up_to(max_size, n)) {
        // B_m is linear, so B_m P_λ is compared through B_m J_λ = c_λ B_m P_λ; this keeps the
        // operator on polynomial coefficients.
        const MacdonaldPair base = eigen_P(lambda, n);
        const XPoly J = from_msym(base.J, n);
        const QT c = c_lambda(lambda);
        for (int m = std::max(lambda.length(), 1); m <= n; ++m) {
            QT factor(1);
            for (int i = 1; i <= m; ++i) factor *= QT(1) - QT::monomial(1, lambda[i], m - i + 1);
            const SymExpansion target = eigen_P(lambda.add_column(m), n).P.scaled(factor * c);
            rep.record("B_m P_lambda", to_msym(raising_Bm_qdiff(J, m), false) == target,
                       lambda.to_string() + " m=" + std::to_string(m));
        }
    }
    return rep;
}

/// A_m J_λ = Π_{i≤m} (1 - t^{m-i} q^{λ_i})(1 - t^{n-i+1} q^{λ_i-1}) J_{λ-(1^m)} for ℓ(λ) = m,
/// and A_m P_λ = 0 for ℓ(λ) < m.
inline Report verify_lowering(int max_size, int n) {
    Report rep("lowering n=" + std::to_string(n));
    for (const auto& lambda : partitions_up_to(max_size, n)) {
        const XPoly J = from_msym(eigen_P(lambda, n).J, n);
        for (int m = std::max(lambda.length(), 1); m <= n; ++m) {
            const XPoly got = lowering_Am_qdiff(J, m);
            const std::string w = lambda.to_string() + " m=" + std::to_string(m);
            if (lambda.length() < m) {
                rep.record("A_m P_lambda = 0", got.is_zero(), w);
                continue;
            }
            QT factor(1);
            for (int i = 1; i <= m; ++i)
                factor *= (QT(1) - QT::monomial(1, lambda[i], m - i)) * (QT(1) - QT::monomial(1, lambda[i] - 1, n - i + 1));
            const XPoly target = from_msym(eigen_P(lambda.remove_column(m), n).J, n) * factor;
            rep.record("A_m J_lambda", got == target, w);
        }
    }
    return rep;
}

/// [D(u), B_m] J_λ = (c_{λ+(1^m)}(u) - c_λ(u)) B_m J_λ, coefficient-wise in u.
inline Report verify_commutator(int max_size, int n) {
    Report rep("commutator n=" + std::to_string(n));
    for (const auto& lambda : partitions_up_to(max_size, n)) {
        const XPoly J = from_msym(eigen_P(lambda, n).J, n);
        for (int m = std::max(lambda.length(), 1); m <= n; ++m) {
            const XPoly BJ = raising_Bm_qdiff(J, m);
            const EigenvaluePoly lo = eigenvalue_c(lambda, n), hi = eigenvalue_c(lambda.add_column(m), n);
            for (int r = 0; r <= n; ++r) {
                const XPoly lhs = macdonald_Dr(BJ, r) - raising_Bm_qdiff(macdonald_Dr(J, r), m);
                rep.record("[D(u), B_m] J_lambda", lhs == BJ * (hi.signed_coeff(r) - lo.signed_coeff(r)),
                           lambda.to_string() + " m=" + std::to_string(m) + " r=" + std::to_string(r));
            }
        }
    }
    return rep;
}

/// e_r(t^{n-1}Y_1, ..., Y_n) = D^(r) and e_r(Y*_1, t Y*_2, ..., t^{n-1} Y*_n) = D^(r) on m_μ.
inline Report verify_center_restriction(int n, int r, int max_degree) {
    if (r < 0 || r > n) throw std::out_of_range("verify_center_restriction: r must lie in [0, n]");
    Report rep("center restriction n=" + std::to_string(n) + " r=" + std::to_string(r));
    for (const auto& mu : partitions_up_to(max_degree, n)) {
        const XPoly f = monomial_symmetric(mu, n);
        const XPoly D = macdonald_Dr(f, r);
        XPoly Y(n), Ystar(n);
        for (const auto& I : subsets_of_size(n, r)) {
            XPoly g(f), h(f);
            int te = 0, ts = 0;
            for (int i : I.members()) {
                g = apply_Y(g, i);
                h = apply_Y(h, i, true);
                te += n - i;
                ts += i - 1;
            }
            Y += g * QT::t().pow(te);
            Ystar += h * QT::t().pow(ts);
        }
        rep.record("e_r(t^{n-i} Y_i) = D^(r)", Y == D, mu.to_string());
        rep.record("e_r(t^{i-1} Y*_i) = D^(r)", Ystar == D, mu.to_string());
    }
    return rep;
}

/// Determinantal D(u) against the subset sums, and the Dunkl forms of B_m, A_m against
/// their q-difference forms, on m_μ with |μ| ≤ max_degree.
inline Report verify_operator_forms(int n, int max_degree) {
    Report rep("operator forms n=" + std::to_string(n));
    for (const auto& mu : partitions_up_to(max_degree, n)) {
        const XPoly f = monomial_symmetric(mu, n);
        const auto det = macdonald_Du_determinant_coeffs(f);
        for (int r = 0; r <= n; ++r)
            rep.record("determinant D(u) = subset D(u)", det[static_cast<std::size_t>(r)] == macdonald_Dr(f, r),
                       mu.to_string() + " r=" + std::to_string(r));
        for (int m = 1; m <= n; ++m) {
            const std::string w = mu.to_string() + " m=" + std::to_string(m);
            rep.record("B_m dunkl = B_m qdiff", raising_Bm_dunkl(f, m) == raising_Bm_qdiff(f, m), w);
            rep.record("A_m dunkl = A_m qdiff", lowering_Am_dunkl(f, m) == lowering_Am_qdiff(f, m), w);
        }
    }
    return rep;
}

/// Gaussian binomial [m, r]_t.
inline QT t_binomial(int m, int r) {
    if (r < 0 || r > m) return QT(0);
    const QT t = QT::t();
    return pochhammer(t, t, m) / (pochhammer(t, t, r) * pochhammer(t, t, m - r));
}

/// Σ_{|I|=r} x_I e_{m-r}(x_{I^c}) a_I(x) = t^{(n-m)r} [m, r]_t e_m(x), and the version with
/// (x_i - t x_j) cross factors equal to [m, r]_t e_m(x); also B_m(1) = (t;t)_m e_m.
inline Report verify_subset_sum_identities(int n) {
    Report rep("subset identities n=" + std::to_string(n));
    const XPoly one(n, QT(1));
    for (int m = 0; m <= n; ++m) {
        const XPoly em = elementary(m, n);
        for (int r = 0; r <= m; ++r) {
            std::vector<std::pair<SubsetMask, XPoly>> parts;
            for (const auto& I : subsets_of_size(n, r))
                parts.emplace_back(I, elementary_on_subset(n, m - r, I.complement(n)).times_monomial(subset_monomial(I)));
            const QT b = t_binomial(m, r);
            const std::string w = "m=" + std::to_string(m) + " r=" + std::to_string(r);
            rep.record("sum x_I e a_I = t^{(n-m)r}[m r]_t e_m",
                       detail::subset_operator(one, parts) == em * (b * QT::t().pow((n - m) * r)), w);
            rep.record("sum x_I e a'_I = [m r]_t e_m", detail::subset_operator(one, parts, true) == em * b, w);
        }
        if (m >= 1)
            rep.record("B_m(1) = (t;t)_m e_m", raising_Bm_qdiff(one, m) == em * pochhammer(QT::t(), QT::t(), m),
                       "m=" + std::to_string(m));
    }
    return rep;
}

}  // namespace qtmac
