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

#include <qtmac/macdonald.hpp>
#include <qtmac/ratfn.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtmac {

class SizeMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Power series in y_1..y_m whose coefficients are polynomials in x_1..x_n, truncated at
/// total y-degree max_ydeg. Keys use the first m monomial slots.
struct XYSeries {
    int n = 0, m = 0, max_ydeg = 0;
    std::map<Monomial, XPoly> terms;

    XYSeries() = default;
    XYSeries(int n_, int m_, int D) : n(n_), m(m_), max_ydeg(D) {}

    /// Adds p to the coefficient of y^key; keys beyond the truncation are dropped.
    void add(const Monomial& key, const XPoly& p) {
        if (key.degree() > max_ydeg || p.is_zero()) return;
        auto [it, inserted] = terms.try_emplace(key, XPoly(n));
        it->second += p;
        if (it->second.is_zero()) terms.erase(it);
    }
    XPoly coeff(const Monomial& key) const {
        auto it = terms.find(key);
        return it == terms.end() ? XPoly(n) : it->second;
    }
    /// The homogeneous part of y-degree d.
    XYSeries layer(int d) const {
        XYSeries r(n, m, max_ydeg);
        for (const auto& [k, p] : terms)
            if (k.degree() == d) r.terms.emplace(k, p);
        return r;
    }
    XYSeries truncated(int D) const {
        XYSeries r(n, m, std::min(D, max_ydeg));
        for (const auto& [k, p] : terms)
            if (k.degree() <= r.max_ydeg) r.terms.emplace(k, p);
        return r;
    }
    XYSeries map_x(const std::function<XPoly(const XPoly&)>& f) const {
        XYSeries r(n, m, max_ydeg);
        for (const auto& [k, p] : terms) r.add(k, f(p));
        return r;
    }

    friend bool operator==(const XYSeries& a, const XYSeries& b) { return a.terms == b.terms; }
    friend bool operator!=(const XYSeries& a, const XYSeries& b) { return !(a == b); }
};

inline XYSeries operator*(const XYSeries& a, const XYSeries& b) {
    XYSeries r(a.n, a.m, std::min(a.max_ydeg, b.max_ydeg));
    for (const auto& [ka, pa] : a.terms)
        for (const auto& [kb, pb] : b.terms)
            if (ka.degree() + kb.degree() <= r.max_ydeg) r.add(ka * kb, pa * pb);
    return r;
}

namespace detail {

// Σ_r coef[r] (x_i y_j)^r as a series.
inline XYSeries pair_series(int n, int m, int D, int i, int j, const std::function<QT(int)>& coef) {
    XYSeries s(n, m, D);
    for (int r = 0; r <= D; ++r) s.add(Monomial::var(j - 1, r), XPoly::var(n, i, r) * coef(r));
    return s;
}

// Π_{i,j} (b x_i y_j; q)_∞ / (x_i y_j; q)_∞ at z = a x_i y_j, by the q-binomial theorem.
inline XYSeries qbinomial_product(int n, int m, int D, const QT& b, const QT& a) {
    std::vector<QT> c;
    for (int r = 0; r <= D; ++r) c.push_back(pochhammer(b, QT::q(), r) / pochhammer(QT::q(), QT::q(), r) * a.pow(r));
    XYSeries out(n, m, D);
    out.add(Monomial{}, XPoly(n, QT(1)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            out = out * pair_series(n, m, D, i, j, [&](int r) { return c[static_cast<std::size_t>(r)]; });
    return out;
}

// Applies g to the y-side: regroups by x-monomial, maps each polynomial in y, regroups back.
inline XYSeries y_side(const XYSeries& s, const std::function<XPoly(const XPoly&)>& g, int D) {
    std::map<Monomial, XPoly> by_x;
    for (const auto& [ky, p] : s.terms)
        for (const auto& [kx, c] : p.terms()) {
            auto [it, inserted] = by_x.try_emplace(kx, XPoly(s.m));
            it->second.add_term(ky, c);
        }
    XYSeries out(s.n, s.m, D);
    for (const auto& [kx, py] : by_x) {
        const XPoly gy = g(py);
        for (const auto& [ky, c] : gy.terms()) out.add(ky, XPoly::monomial(s.n, kx, c));
    }
    return out;
}

// D(u) = Σ_r (-u)^r D^(r) on a symmetric polynomial.
inline XPoly macdonald_D_at(const XPoly& f, const QT& u) {
    XPoly r(f.nvars());
    QT p(1);
    for (int k = 0; k <= f.nvars(); ++k) {
        r += macdonald_Dr(f, k) * p;
        p *= -u;
    }
    return r;
}

inline std::string nmd(int n, int m, int D) {
    return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " D=" + std::to_string(D);
}

}  // namespace detail

/// Π(x,y) = Π_{i,j} (t x_i y_j; q)_∞ / (x_i y_j; q)_∞ through total y-degree D.
inline XYSeries pi_series(int n, int m, int D) {
    if (D < 0) throw std::invalid_argument("pi_series: D must be nonnegative");
    return detail::qbinomial_product(n, m, D, QT::t(), QT(1));
}

/// 1/Π(x,y) = Π_{i,j} (x_i y_j; q)_∞ / (t x_i y_j; q)_∞ through total y-degree D.
inline XYSeries pi_inverse_series(int n, int m, int D) {
    if (D < 0) throw std::invalid_argument("pi_inverse_series: D must be nonnegative");
    return detail::qbinomial_product(n, m, D, QT::t().inverse(), QT::t());
}

/// Σ_{|λ|≤D, ℓ(λ)≤m} b_λ P_λ(x) P_λ(y), built from the eigen-equation solver.
inline XYSeries kernel_sum(int n, int m, int D) {
    XYSeries out(n, m, D);
    for (const auto& lam : partitions_up_to(D, m)) {
        const XPoly px = from_msym(eigen_P(lam, n).P, n) * b_lambda(lam);
        const XPoly py = from_msym(eigen_P(lam, m).P, m);
        for (const auto& [ky, c] : py.terms()) out.add(ky, px * c);
    }
    return out;
}

inline Report verify_kernel_expansion(int n, int m, int D) {
    if (m < 1 || m > n || n + m > kMaxVars) throw std::invalid_argument("verify_kernel_expansion: need 1 <= m <= n");
    Report rep("kernel expansion " + detail::nmd(n, m, D));
    const XYSeries pi = pi_series(n, m, D), sum = kernel_sum(n, m, D);
    for (int d = 0; d <= D; ++d)
        rep.record("Pi(x,y) = sum b_lambda P_lambda(x) P_lambda(y)", pi.layer(d) == sum.layer(d),
                   detail::nmd(n, m, D) + " y-degree " + std::to_string(d));
    for (int d = 0; d < D; ++d)
        rep.record("truncation coherence", pi.truncated(d) == pi_series(n, m, d), "D'=" + std::to_string(d));
    return rep;
}

/// B_m^x Π = (y_1⋯y_m)^{-1} D_y(1) Π and A_m^x Π = y_1⋯y_m D_y(t^{n-m+1}) Π, layer by layer.
inline Report verify_kernel_operators(int n, int m, int D) {
    if (m < 1 || m > n || n + m > kMaxVars) throw std::invalid_argument("verify_kernel_operators: need 1 <= m <= n");
    Report rep("raising/lowering on the kernel " + detail::nmd(n, m, D));
    const XYSeries pi = pi_series(n, m, D);
    const Monomial ym = subset_monomial(SubsetMask::full(m));
    auto w = [&](int d) { return detail::nmd(n, m, D) + " y-degree " + std::to_string(d); };

    // B side: the left side at y-degree d needs Π through d + m.
    const XYSeries bl = pi.truncated(D - m).map_x([m](const XPoly& f) { return raising_Bm_qdiff(f, m); });
    const XYSeries dy1 = detail::y_side(pi, [](const XPoly& g) { return detail::macdonald_D_at(g, QT(1)); }, D);
    XYSeries br(n, m, std::max(D - m, 0));
    bool divisible = true;
    for (const auto& [k, p] : dy1.terms) {
        const Monomial s = k / ym;
        if (!s.nonnegative()) {
            divisible = false;
            continue;
        }
        br.add(s, p);
    }
    rep.record("D_y(1) Pi divisible by y_1...y_m", divisible, detail::nmd(n, m, D));
    for (int d = 0; d <= D - m; ++d)
        rep.record("B_m^x Pi = (y_1...y_m)^-1 D_y(1) Pi", bl.layer(d) == br.layer(d), w(d));

    // A side: the right side at y-degree d comes from Π at d - m.
    const XYSeries al = pi.map_x([m](const XPoly& f) { return lowering_Am_qdiff(f, m); });
    const QT u = QT::t().pow(n - m + 1);
    const XYSeries dyu = detail::y_side(pi, [&u](const XPoly& g) { return detail::macdonald_D_at(g, u); }, D);
    XYSeries ar(n, m, D);
    for (const auto& [k, p] : dyu.terms) ar.add(k * ym, p);
    for (int d = 0; d <= D; ++d) {
        rep.record("A_m^x Pi = y_1...y_m D_y(t^{n-m+1}) Pi", al.layer(d) == ar.layer(d), w(d));
        if (d < m) rep.record("A_m^x kills y-degree below m", al.layer(d).terms.empty(), w(d));
    }
    return rep;
}

/// D_x(u) Π = Π F(u;x,y), coefficient-wise in u: Π^{-1} D_x^(r) Π against the y-expansion of
/// t^{C(r,2)} Σ_{|I|=r} a_I(x) Π_{i∈I,k} (1 - x_i y_k)/(1 - t x_i y_k).
inline Report verify_F_identity(int n, int m, int D) {
    if (m < 1 || m > n || n + m > kMaxVars) throw std::invalid_argument("verify_F_identity: need 1 <= m <= n");
    Report rep("D_x(u) Pi = Pi F(u;x,y) " + detail::nmd(n, m, D));
    const XYSeries pi = pi_series(n, m, D), inv = pi_inverse_series(n, m, D);
    XYSeries one(n, m, D);
    one.add(Monomial{}, XPoly(n, QT(1)));
    rep.record("Pi * Pi^-1 = 1", pi * inv == one, detail::nmd(n, m, D));
    const QT t = QT::t();
    // (1 - a)/(1 - t a) = 1 + Σ_{s≥1} (t^s - t^{s-1}) a^s
    auto g = [&t](int s) { return s == 0 ? QT(1) : t.pow(s) - t.pow(s - 1); };
    for (int r = 0; r <= n; ++r) {
        const XYSeries lhs = inv * pi.map_x([r](const XPoly& f) { return macdonald_Dr(f, r); });
        XYSeries direct(n, m, D), cleared(n, m, D);
        for (const auto& I : subsets_of_size(n, r)) {
            XYSeries s(n, m, D);
            s.add(Monomial{}, XPoly(n, QT(1)));
            for (int i : I.members())
                for (int k = 1; k <= m; ++k) s = s * detail::pair_series(n, m, D, i, k, g);
            if (r == 0 || r == n) {
                for (const auto& [k, p] : s.terms) direct.add(k, p);
            } else {
                const XPoly N = detail::subset_numerator(n, I);
                for (const auto& [k, p] : s.terms) cleared.add(k, p * N);
            }
        }
        XYSeries rhs = direct;
        for (const auto& [k, p] : cleared.terms) rhs.add(k, vandermonde_divide(p));
        rhs = rhs.map_x([&](const XPoly& f) { return f * t.pow(detail::choose2(r)); });
        rep.record("Pi^-1 D_x^(r) Pi = [(-u)^r] F(u;x,y)", lhs == rhs, detail::nmd(n, m, D) + " r=" + std::to_string(r));
    }
    return rep;
}

// ---------------------------------------------------------------------------------------
// Rational functions in (x, y): x_i sits in slot i, y_k in slot n + k.

namespace detail {

struct XYVars {
    int n, m;
    XPoly x(int i) const { return XPoly::var(n + m, i); }
    XPoly y(int k) const { return XPoly::var(n + m, n + k); }
    XPoly c(const QT& v) const { return XPoly(n + m, v); }
    Monomial xmono(const SubsetMask& I) const { return subset_monomial(I); }
    Monomial ymono(const SubsetMask& K) const {
        Monomial r;
        for (int k : K.members()) r[n + k - 1] = 1;
        return r;
    }
};

inline void require_vars(int n, int m, const char* who) {
    if (n < 1 || m < 1 || n + m > kMaxVars) throw std::invalid_argument(std::string(who) + ": need n, m >= 1 and n + m <= 8");
}

}  // namespace detail

/// h^I_K: the symmetrized sum over S_r of Π_μ [(t-1)/(1 - t x_{i_μ} y_{k_σμ}) Π_{j>i_μ}
/// t(1 - x_j y_{k_σμ})/(1 - t x_j y_{k_σμ})] Π_{μ<ν} (t y_{k_σμ} - y_{k_σν})/(y_{k_σμ} - y_{k_σν}).
inline RatFn mimachi_h(int n, const SubsetMask& I, const SubsetMask& K, int m) {
    detail::require_vars(n, m, "mimachi_h");
    if (I.size() != K.size()) throw SizeMismatch("mimachi_h: |I| != |K|");
    if (!I.within(n) || !K.within(m)) throw std::out_of_range("mimachi_h: index set out of range");
    const detail::XYVars v{n, m};
    const QT t = QT::t();
    const auto is = I.members(), ks = K.members();
    const std::size_t r = is.size();
    std::vector<std::size_t> sigma(r);
    std::iota(sigma.begin(), sigma.end(), 0);
    RatFn out(n + m);
    do {
        XPoly num = v.c(QT(1));
        std::vector<XPoly> dens;
        for (std::size_t mu = 0; mu < r; ++mu) {
            const XPoly yk = v.y(ks[sigma[mu]]);
            num *= v.c(t - 1);
            dens.push_back(v.c(1) - v.x(is[mu]) * yk * t);
            for (int j = is[mu] + 1; j <= n; ++j) {
                num *= (v.c(1) - v.x(j) * yk) * t;
                dens.push_back(v.c(1) - v.x(j) * yk * t);
            }
            for (std::size_t nu = mu + 1; nu < r; ++nu) {
                const XPoly yl = v.y(ks[sigma[nu]]);
                num *= yk * t - yl;
                dens.push_back(yk - yl);
            }
        }
        out += RatFn::fraction(std::move(num), dens);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

/// T_i^x h = t h + (x_{i+1} - t x_i)/(x_{i+1} - x_i) (s_i h - h).
inline RatFn apply_T_ratfn(const RatFn& h, int i) {
    const int N = h.nvars();
    const XPoly xi = XPoly::var(N, i), xj = XPoly::var(N, i + 1);
    return h * QT::t() + RatFn::fraction(xj - xi * QT::t(), {xj - xi}) * (h.swap_vars(i, i + 1) - h);
}

namespace detail {

inline SubsetMask swap_in(const SubsetMask& I, int i) {
    SubsetMask r;
    for (int a : I.members()) r.insert(a == i ? i + 1 : a == i + 1 ? i : a);
    return r;
}

}  // namespace detail

/// The Hecke action on the Mimachi basis and on its image under ι.
inline Report verify_mimachi_T_action(int n, int m, int r) {
    detail::require_vars(n, m, "verify_mimachi_T_action");
    if (r < 0 || r > std::min(n, m)) throw std::invalid_argument("verify_mimachi_T_action: r must lie in [0, min(n, m)]");
    Report rep("Hecke action on h^I_K n=" + std::to_string(n) + " m=" + std::to_string(m) + " r=" + std::to_string(r));
    const detail::XYVars v{n, m};
    const QT t = QT::t();
    for (const auto& K : subsets_of_size(m, r)) {
        std::map<SubsetMask, RatFn> h, ih;
        for (const auto& I : subsets_of_size(n, r)) {
            h.emplace(I, mimachi_h(n, I, K, m));
            ih.emplace(I, h.at(I).iota());
        }
        for (const auto& I : subsets_of_size(n, r)) {
            const std::string wk = "I=" + I.to_string() + " K=" + K.to_string();
            const QT scale = QT::monomial(1, 0, -r * n - detail::choose2(r) + I.sum());
            rep.record("iota(h^I_K) = t^{-rn-C(r,2)+sum(I)} x_I y_K h^I_K",
                       ih.at(I) == (h.at(I) * scale).times_monomial(v.xmono(I) * v.ymono(K)), wk);
            for (int i = 1; i < n; ++i) {
                const std::string w = wk + " i=" + std::to_string(i);
                const bool a = I.contains(i), b = I.contains(i + 1);
                const RatFn th = apply_T_ratfn(h.at(I), i), tih = apply_T_ratfn(ih.at(I), i);
                if (a == b) {
                    rep.record("T_i h^I_K = t h^I_K (i, i+1 both in or both out)", th == h.at(I) * t, w);
                    rep.record("T_i iota(h^I_K) = t iota(h^I_K) (i, i+1 both in or both out)", tih == ih.at(I) * t, w);
                    continue;
                }
                const SubsetMask J = detail::swap_in(I, i);
                if (!a) {
                    rep.record("T_i h^I_K = h^{s_i I}_K (i out, i+1 in)", th == h.at(J), w);
                    rep.record("T_i iota(h^I_K) = t iota(h^{s_i I}_K) + (t-1) iota(h^I_K) (i out, i+1 in)",
                               tih == ih.at(J) * t + ih.at(I) * (t - 1), w);
                } else {
                    rep.record("T_i h^I_K = t h^{s_i I}_K + (t-1) h^I_K (i in, i+1 out)",
                               th == h.at(J) * t + h.at(I) * (t - 1), w);
                    rep.record("T_i iota(h^I_K) = iota(h^{s_i I}_K) (i in, i+1 out)", tih == ih.at(J), w);
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------------------
// Expansions of F(u;y,x) in the Mimachi basis. Polynomials in u are coefficient vectors.

using UPoly = std::vector<RatFn>;

namespace detail {

// Σ_{S⊆A} (-u)^{|S|} t^{C(|S|,2)} Π_{a∈S,a'∈A\S} (t z_a - z_a')/(z_a - z_a') Π_{a∈S,b∈B} (1 - z_a w_b)/(1 - t z_a w_b)
// over slot lists A (the z's) and B (the w's).
inline UPoly F_generic(int N, const std::vector<int>& A, const std::vector<int>& B) {
    const QT t = QT::t();
    const int k = static_cast<int>(A.size());
    UPoly out(static_cast<std::size_t>(k + 1), RatFn(N));
    for (unsigned S = 0; S < (1U << static_cast<unsigned>(k)); ++S) {
        const int s = __builtin_popcount(S);
        XPoly num(N, QT::monomial(s % 2 ? -1 : 1, 0, choose2(s)));
        std::vector<XPoly> dens;
        for (int a = 0; a < k; ++a) {
            if (!((S >> static_cast<unsigned>(a)) & 1U)) continue;
            const XPoly za = XPoly::var(N, A[static_cast<std::size_t>(a)]);
            for (int c = 0; c < k; ++c) {
                if ((S >> static_cast<unsigned>(c)) & 1U) continue;
                const XPoly zc = XPoly::var(N, A[static_cast<std::size_t>(c)]);
                num *= za * t - zc;
                dens.push_back(za - zc);
            }
            for (int b : B) {
                const XPoly zw = za * XPoly::var(N, b);
                num *= XPoly(N, QT(1)) - zw;
                dens.push_back(XPoly(N, QT(1)) - zw * t);
            }
        }
        out[static_cast<std::size_t>(s)] += RatFn::fraction(std::move(num), dens);
    }
    return out;
}

inline std::vector<int> slots(int from, int count) {
    std::vector<int> r(static_cast<std::size_t>(count));
    std::iota(r.begin(), r.end(), from);
    return r;
}

// (c u; t)_k as coefficients in u.
inline std::vector<QT> qpoch_u(const QT& c, int k) {
    std::vector<QT> p{QT(1)};
    for (int j = 0; j < k; ++j) {
        std::vector<QT> np(p.size() + 1, QT(0));
        const QT a = -(c * QT::t().pow(j));
        for (std::size_t e = 0; e < p.size(); ++e) {
            np[e] += p[e];
            np[e + 1] += p[e] * a;
        }
        p = std::move(np);
    }
    return p;
}

// p(u) f(u) for scalar p.
inline UPoly upoly_times(const std::vector<QT>& p, const UPoly& f, int N) {
    UPoly r(p.size() + f.size() - 1, RatFn(N));
    for (std::size_t a = 0; a < p.size(); ++a)
        if (!p[a].is_zero())
            for (std::size_t b = 0; b < f.size(); ++b) r[a + b] += f[b] * p[a];
    return r;
}

// f(c u).
inline UPoly upoly_rescale(const UPoly& f, const QT& c) {
    UPoly r(f);
    QT p(1);
    for (auto& x : r) {
        x = x * p;
        p *= c;
    }
    return r;
}

inline RatFn upoly_eval(const UPoly& f, const QT& u, int N) {
    RatFn r(N);
    QT p(1);
    for (const auto& x : f) {
        r += x * p;
        p *= u;
    }
    return r;
}

inline bool upoly_equal(const UPoly& a, const UPoly& b, int N) {
    for (std::size_t e = 0; e < std::max(a.size(), b.size()); ++e) {
        const RatFn za(N);
        if (!((e < a.size() ? a[e] : za) == (e < b.size() ? b[e] : za))) return false;
    }
    return true;
}

// a_{K|L}(y) = Π_{k∈K, l∈L\K} (t y_k - y_l)/(y_k - y_l).
inline RatFn a_KL(const XYVars& v, const SubsetMask& K, const SubsetMask& L) {
    XPoly num = v.c(QT(1));
    std::vector<XPoly> dens;
    for (int k : K.members())
        for (int l : L.members()) {
            if (K.contains(l)) continue;
            num *= v.y(k) * QT::t() - v.y(l);
            dens.push_back(v.y(k) - v.y(l));
        }
    return RatFn::fraction(std::move(num), dens);
}

// b^I_K = Π_{i∈I, k∈K} t(1 - x_i y_k)/(1 - t x_i y_k).
inline RatFn b_IK(const XYVars& v, const SubsetMask& I, const SubsetMask& K) {
    XPoly num = v.c(QT(1));
    std::vector<XPoly> dens;
    for (int i : I.members())
        for (int k : K.members()) {
            num *= (v.c(1) - v.x(i) * v.y(k)) * QT::t();
            dens.push_back(v.c(1) - v.x(i) * v.y(k) * QT::t());
        }
    return RatFn::fraction(std::move(num), dens);
}

// ℓ(I) = |I| n - C(|I|,2) - Σ_{i∈I} i.
inline int ell(const SubsetMask& I, int n) { return I.size() * n - choose2(I.size()) - I.sum(); }

inline std::vector<SubsetMask> subsets_within(const SubsetMask& S) {
    std::vector<SubsetMask> out;
    const unsigned b = S.bits();
    for (unsigned s = b;; s = (s - 1) & b) {
        out.emplace_back(s);
        if (s == 0) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// F(u;x,y) over the x-subsets, coefficient-wise in u.
inline UPoly F_xy(int n, int m) {
    detail::require_vars(n, m, "F_xy");
    return detail::F_generic(n + m, detail::slots(1, n), detail::slots(n + 1, m));
}

/// F(u;y,x) over the y-subsets, coefficient-wise in u.
inline UPoly F_yx(int n, int m) {
    detail::require_vars(n, m, "F_yx");
    return detail::F_generic(n + m, detail::slots(n + 1, m), detail::slots(1, n));
}

/// Partial fractions, the Mimachi expansions of b and F(u;y,x), their specializations at
/// u = t^{n-m+1} and u = 1, the single-y classical identities and the F duality.
inline Report verify_expansion_identities(int n, int m) {
    detail::require_vars(n, m, "verify_expansion_identities");
    const int N = n + m;
    const detail::XYVars v{n, m};
    const QT t = QT::t();
    const XPoly one = v.c(QT(1));
    const std::string nm = "n=" + std::to_string(n) + " m=" + std::to_string(m);
    Report rep("Mimachi expansions " + nm);
    const SubsetMask Y = SubsetMask::full(m);

    std::map<std::pair<SubsetMask, SubsetMask>, RatFn> h;
    auto H = [&](const SubsetMask& I, const SubsetMask& K) -> const RatFn& {
        auto it = h.find({I, K});
        if (it == h.end()) it = h.emplace(std::make_pair(I, K), mimachi_h(n, I, K, m)).first;
        return it->second;
    };

    // t^m Π_k (1 - x y_k)/(1 - t x y_k) = 1 + Σ_k (t-1)/(1 - t x y_k) Π_{l≠k} (t y_k - y_l)/(y_k - y_l)
    for (int i = 1; i <= n; ++i) {
        RatFn lhs = detail::b_IK(v, SubsetMask{i}, Y);
        RatFn rhs(one);
        for (int k = 1; k <= m; ++k)
            rhs += RatFn::fraction(v.c(t - 1), {one - v.x(i) * v.y(k) * t}) * detail::a_KL(v, SubsetMask{k}, Y);
        rep.record("partial fractions of t^m prod_k (1-x y_k)/(1-t x y_k)", lhs == rhs, nm + " x=x_" + std::to_string(i));
    }

    // b^J_L = Σ a_{K|L} h^I_K for J = [n-s+1, n]; J = [1, n], L = [1, m] is the full expansion.
    for (int s = 0; s <= n; ++s) {
        const SubsetMask J = SubsetMask::interval(n - s + 1, n);
        for (const auto& L : detail::subsets_within(Y)) {
            RatFn rhs(N);
            for (const auto& I : detail::subsets_within(J))
                for (const auto& K : detail::subsets_within(L))
                    if (I.size() == K.size()) rhs += detail::a_KL(v, K, L) * H(I, K);
            const std::string rel = (s == n && L == Y) ? "b^[1,n]_[1,m] = sum a_K h^I_K" : "b^J_L = sum a_{K|L} h^I_K";
            rep.record(rel, detail::b_IK(v, J, L) == rhs, nm + " J=" + J.to_string() + " L=" + L.to_string());
        }
    }

    const UPoly Fyx = F_yx(n, m);
    const int rmax = std::min(n, m);
    UPoly basis13(static_cast<std::size_t>(m + 1), RatFn(N)), basis22(static_cast<std::size_t>(m + 1), RatFn(N));
    for (int r = 0; r <= rmax; ++r) {
        RatFn s13(N), s22(N);
        for (const auto& I : subsets_of_size(n, r))
            for (const auto& K : subsets_of_size(m, r)) {
                const RatFn aKh = detail::a_KL(v, K, Y) * H(I, K);
                s13 += aKh;
                s22 += (aKh * QT::monomial(1, 0, -detail::ell(I, n) - detail::choose2(r))).times_monomial(v.xmono(I) * v.ymono(K));
            }
        const QT sign(r % 2 ? -1 : 1);
        // (-u)^r (u t^{r-n}; t)_{m-r} t^{C(r,2)-rn}
        std::vector<QT> p13(static_cast<std::size_t>(r), QT(0));
        for (const auto& c : detail::qpoch_u(t.pow(r - n), m - r)) p13.push_back(c * sign * t.pow(detail::choose2(r) - r * n));
        // (-u)^r (u; t)_{m-r}
        std::vector<QT> p22(static_cast<std::size_t>(r), QT(0));
        for (const auto& c : detail::qpoch_u(QT(1), m - r)) p22.push_back(c * sign);
        const UPoly a = detail::upoly_times(p13, UPoly{s13}, N), b = detail::upoly_times(p22, UPoly{s22}, N);
        for (std::size_t e = 0; e < a.size() && e < basis13.size(); ++e) basis13[e] += a[e];
        for (std::size_t e = 0; e < b.size() && e < basis22.size(); ++e) basis22[e] += b[e];
    }
    rep.record("F(u;y,x) = sum (-u)^r (u t^{r-n};t)_{m-r} t^{C(r,2)-rn} a_K h^I_K", detail::upoly_equal(Fyx, basis13, N), nm);
    rep.record("F(u;y,x) = sum (-u)^r (u;t)_{m-r} t^{-l(I)-C(r,2)} a_K x_I y_K h^I_K", detail::upoly_equal(Fyx, basis22, N), nm);

    // the specializations u = t^{n-m+1} and u = 1
    RatFn s15(N), s23(N);
    if (m <= n) {
        const QT c = QT::monomial(m % 2 ? -1 : 1, 0, -detail::choose2(m));
        for (const auto& I : subsets_of_size(n, m)) {
            s15 += H(I, Y) * c;
            s23 += (H(I, Y) * (c * t.pow(-detail::ell(I, n)))).times_monomial(v.xmono(I) * v.ymono(Y));
        }
    }
    rep.record("F(t^{n-m+1};y,x) = (-1)^m t^{-C(m,2)} sum_I h^I_[1,m]", detail::upoly_eval(Fyx, t.pow(n - m + 1), N) == s15, nm);
    rep.record("F(1;y,x) = (-1)^m t^{-C(m,2)} y_1..y_m sum_I t^{-l(I)} x_I h^I_[1,m]", detail::upoly_eval(Fyx, QT(1), N) == s23,
               nm);

    // single-y identities, one y at a time
    for (int k = 1; k <= m; ++k) {
        const XPoly y = v.y(k);
        auto g = [&](int i) { return RatFn::fraction(one - v.x(i) * y, {one - v.x(i) * y * t}); };
        RatFn prod(one), rhs17(N), rhs25(N);
        for (int i = 1; i <= n; ++i) prod *= g(i);
        for (int i = 1; i <= n; ++i) {
            RatFn tail(one);
            for (int j = i + 1; j <= n; ++j) tail *= g(j);
            rhs17 += RatFn::fraction(v.c(t.pow(n - i) * (1 - t)), {one - v.x(i) * y * t}) * tail;
            rhs25 += RatFn::fraction(v.x(i) * y * (1 - t), {one - v.x(i) * y * t}) * tail;
        }
        const std::string w = nm + " y=y_" + std::to_string(k);
        rep.record("1 - t^n prod (1-x_i y)/(1-t x_i y) = sum t^{n-i}(1-t)/(1-t x_i y) prod_{j>i}",
                   RatFn(one) - prod * t.pow(n) == rhs17, w);
        rep.record("1 - prod (1-x_i y)/(1-t x_i y) = sum (1-t) x_i y/(1-t x_i y) prod_{j>i}", RatFn(one) - prod == rhs25, w);
    }

    // F(u;x,y) = (u;t)_{n-m} F(u t^{n-m};y,x)
    if (m <= n) {
        const UPoly rhs = detail::upoly_times(detail::qpoch_u(QT(1), n - m), detail::upoly_rescale(Fyx, t.pow(n - m)), N);
        rep.record("F(u;x,y) = (u;t)_{n-m} F(u t^{n-m};y,x)", detail::upoly_equal(F_xy(n, m), rhs, N), nm);
    }
    return rep;
}

}  // namespace qtmac
