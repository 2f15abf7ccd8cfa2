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

#include <qtmac/report.hpp>
#include <qtmac/xpoly.hpp>

#include <memory>
#include <string>
#include <vector>

namespace qtmac {

class NonReducedWord : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// (s_i f - f) / (x_{i+1} - x_i), computed termwise.
inline XPoly divided_difference(const XPoly& f, int i) {
    if (i < 1 || i >= f.nvars()) throw std::out_of_range("divided_difference index");
    XPoly r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        const int a = m[i - 1], b = m[i];
        if (a == b) continue;
        const int lo = std::min(a, b), d = std::abs(a - b);
        const QT coef = a > b ? c : -c;
        for (int k = 0; k < d; ++k) {
            Monomial nm(m);
            nm[i - 1] = static_cast<std::int16_t>(lo + d - 1 - k);
            nm[i] = static_cast<std::int16_t>(lo + k);
            r.add_term(nm, coef);
        }
    }
    return r;
}

/// s_i f.
inline XPoly apply_S(const XPoly& f, int i) { return f.swap_vars(i, i + 1); }

/// T_i f = t f + (x_{i+1} - t x_i)(s_i f - f)/(x_{i+1} - x_i).
inline XPoly apply_T(const XPoly& f, int i) {
    XPoly dd = divided_difference(f, i);
    XPoly r = f * QT::t();
    r.add_scaled(dd, QT(1), Monomial::var(i));
    r.add_scaled(dd, -QT::t(), Monomial::var(i - 1));
    return r;
}

/// T_i^{-1} = t^{-1}(T_i + 1 - t).
inline XPoly apply_Tinv(const XPoly& f, int i) {
    XPoly r = apply_T(f, i);
    r.add_scaled(f, QT(1) - QT::t());
    return r * QT::t().inverse();
}

/// T̄_i = t^{-1} T_i.
inline XPoly apply_Tbar(const XPoly& f, int i) { return apply_T(f, i) * QT::t().inverse(); }

/// T̄_i^{-1} = T_i + 1 - t.
inline XPoly apply_Tbarinv(const XPoly& f, int i) {
    XPoly r = apply_T(f, i);
    r.add_scaled(f, QT(1) - QT::t());
    return r;
}

/// (ωf)(x) = f(q x_n, x_1, ..., x_{n-1}); the inverse is f(x_2, ..., x_n, q^{-1} x_1).
inline XPoly apply_omega(const XPoly& f, bool inverse = false) {
    const int n = f.nvars();
    XPoly r(n);
    for (const auto& [m, c] : f.terms()) {
        Monomial nm;
        int qe = 0;
        if (!inverse) {
            for (int j = 0; j + 1 < n; ++j) nm[j] = m[j + 1];
            nm[n - 1] = m[0];
            qe = m[0];
        } else {
            for (int j = 1; j < n; ++j) nm[j] = m[j - 1];
            nm[0] = m[n - 1];
            qe = -m[n - 1];
        }
        r.add_term(nm, qe == 0 ? c : c * QT::monomial(1, qe, 0));
    }
    return r;
}

/// Y_i = T̄_i ⋯ T̄_{n-1} ω T̄_1^{-1} ⋯ T̄_{i-1}^{-1}, or the dual
/// Y*_i = T̄_i^{-1} ⋯ T̄_{n-1}^{-1} ω T̄_1 ⋯ T̄_{i-1}; rightmost factor first.
inline XPoly apply_Y(const XPoly& f, int i, bool dual = false) {
    const int n = f.nvars();
    if (i < 1 || i > n) throw std::out_of_range("apply_Y index");
    XPoly r(f);
    for (int j = i - 1; j >= 1; --j) r = dual ? apply_Tbar(r, j) : apply_Tbarinv(r, j);
    r = apply_omega(r);
    for (int j = n - 1; j >= i; --j) r = dual ? apply_Tbarinv(r, j) : apply_Tbar(r, j);
    return r;
}

/// ι f: x -> x^{-1}, q -> q^{-1}, t -> t^{-1}.
inline XPoly apply_iota(const XPoly& f) { return f.iota(); }

/// ι(Y_i) f = ι(Y_i(ι f)).
inline XPoly apply_iota_Y(const XPoly& f, int i) { return apply_Y(f.iota(), i).iota(); }

/// Number of inversions of s_{w_1} ⋯ s_{w_p} as a permutation of [1, n].
inline int word_length_of_product(int n, const std::vector<int>& word) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    for (int s : word) std::swap(p[static_cast<std::size_t>(s - 1)], p[static_cast<std::size_t>(s)]);
    int inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
    return inv;
}

/// T_w = T_{i_1} ⋯ T_{i_p} for a reduced word (i_1, ..., i_p).
inline XPoly apply_Tw(const XPoly& f, const std::vector<int>& word) {
    if (static_cast<int>(word.size()) > word_length_of_product(f.nvars(), word))
        throw NonReducedWord("apply_Tw: word is not reduced");
    XPoly r(f);
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply_T(r, *it);
    return r;
}

/// Word in the operator alphabet, applied right to left.
class OpWord {
   public:
    enum class Kind { S, Tau, T, Tinv, Tbar, Tbarinv, Omega, OmegaInv, Y, Ystar, MulBy, Scalar };

    struct Atom {
        Kind kind;
        int index = 0;
        SubsetMask set;
        std::shared_ptr<const XPoly> poly;
        QT scalar;
    };

    OpWord() = default;

    static OpWord atom(Kind k, int index = 0) { return OpWord({Atom{k, index, {}, nullptr, QT(1)}}); }
    static OpWord S(int i) { return atom(Kind::S, i); }
    static OpWord T(int i) { return atom(Kind::T, i); }
    static OpWord Tinv(int i) { return atom(Kind::Tinv, i); }
    static OpWord Tbar(int i) { return atom(Kind::Tbar, i); }
    static OpWord Tbarinv(int i) { return atom(Kind::Tbarinv, i); }
    static OpWord Omega() { return atom(Kind::Omega); }
    static OpWord OmegaInv() { return atom(Kind::OmegaInv); }
    static OpWord Y(int i) { return atom(Kind::Y, i); }
    static OpWord Ystar(int i) { return atom(Kind::Ystar, i); }
    static OpWord Tau(const SubsetMask& I) { return OpWord({Atom{Kind::Tau, 0, I, nullptr, QT(1)}}); }
    static OpWord MulBy(const XPoly& p) {
        return OpWord({Atom{Kind::MulBy, 0, {}, std::make_shared<const XPoly>(p), QT(1)}});
    }
    static OpWord Scalar(const QT& c) { return OpWord({Atom{Kind::Scalar, 0, {}, nullptr, c}}); }

    /// Composition: (a * b) f = a(b(f)).
    friend OpWord operator*(const OpWord& a, const OpWord& b) {
        std::vector<Atom> v(a.factors_);
        v.insert(v.end(), b.factors_.begin(), b.factors_.end());
        return OpWord(std::move(v));
    }

    const std::vector<Atom>& factors() const { return factors_; }

    XPoly apply(const XPoly& f) const {
        XPoly r(f);
        for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) r = apply_atom(*it, r);
        return r;
    }

   private:
    explicit OpWord(std::vector<Atom> f) : factors_(std::move(f)) {}

    static XPoly apply_atom(const Atom& a, const XPoly& f) {
        switch (a.kind) {
            case Kind::S: return apply_S(f, a.index);
            case Kind::Tau: return f.qshift(a.set);
            case Kind::T: return apply_T(f, a.index);
            case Kind::Tinv: return apply_Tinv(f, a.index);
            case Kind::Tbar: return apply_Tbar(f, a.index);
            case Kind::Tbarinv: return apply_Tbarinv(f, a.index);
            case Kind::Omega: return apply_omega(f, false);
            case Kind::OmegaInv: return apply_omega(f, true);
            case Kind::Y: return apply_Y(f, a.index, false);
            case Kind::Ystar: return apply_Y(f, a.index, true);
            case Kind::MulBy: return f * *a.poly;
            case Kind::Scalar: return f * a.scalar;
        }
        throw std::logic_error("OpWord: unknown atom");
    }

    std::vector<Atom> factors_;
};

/// Checks the Hecke, rotation and Dunkl relations on every monomial of degree ≤ max_degree.
inline Report verify_hecke_relations(int n, int max_degree) {
    if (n < 2) throw std::invalid_argument("verify_hecke_relations requires n >= 2");
    Report rep("hecke relations n=" + std::to_string(n) + " degree<=" + std::to_string(max_degree));
    const QT t = QT::t();
    for (const Monomial& m : monomials_up_to(n, max_degree)) {
        const XPoly f = XPoly::monomial(n, m, QT(1));
        const std::string w = f.to_string();
        std::vector<XPoly> Tf, Yf, Ysf;
        for (int i = 1; i < n; ++i) Tf.push_back(apply_T(f, i));
        for (int i = 1; i <= n; ++i) {
            Yf.push_back(apply_Y(f, i));
            Ysf.push_back(apply_Y(f, i, true));
        }
        auto Ti = [&](int i) -> const XPoly& { return Tf[static_cast<std::size_t>(i - 1)]; };
        auto Yi = [&](int i) -> const XPoly& { return Yf[static_cast<std::size_t>(i - 1)]; };
        auto Ysi = [&](int i) -> const XPoly& { return Ysf[static_cast<std::size_t>(i - 1)]; };
        for (int i = 1; i < n; ++i) {
            // (T - t)(T + 1) f = T(Tf) + (1 - t) Tf - t f
            XPoly quad = apply_T(Ti(i), i) + Ti(i) * (QT(1) - t) - f * t;
            rep.record("quadratic (T_i - t)(T_i + 1) = 0", quad.is_zero(), "i=" + std::to_string(i) + " f=" + w);
            rep.record("T_i^{-1} T_i = 1", apply_Tinv(Ti(i), i) == f, "i=" + std::to_string(i) + " f=" + w);
            for (int j = i + 2; j < n; ++j)
                rep.record("commuting T_i T_j = T_j T_i", apply_T(Ti(j), i) == apply_T(Ti(i), j),
                           "i=" + std::to_string(i) + " j=" + std::to_string(j) + " f=" + w);
            if (i + 1 < n) {
                XPoly lhs = apply_T(apply_T(Ti(i), i + 1), i);
                XPoly rhs = apply_T(apply_T(Ti(i + 1), i), i + 1);
                rep.record("braid T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}", lhs == rhs, "i=" + std::to_string(i) + " f=" + w);
            }
            if (i >= 2) {
                rep.record("rotation omega T_i = T_{i-1} omega", apply_omega(Ti(i)) == apply_T(apply_omega(f), i - 1),
                           "i=" + std::to_string(i) + " f=" + w);
                rep.record("rotation omega s_i = s_{i-1} omega", apply_omega(apply_S(f, i)) == apply_S(apply_omega(f), i - 1),
                           "i=" + std::to_string(i) + " f=" + w);
            }
            // with T_0 = omega T_1 omega^{-1}, the relation omega T_0 = T_{n-1} omega
            rep.record("rotation omega T_0 = T_{n-1} omega",
                       apply_omega(apply_omega(apply_T(apply_omega(f, true), 1))) == apply_T(apply_omega(f), n - 1),
                       "f=" + w);
            rep.record("Tbar_i Y_{i+1} Tbar_i = Y_i", apply_Tbar(apply_Y(apply_Tbar(f, i), i + 1), i) == Yi(i),
                       "i=" + std::to_string(i) + " f=" + w);
            rep.record("Tbar_i Y*_i Tbar_i = Y*_{i+1}", apply_Tbar(apply_Y(apply_Tbar(f, i), i, true), i) == Ysi(i + 1),
                       "i=" + std::to_string(i) + " f=" + w);
            for (int j = 1; j <= n; ++j) {
                if (j == i || j == i + 1) continue;
                rep.record("Tbar_i Y_j = Y_j Tbar_i", apply_Tbar(Yi(j), i) == apply_Y(apply_Tbar(f, i), j),
                           "i=" + std::to_string(i) + " j=" + std::to_string(j) + " f=" + w);
                rep.record("Tbar_i Y*_j = Y*_j Tbar_i", apply_Tbar(Ysi(j), i) == apply_Y(apply_Tbar(f, i), j, true),
                           "i=" + std::to_string(i) + " j=" + std::to_string(j) + " f=" + w);
            }
        }
        XPoly wn(f);
        for (int k = 0; k < n; ++k) wn = apply_omega(wn);
        rep.record("omega^n = Euler operator", wn == f.qshift(SubsetMask::full(n)), "f=" + w);
        rep.record("omega^{-1} omega = 1", apply_omega(apply_omega(f), true) == f, "f=" + w);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                rep.record("Dunkl commutativity [Y_i, Y_j] = 0", apply_Y(Yi(j), i) == apply_Y(Yi(i), j),
                           "i=" + std::to_string(i) + " j=" + std::to_string(j) + " f=" + w);
                rep.record("dual Dunkl commutativity [Y*_i, Y*_j] = 0",
                           apply_Y(Ysi(j), i, true) == apply_Y(Ysi(i), j, true),
                           "i=" + std::to_string(i) + " j=" + std::to_string(j) + " f=" + w);
            }
        for (int i = 1; i <= n; ++i)
            rep.record("iota(Y_i) = Y*_i", apply_iota_Y(f, i) == Ysi(i), "i=" + std::to_string(i) + " f=" + w);
    }
    return rep;
}

}  // namespace qtmac
