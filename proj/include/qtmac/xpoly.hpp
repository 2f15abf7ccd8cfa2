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

#include <qtmac/monomial.hpp>
#include <qtmac/parse.hpp>
#include <qtmac/sym_expansion.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qtmac {

class NotSymmetric : public std::invalid_argument {
   public:
    NotSymmetric(const std::string& what, int i, int j) : std::invalid_argument(what), i_(i), j_(j) {}
    /// Witness transposition (1-based).
    std::pair<int, int> witness() const { return {i_, j_}; }

   private:
    int i_, j_;
};

class TooFewVariables : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Subset of [1, n], stored as a bit mask (bit i-1 for index i).
class SubsetMask {
   public:
    SubsetMask() = default;
    explicit SubsetMask(unsigned bits) : bits_(bits) {}
    SubsetMask(std::initializer_list<int> members) {
        for (int i : members) insert(i);
    }
    static SubsetMask from_vector(const std::vector<int>& members) {
        SubsetMask s;
        for (int i : members) s.insert(i);
        return s;
    }
    /// [a, b]; empty when a > b.
    static SubsetMask interval(int a, int b) {
        SubsetMask s;
        for (int i = a; i <= b; ++i) s.insert(i);
        return s;
    }
    static SubsetMask full(int n) { return interval(1, n); }

    void insert(int i) {
        if (i < 1 || i > 30) throw std::out_of_range("SubsetMask index");
        bits_ |= 1U << static_cast<unsigned>(i - 1);
    }
    bool contains(int i) const { return i >= 1 && i <= 30 && ((bits_ >> static_cast<unsigned>(i - 1)) & 1U); }
    int size() const { return __builtin_popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    unsigned bits() const { return bits_; }
    std::vector<int> members() const {
        std::vector<int> r;
        for (int i = 1; i <= 30; ++i)
            if (contains(i)) r.push_back(i);
        return r;
    }
    int sum() const {
        int s = 0;
        for (int i : members()) s += i;
        return s;
    }
    SubsetMask complement(int n) const { return SubsetMask(full(n).bits_ & ~bits_); }
    bool within(int n) const { return (bits_ & ~full(n).bits_) == 0; }

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
    friend auto operator<=>(const SubsetMask& a, const SubsetMask& b) { return a.bits_ <=> b.bits_; }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int i : members()) {
            if (!first) s += ",";
            first = false;
            s += std::to_string(i);
        }
        return s + "}";
    }

   private:
    unsigned bits_ = 0;
};

/// All subsets of [1, n] of size r, in increasing bit order.
inline std::vector<SubsetMask> subsets_of_size(int n, int r) {
    std::vector<SubsetMask> out;
    if (r < 0 || r > n) return out;
    for (unsigned b = 0; b < (1U << static_cast<unsigned>(n)); ++b)
        if (__builtin_popcount(b) == r) out.emplace_back(b);
    return out;
}

class XPoly;

class NotDivisibleX : public NotDivisible {
   public:
    NotDivisibleX(const std::string& what, std::string remainder)
        : NotDivisible(what + "; remainder witness: " + remainder), remainder_(std::move(remainder)) {}
    const std::string& remainder() const { return remainder_; }

   private:
    std::string remainder_;
};

/// Sparse Laurent polynomial in x_1..x_n over Q(q,t).
class XPoly {
   public:
    using TermMap = std::map<Monomial, QT>;

    XPoly() = default;
    explicit XPoly(int n) : n_(n) {
        if (n < 0 || n > kMaxVars) throw std::out_of_range("XPoly: number of variables");
    }
    XPoly(int n, const QT& c) : XPoly(n) {
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }

    static XPoly constant(int n, const QT& c) { return XPoly(n, c); }
    /// x_i, 1-based.
    static XPoly var(int n, int i, int power = 1) {
        if (i < 1 || i > n) throw std::out_of_range("XPoly::var index");
        return monomial(n, Monomial::var(i - 1, power), QT(1));
    }
    static XPoly monomial(int n, const Monomial& m, const QT& c) {
        XPoly r(n);
        if (!c.is_zero()) r.terms_.emplace(m, c);
        return r;
    }

    int nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    QT coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? QT(0) : it->second;
    }

    void add_term(const Monomial& m, const QT& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::pair<const Monomial, QT>& leading() const { return *terms_.rbegin(); }
    const std::pair<const Monomial, QT>& trailing() const { return *terms_.begin(); }

    XPoly operator-() const {
        XPoly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    XPoly& operator+=(const XPoly& o) {
        check_compat(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    XPoly& operator-=(const XPoly& o) {
        check_compat(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }

    /// a += c * m * b.
    void add_scaled(const XPoly& b, const QT& c, const Monomial& m = Monomial{}) {
        check_compat(b);
        if (c.is_zero()) return;
        for (const auto& [bm, bc] : b.terms_) add_term(bm * m, c.is_one() ? bc : bc * c);
    }

    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        a.check_compat(b);
        XPoly r(std::max(a.n_, b.n_));
        if (a.is_zero() || b.is_zero()) return r;
        std::unordered_map<Monomial, QT, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        for (const auto& [am, ac] : a.terms_)
            for (const auto& [bm, bc] : b.terms_) {
                auto [it, inserted] = acc.try_emplace(am * bm, QT());
                it->second += ac * bc;
            }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.emplace_hint(r.terms_.end(), m, std::move(c));
        return r;
    }
    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

    friend XPoly operator*(const XPoly& a, const QT& c) {
        XPoly r(a.n_);
        if (c.is_zero()) return r;
        for (const auto& [m, v] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, v * c);
        return r;
    }
    friend XPoly operator*(const QT& c, const XPoly& a) { return a * c; }

    /// Multiplies by the monomial x^m.
    XPoly times_monomial(const Monomial& m) const {
        XPoly r(n_);
        for (const auto& [am, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), am * m, c);
        return r;
    }

    XPoly pow(unsigned k) const {
        XPoly r(n_, QT(1)), b(*this);
        while (k) {
            if (k & 1U) r *= b;
            k >>= 1U;
            if (k) b *= b;
        }
        return r;
    }

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    XPoly map_coeffs(const std::function<QT(const QT&)>& f) const {
        XPoly r(n_);
        for (const auto& [m, c] : terms_) {
            QT v = f(c);
            if (!v.is_zero()) r.terms_.emplace_hint(r.terms_.end(), m, std::move(v));
        }
        return r;
    }

    /// x_i -> q^{a_i} t^{b_i} x_i for each i; `shifts[i-1] = {a_i, b_i}`.
    XPoly scale_vars(const std::vector<std::pair<int, int>>& shifts) const {
        XPoly r(n_);
        for (const auto& [m, c] : terms_) {
            int qe = 0, te = 0;
            for (std::size_t i = 0; i < shifts.size(); ++i) {
                qe += shifts[i].first * m[static_cast<int>(i)];
                te += shifts[i].second * m[static_cast<int>(i)];
            }
            r.terms_.emplace_hint(r.terms_.end(), m, (qe == 0 && te == 0) ? c : c * QT::monomial(1, qe, te));
        }
        return r;
    }

    /// x_i -> q x_i for i in I.
    XPoly qshift(const SubsetMask& I) const {
        if (I.empty()) return *this;
        std::vector<std::pair<int, int>> s(static_cast<std::size_t>(n_), {0, 0});
        for (int i : I.members()) {
            if (i > n_) throw std::out_of_range("qshift index");
            s[static_cast<std::size_t>(i - 1)] = {1, 0};
        }
        return scale_vars(s);
    }

    /// Variable relabeling x_i -> x_{w(i)}; `w[i-1] = w(i)` (1-based values).
    XPoly permute(const std::vector<int>& w) const {
        if (static_cast<int>(w.size()) != n_) throw std::invalid_argument("permute: size mismatch");
        XPoly r(n_);
        for (const auto& [m, c] : terms_) {
            Monomial nm;
            for (int i = 0; i < n_; ++i) nm[w[static_cast<std::size_t>(i)] - 1] = m[i];
            r.terms_.emplace(nm, c);
        }
        return r;
    }

    /// Exchanges x_i and x_j (1-based).
    XPoly swap_vars(int i, int j) const {
        XPoly r(n_);
        for (const auto& [m, c] : terms_) {
            Monomial nm(m);
            std::swap(nm[i - 1], nm[j - 1]);
            r.terms_.emplace(nm, c);
        }
        return r;
    }

    /// x_i -> x_i^{-1} and q, t -> q^{-1}, t^{-1} coefficientwise.
    XPoly iota() const {
        XPoly r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m.inverse(), c.iota());
        return r;
    }

    /// Re-embeds into n2 ≥ n variables, placing x_i at slot offset + i.
    XPoly embed(int n2, int offset = 0) const {
        XPoly r(n2);
        for (const auto& [m, c] : terms_) {
            Monomial nm;
            for (int i = 0; i < n_; ++i) nm[offset + i] = m[i];
            r.terms_.emplace(nm, c);
        }
        return r;
    }

    int total_degree_max() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }
    int total_degree_min() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

    /// Smallest exponent of each variable across all terms (zero-padded).
    Monomial min_exponents() const {
        Monomial r;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            for (int i = 0; i < kMaxVars; ++i) r[i] = first ? m[i] : std::min(r[i], m[i]);
            first = false;
        }
        return r;
    }

    bool coefficients_laurent_integral() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_laurent_integral(); });
    }

    /// Human-readable form, terms in decreasing graded-lex order.
    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string mono;
            for (int i = 0; i < n_; ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(i)] : "x" + std::to_string(i + 1);
                if (m[i] != 1) mono += "^" + std::to_string(m[i]);
            }
            if (!first) s += " + ";
            first = false;
            if (mono.empty())
                s += "(" + c.to_string() + ")";
            else if (c.is_one())
                s += mono;
            else
                s += "(" + c.to_string() + ")*" + mono;
        }
        return s;
    }

   private:
    void check_compat(const XPoly& o) const {
        if (n_ != o.n_ && !o.is_zero() && !is_zero())
            throw std::invalid_argument("XPoly: variable count mismatch");
    }

    int n_ = 0;
    TermMap terms_;
};

/// Exact quotient f / g; throws NotDivisibleX with a remainder witness.
inline XPoly exact_divide(const XPoly& f, const XPoly& g) {
    if (g.is_zero()) throw DivisionByZero("XPoly division by zero");
    const int n = std::max(f.nvars(), g.nvars());
    XPoly quot(n);
    if (f.is_zero()) return quot;
    if (g.size() == 1) {
        const auto& [gm, gc] = g.leading();
        const QT inv = gc.inverse();
        for (const auto& [m, c] : f.terms()) quot.add_term(m / gm, c * inv);
        return quot;
    }
    const Monomial bound = f.trailing().first / g.trailing().first;
    const auto& [lm, lc] = g.leading();
    const bool unit = lc.is_one();
    const bool neg_unit = (-lc).is_one();
    const QT inv = (unit || neg_unit) ? QT(1) : lc.inverse();
    XPoly rem(f);
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        Monomial qm = rm / lm;
        if (qm < bound) throw NotDivisibleX("exact_divide: not divisible", rem.to_string());
        QT qc = unit ? rc : neg_unit ? -rc : rc * inv;
        rem.add_scaled(g, -qc, qm);
        quot.add_term(qm, qc);
    }
    return quot;
}

/// f / (x_i - x_j) for 1-based i, j.
inline XPoly divide_by_difference(const XPoly& f, int i, int j) {
    XPoly d = XPoly::var(f.nvars(), i) - XPoly::var(f.nvars(), j);
    return exact_divide(f, d);
}

/// Δ(x) = Π_{i<j} (x_i - x_j).
inline XPoly vandermonde(int n) {
    XPoly r(n, QT(1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) r *= XPoly::var(n, i) - XPoly::var(n, j);
    return r;
}

/// f / Δ(x), by successive division by the factors x_i - x_j.
inline XPoly vandermonde_divide(const XPoly& f) {
    const int n = f.nvars();
    XPoly r(f);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) r = divide_by_difference(r, i, j);
    return r;
}

/// e_r over the variables x_j (j in J), or over x_j^{-1} when inverted.
inline XPoly elementary_on_subset(int n, int r, const SubsetMask& J, bool inverted = false) {
    XPoly out(n);
    if (r < 0 || r > J.size()) return out;
    const std::vector<int> mem = J.members();
    const int k = static_cast<int>(mem.size());
    for (unsigned b = 0; b < (1U << static_cast<unsigned>(k)); ++b) {
        if (__builtin_popcount(b) != r) continue;
        Monomial m;
        for (int a = 0; a < k; ++a)
            if ((b >> static_cast<unsigned>(a)) & 1U) m[mem[static_cast<std::size_t>(a)] - 1] = inverted ? -1 : 1;
        out.add_term(m, QT(1));
    }
    return out;
}

/// x_I = Π_{i in I} x_i (or its inverse).
inline Monomial subset_monomial(const SubsetMask& I, int power = 1) {
    Monomial m;
    for (int i : I.members()) m[i - 1] = static_cast<std::int16_t>(power);
    return m;
}

/// All monomials x^a with a ≥ 0 and |a| ≤ d, in graded-lex order.
inline std::vector<Monomial> monomials_up_to(int n, int d) {
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[i] = static_cast<std::int16_t>(k);
            self(self, i + 1, left - k);
        }
        cur[i] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

/// Symmetry test; returns the first failing adjacent transposition.
inline std::optional<std::pair<int, int>> symmetry_witness(const XPoly& f) {
    for (int i = 1; i < f.nvars(); ++i)
        if (f.swap_vars(i, i + 1) != f) return std::make_pair(i, i + 1);
    return std::nullopt;
}

inline bool is_symmetric(const XPoly& f) { return !symmetry_witness(f).has_value(); }

/// Symmetric f -> Σ c_μ m_μ.
inline SymExpansion to_msym(const XPoly& f, bool check = true) {
    if (check) {
        if (auto w = symmetry_witness(f))
            throw NotSymmetric("to_msym: polynomial is not symmetric under s_" + std::to_string(w->first), w->first,
                               w->second);
    }
    SymExpansion r(Basis::m);
    for (const auto& [m, c] : f.terms()) {
        bool dominant = true;
        for (int i = 0; i + 1 < f.nvars(); ++i)
            if (m[i] < m[i + 1]) dominant = false;
        if (!dominant) continue;
        if (!m.nonnegative()) throw std::invalid_argument("to_msym: negative exponent");
        std::vector<int> parts;
        for (int i = 0; i < f.nvars(); ++i) parts.push_back(m[i]);
        r.coeffs.emplace(Partition(std::move(parts)), c);
    }
    return r;
}

/// m_μ in n variables.
inline XPoly monomial_symmetric(const Partition& mu, int n) {
    if (mu.length() > n) return XPoly(n);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < mu.length(); ++i) e[static_cast<std::size_t>(i)] = mu.parts()[static_cast<std::size_t>(i)];
    std::sort(e.begin(), e.end());
    XPoly r(n);
    do {
        Monomial m;
        for (int i = 0; i < n; ++i) m[i] = static_cast<std::int16_t>(e[static_cast<std::size_t>(i)]);
        r.add_term(m, QT(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

/// Σ c_μ m_μ -> polynomial in n variables.
inline XPoly from_msym(const SymExpansion& e, int n) {
    if (e.basis != Basis::m) throw std::invalid_argument("from_msym: expansion must be in the m basis");
    XPoly r(n);
    for (const auto& [mu, c] : e.coeffs) {
        if (mu.length() > n) throw TooFewVariables("from_msym: " + mu.to_string() + " needs more variables");
        r.add_scaled(monomial_symmetric(mu, n), c);
    }
    return r;
}

/// Parses a polynomial in the given variable names over Q(q,t), e.g. "x1^2 - t*x2".
inline XPoly parse_xpoly(std::string_view s, int n, const std::vector<std::string>& names = {}) {
    auto resolve = [n, &names](const std::string& name) -> XPoly {
        if (name == "q") return XPoly(n, QT::q());
        if (name == "t") return XPoly(n, QT::t());
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return XPoly::var(n, static_cast<int>(i) + 1);
        if (names.empty() && name.size() > 1 && name[0] == 'x') {
            int i = std::stoi(name.substr(1));
            if (i >= 1 && i <= n) return XPoly::var(n, i);
        }
        throw ParseError("unknown symbol '" + name + "'");
    };
    auto div = [](const XPoly& a, const XPoly& b) { return exact_divide(a, b); };
    auto pw = [n](const XPoly& a, int e) {
        if (e >= 0) return a.pow(static_cast<unsigned>(e));
        if (a.size() != 1) throw ParseError("negative power of a non-monomial");
        const auto& [m, c] = a.leading();
        Monomial mi = m.inverse();
        XPoly inv = XPoly::monomial(n, mi, c.inverse());
        return inv.pow(static_cast<unsigned>(-e));
    };
    ExprParser<XPoly> p(resolve, div, pw, [n](const BigInt& c) { return XPoly(n, QT(c)); });
    return p.parse(s);
}

}  // namespace qtmac
