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

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtmac {

using BigInt = mpz_class;
using BigRational = mpq_class;

class DivisionByZero : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class NotDivisible : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// One term c * q^q * t^t of an IntPoly2.
struct Term2 {
    int q = 0;
    int t = 0;
    BigInt c;
};

namespace detail {

// Dense univariate polynomial over Z, coefficient of t^k at index k.
using ZPoly = std::vector<BigInt>;

inline void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline BigInt content(const ZPoly& a) {
    BigInt g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline ZPoly scale(const ZPoly& a, const BigInt& c) {
    if (c == 0) return {};
    ZPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

inline ZPoly div_scalar(const ZPoly& a, const BigInt& c) {
    ZPoly r(a);
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

// Exact division over Z; nullopt when b does not divide a.
inline std::optional<ZPoly> exact_div(ZPoly a, const ZPoly& b) {
    if (b.empty()) throw DivisionByZero("ZPoly division by zero");
    trim(a);
    if (a.empty()) return ZPoly{};
    if (a.size() < b.size()) return std::nullopt;
    ZPoly q(a.size() - b.size() + 1, 0);
    const BigInt& lb = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt& top = a[k + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        BigInt f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        q[k] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
    }
    for (const auto& c : a)
        if (c != 0) return std::nullopt;
    trim(q);
    return q;
}

inline ZPoly primitive(const ZPoly& a) {
    if (a.empty()) return a;
    BigInt c = content(a);
    if (a.back() < 0) c = -c;
    return c == 1 ? a : div_scalar(a, c);
}

// Pseudo-remainder of a by b (up to a power of lc(b)).
inline ZPoly prem(ZPoly a, const ZPoly& b) {
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const BigInt la = a.back();
        const BigInt lb = b.back();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

inline ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
    if (a0.empty()) return b0.empty() ? ZPoly{} : b0.back() < 0 ? scale(b0, -1) : b0;
    if (b0.empty()) return a0.back() < 0 ? scale(a0, -1) : a0;
    BigInt ci;
    mpz_gcd(ci.get_mpz_t(), content(a0).get_mpz_t(), content(b0).get_mpz_t());
    ZPoly a = primitive(a0), b = primitive(b0);
    if (a.size() < b.size()) std::swap(a, b);
    while (true) {
        if (b.size() == 1) return ZPoly{ci};
        ZPoly r = prem(a, b);
        if (r.empty()) break;
        a = std::move(b);
        b = primitive(r);
    }
    return scale(primitive(b), ci);
}

// Polynomial in q with Z[t] coefficients, dense in q.
using RPoly = std::vector<ZPoly>;

inline void trim(RPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

inline ZPoly rcontent(const RPoly& a) {
    ZPoly g;
    for (const auto& c : a) {
        if (c.empty()) continue;
        g = gcd(g, c);
        if (g.size() == 1 && g[0] == 1) break;
    }
    return g;
}

inline RPoly rprimitive(const RPoly& a) {
    if (a.empty()) return a;
    ZPoly c = rcontent(a);
    RPoly r;
    r.reserve(a.size());
    for (const auto& x : a) {
        if (x.empty()) {
            r.emplace_back();
            continue;
        }
        auto d = exact_div(x, c);
        if (!d) throw std::logic_error("rprimitive: content does not divide");
        r.push_back(std::move(*d));
    }
    if (r.back().back() < 0)
        for (auto& x : r) x = scale(x, -1);
    return r;
}

inline RPoly rprem(RPoly a, const RPoly& b) {
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const ZPoly la = a.back();
        const ZPoly& lb = b.back();
        for (auto& c : a) c = mul(c, lb);
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(a[shift + j], mul(la, b[j]));
        trim(a);
    }
    return a;
}

inline RPoly rgcd(const RPoly& a0, const RPoly& b0) {
    ZPoly cg = gcd(rcontent(a0), rcontent(b0));
    RPoly a = rprimitive(a0), b = rprimitive(b0);
    if (a.size() < b.size()) std::swap(a, b);
    while (b.size() > 1) {
        RPoly r = rprem(a, b);
        if (r.empty()) break;
        a = std::move(b);
        b = rprimitive(r);
    }
    RPoly g = b.size() == 1 ? RPoly{ZPoly{1}} : rprimitive(b);
    for (auto& x : g) x = mul(x, cg);
    return g;
}

}  // namespace detail

/// Polynomial in Z[q; t, t^-1]: q-exponents are nonnegative, t-exponents may be
/// negative. Terms are kept sorted by (q, t) ascending with no zero coefficients.
class IntPoly2 {
   public:
    IntPoly2() = default;
    IntPoly2(long c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.push_back({0, 0, BigInt(c)});
    }
    IntPoly2(const BigInt& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.push_back({0, 0, c});
    }

    static IntPoly2 monomial(const BigInt& c, int qe, int te) {
        if (qe < 0) throw std::invalid_argument("IntPoly2: negative q-exponent");
        IntPoly2 r;
        if (c != 0) r.terms_.push_back({qe, te, c});
        return r;
    }
    static IntPoly2 q() { return monomial(1, 1, 0); }
    static IntPoly2 t() { return monomial(1, 0, 1); }

    /// Builds from arbitrary terms, merging duplicates.
    static IntPoly2 from_terms(std::vector<Term2> terms) {
        for (const auto& tm : terms)
            if (tm.q < 0) throw std::invalid_argument("IntPoly2: negative q-exponent");
        std::sort(terms.begin(), terms.end(),
                  [](const Term2& a, const Term2& b) { return a.q != b.q ? a.q < b.q : a.t < b.t; });
        IntPoly2 r;
        for (auto& tm : terms) {
            if (!r.terms_.empty() && r.terms_.back().q == tm.q && r.terms_.back().t == tm.t)
                r.terms_.back().c += tm.c;
            else {
                if (!r.terms_.empty() && r.terms_.back().c == 0) r.terms_.pop_back();
                r.terms_.push_back(std::move(tm));
            }
        }
        if (!r.terms_.empty() && r.terms_.back().c == 0) r.terms_.pop_back();
        return r;
    }

    const std::vector<Term2>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].q == 0 && terms_[0].t == 0 && terms_[0].c == 1;
    }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].q == 0 && terms_[0].t == 0); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    /// Constant coefficient (0 if none).
    BigInt constant_term() const {
        for (const auto& tm : terms_)
            if (tm.q == 0 && tm.t == 0) return tm.c;
        return 0;
    }

    /// Leading term in lex order with q before t.
    const Term2& leading() const { return terms_.back(); }

    int min_q() const { return terms_.empty() ? 0 : terms_.front().q; }
    int max_q() const { return terms_.empty() ? 0 : terms_.back().q; }
    int min_t() const {
        int m = 0;
        bool first = true;
        for (const auto& tm : terms_) {
            if (first || tm.t < m) m = tm.t;
            first = false;
        }
        return m;
    }
    int max_t() const {
        int m = 0;
        bool first = true;
        for (const auto& tm : terms_) {
            if (first || tm.t > m) m = tm.t;
            first = false;
        }
        return m;
    }
    bool t_free() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term2& tm) { return tm.t == 0; });
    }
    bool q_free() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term2& tm) { return tm.q == 0; });
    }

    /// Multiplies by q^dq t^dt.
    IntPoly2 shifted(int dq, int dt) const {
        IntPoly2 r(*this);
        for (auto& tm : r.terms_) {
            tm.q += dq;
            tm.t += dt;
            if (tm.q < 0) throw std::invalid_argument("IntPoly2: shift makes q-exponent negative");
        }
        return r;
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& tm : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tm.c.get_mpz_t());
        return g;
    }

    IntPoly2 operator-() const {
        IntPoly2 r(*this);
        for (auto& tm : r.terms_) tm.c = -tm.c;
        return r;
    }

    friend IntPoly2 operator+(const IntPoly2& a, const IntPoly2& b) { return merge(a, b, false); }
    friend IntPoly2 operator-(const IntPoly2& a, const IntPoly2& b) { return merge(a, b, true); }

    friend IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_one()) return b;
        if (b.is_one()) return a;
        if (a.terms_.size() == 1 || b.terms_.size() == 1) {
            const IntPoly2& m = a.terms_.size() == 1 ? a : b;
            const IntPoly2& o = a.terms_.size() == 1 ? b : a;
            IntPoly2 r(o);
            const Term2& mt = m.terms_[0];
            for (auto& tm : r.terms_) {
                tm.q += mt.q;
                tm.t += mt.t;
                tm.c *= mt.c;
            }
            return r;
        }
        std::vector<Term2> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) prod.push_back({x.q + y.q, x.t + y.t, x.c * y.c});
        return from_terms(std::move(prod));
    }

    IntPoly2& operator+=(const IntPoly2& o) { return *this = *this + o; }
    IntPoly2& operator-=(const IntPoly2& o) { return *this = *this - o; }
    IntPoly2& operator*=(const IntPoly2& o) { return *this = *this * o; }

    IntPoly2 pow(unsigned k) const {
        IntPoly2 r(1), b(*this);
        while (k) {
            if (k & 1U) r *= b;
            b *= b;
            k >>= 1U;
        }
        return r;
    }

    IntPoly2 scaled(const BigInt& c) const {
        if (c == 0) return {};
        IntPoly2 r(*this);
        for (auto& tm : r.terms_) tm.c *= c;
        return r;
    }

    IntPoly2 divided_by_integer(const BigInt& c) const {
        IntPoly2 r(*this);
        for (auto& tm : r.terms_) {
            if (!mpz_divisible_p(tm.c.get_mpz_t(), c.get_mpz_t()))
                throw NotDivisible("IntPoly2: integer does not divide coefficient");
            mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), c.get_mpz_t());
        }
        return r;
    }

    friend bool operator==(const IntPoly2& a, const IntPoly2& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const auto& x = a.terms_[i];
            const auto& y = b.terms_[i];
            if (x.q != y.q || x.t != y.t || x.c != y.c) return false;
        }
        return true;
    }
    friend bool operator!=(const IntPoly2& a, const IntPoly2& b) { return !(a == b); }

    /// Exact quotient a / b in Z[q; t, t^-1], or nullopt.
    static std::optional<IntPoly2> divide_exact(const IntPoly2& a, const IntPoly2& b) {
        if (b.is_zero()) throw DivisionByZero("IntPoly2 division by zero");
        if (a.is_zero()) return IntPoly2{};
        if (b.is_monomial()) {
            const Term2& m = b.terms_[0];
            IntPoly2 r(a);
            for (auto& tm : r.terms_) {
                tm.q -= m.q;
                tm.t -= m.t;
                if (tm.q < 0) return std::nullopt;
                if (!mpz_divisible_p(tm.c.get_mpz_t(), m.c.get_mpz_t())) return std::nullopt;
                mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), m.c.get_mpz_t());
            }
            return r;
        }
        const int min_qt = a.min_t() - b.min_t();
        std::map<std::pair<int, int>, BigInt> rem;
        for (const auto& tm : a.terms_) rem.emplace(std::make_pair(tm.q, tm.t), tm.c);
        const Term2& lb = b.leading();
        std::vector<Term2> quot;
        while (!rem.empty()) {
            auto it = std::prev(rem.end());
            const int dq = it->first.first - lb.q;
            const int dt = it->first.second - lb.t;
            if (dq < 0 || dt < min_qt) return std::nullopt;
            if (!mpz_divisible_p(it->second.get_mpz_t(), lb.c.get_mpz_t())) return std::nullopt;
            BigInt f;
            mpz_divexact(f.get_mpz_t(), it->second.get_mpz_t(), lb.c.get_mpz_t());
            for (const auto& tb : b.terms_) {
                auto key = std::make_pair(tb.q + dq, tb.t + dt);
                auto jt = rem.find(key);
                if (jt == rem.end())
                    rem.emplace(key, -f * tb.c);
                else {
                    jt->second -= f * tb.c;
                    if (jt->second == 0) rem.erase(jt);
                }
            }
            quot.push_back({dq, dt, std::move(f)});
        }
        return from_terms(std::move(quot));
    }

    /// gcd in Z[q; t, t^-1]: carries q^min(valuations), has t-valuation 0 and a
    /// positive leading coefficient.
    static IntPoly2 gcd(const IntPoly2& a, const IntPoly2& b) {
        if (a.is_zero() && b.is_zero()) return {};
        if (a.is_zero()) return b.normalized_associate();
        if (b.is_zero()) return a.normalized_associate();
        const int mq = std::min(a.min_q(), b.min_q());
        if (a.is_monomial() || b.is_monomial()) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
            return monomial(g, mq, 0);
        }
        detail::RPoly ra = a.to_recursive(), rb = b.to_recursive();
        detail::RPoly g = detail::rgcd(ra, rb);
        return from_recursive(g).shifted(mq, 0);
    }

    /// Associate with t-valuation and q-valuation zero and positive leading coefficient.
    IntPoly2 normalized_associate() const {
        if (is_zero()) return {};
        IntPoly2 r = shifted(-min_q(), -min_t());
        if (r.leading().c < 0) r = -r;
        return r;
    }

    BigRational evaluate(const BigRational& q0, const BigRational& t0) const {
        BigRational s = 0;
        for (const auto& tm : terms_) s += tm.c * rpow(q0, tm.q) * rpow(t0, tm.t);
        return s;
    }

    static BigRational rpow(const BigRational& x, int e) {
        if (e < 0) {
            if (x == 0) throw DivisionByZero("zero raised to a negative power");
            return rpow(BigRational(1) / x, -e);
        }
        BigRational r = 1, b = x;
        unsigned k = static_cast<unsigned>(e);
        while (k) {
            if (k & 1U) r *= b;
            b *= b;
            k >>= 1U;
        }
        return r;
    }

    /// Canonical string: terms by (q-degree, t-degree) ascending, e.g. "1 - t + q*t^2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& tm : terms_) {
            BigInt c = tm.c;
            if (first) {
                if (c < 0) {
                    s += "-";
                    c = -c;
                }
            } else {
                s += c < 0 ? " - " : " + ";
                if (c < 0) c = -c;
            }
            first = false;
            std::string mono;
            if (tm.q != 0) mono += tm.q == 1 ? "q" : "q^" + std::to_string(tm.q);
            if (tm.t != 0) {
                if (!mono.empty()) mono += "*";
                mono += tm.t == 1 ? "t" : "t^" + std::to_string(tm.t);
            }
            if (mono.empty())
                s += c.get_str();
            else if (c == 1)
                s += mono;
            else
                s += c.get_str() + "*" + mono;
        }
        return s;
    }

   private:
    static IntPoly2 merge(const IntPoly2& a, const IntPoly2& b, bool subtract) {
        IntPoly2 r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        auto less = [](const Term2& x, const Term2& y) { return x.q != y.q ? x.q < y.q : x.t < y.t; };
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && less(a.terms_[i], b.terms_[j]))) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || less(b.terms_[j], a.terms_[i])) {
                r.terms_.push_back(b.terms_[j++]);
                if (subtract) r.terms_.back().c = -r.terms_.back().c;
            } else {
                BigInt c = a.terms_[i].c;
                if (subtract)
                    c -= b.terms_[j].c;
                else
                    c += b.terms_[j].c;
                if (c != 0) r.terms_.push_back({a.terms_[i].q, a.terms_[i].t, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    // Drops the q- and t-valuations and lays the polynomial out densely.
    detail::RPoly to_recursive() const {
        const int vq = min_q(), vt = min_t();
        detail::RPoly r(static_cast<std::size_t>(max_q() - vq + 1));
        for (const auto& tm : terms_) {
            auto& z = r[static_cast<std::size_t>(tm.q - vq)];
            const auto k = static_cast<std::size_t>(tm.t - vt);
            if (z.size() <= k) z.resize(k + 1, 0);
            z[k] = tm.c;
        }
        return r;
    }

    static IntPoly2 from_recursive(const detail::RPoly& r) {
        std::vector<Term2> terms;
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < r[i].size(); ++j)
                if (r[i][j] != 0) terms.push_back({static_cast<int>(i), static_cast<int>(j), r[i][j]});
        return from_terms(std::move(terms));
    }

    std::vector<Term2> terms_;
};

}  // namespace qtmac
