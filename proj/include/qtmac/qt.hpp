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

#include <qtmac/int_poly2.hpp>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qtmac {

class PoleAtSpecialization : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Element of Q(q,t) as a reduced fraction num/den of IntPoly2.
///
/// Canonical form: gcd(num, den) = 1 (including integer content), den has
/// t-valuation 0, and the lexicographically leading term of den is positive.
/// Equality is structural.
class QT {
   public:
    QT() : den_(1) {}
    QT(long c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
    QT(const BigInt& c) : num_(c), den_(1) {}       // NOLINT(google-explicit-constructor)
    QT(IntPoly2 p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    QT(const BigRational& r) : num_(r.get_num()), den_(r.get_den()) {}  // NOLINT(google-explicit-constructor)

    QT(IntPoly2 num, IntPoly2 den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("QT: zero denominator");
        normalize();
    }

    static QT q() { return QT(IntPoly2::q()); }
    static QT t() { return QT(IntPoly2::t()); }
    /// c * q^qe * t^te; qe may be negative.
    static QT monomial(const BigInt& c, int qe, int te) {
        if (qe >= 0) return QT(IntPoly2::monomial(c, qe, te));
        return QT(IntPoly2::monomial(c, 0, te), IntPoly2::monomial(1, -qe, 0));
    }

    const IntPoly2& num() const { return num_; }
    const IntPoly2& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// True when the value lies in Z[q; t, t^-1].
    bool is_laurent_integral() const { return den_.is_one(); }

    BigRational to_rational() const {
        if (!is_constant()) throw std::domain_error("QT: not a constant");
        BigRational r(num_.constant_term(), den_.constant_term());
        r.canonicalize();
        return r;
    }

    QT operator-() const {
        QT r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend QT operator+(const QT& a, const QT& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) {
            QT r;
            r.num_ = a.num_ + b.num_;
            r.den_ = a.den_;
            if (!r.den_.is_one()) r.normalize();
            else if (r.num_.is_zero()) r.den_ = IntPoly2(1);
            return r;
        }
        if (a.den_.is_one() || b.den_.is_one()) {
            const QT& p = a.den_.is_one() ? a : b;
            const QT& f = a.den_.is_one() ? b : a;
            QT r;
            r.num_ = f.num_ + p.num_ * f.den_;
            r.den_ = f.den_;
            // gcd(num, den) stays 1 when adding a polynomial
            if (r.num_.is_zero()) r.den_ = IntPoly2(1);
            return r;
        }
        IntPoly2 g = IntPoly2::gcd(a.den_, b.den_);
        IntPoly2 ad = *IntPoly2::divide_exact(a.den_, g);
        IntPoly2 bd = *IntPoly2::divide_exact(b.den_, g);
        return QT(a.num_ * bd + b.num_ * ad, a.den_ * bd);
    }
    friend QT operator-(const QT& a, const QT& b) { return a + (-b); }

    friend QT operator*(const QT& a, const QT& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.is_one() && b.den_.is_one()) return QT(a.num_ * b.num_);
        IntPoly2 an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
        cancel(an, bd);
        cancel(bn, ad);
        QT r;
        r.num_ = an * bn;
        r.den_ = ad * bd;
        r.fix_units();
        return r;
    }

    QT inverse() const {
        if (is_zero()) throw DivisionByZero("QT: inverse of zero");
        QT r;
        r.num_ = den_;
        r.den_ = num_;
        r.fix_units();
        return r;
    }

    friend QT operator/(const QT& a, const QT& b) {
        if (b.is_zero()) throw DivisionByZero("QT: division by zero");
        return a * b.inverse();
    }

    QT& operator+=(const QT& o) { return *this = *this + o; }
    QT& operator-=(const QT& o) { return *this = *this - o; }
    QT& operator*=(const QT& o) { return *this = *this * o; }
    QT& operator/=(const QT& o) { return *this = *this / o; }

    QT pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        QT r(1), b(*this);
        auto e = static_cast<unsigned>(k);
        while (e) {
            if (e & 1U) r *= b;
            b *= b;
            e >>= 1U;
        }
        return r;
    }

    friend bool operator==(const QT& a, const QT& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QT& a, const QT& b) { return !(a == b); }

    /// Exact value at (q0, t0).
    BigRational specialize(const BigRational& q0, const BigRational& t0) const {
        BigRational d = den_.evaluate(q0, t0);
        if (d == 0) throw PoleAtSpecialization("QT: denominator vanishes at specialization point");
        BigRational r = num_.evaluate(q0, t0) / d;
        r.canonicalize();
        return r;
    }

    /// Ring homomorphism q -> q^a t^b, t -> q^c t^d.
    QT substitute(int a, int b, int c, int d) const {
        auto map_terms = [&](const IntPoly2& p) {
            std::vector<Term2> out;
            out.reserve(p.size());
            for (const auto& tm : p.terms()) out.push_back({a * tm.q + c * tm.t, b * tm.q + d * tm.t, tm.c});
            return out;
        };
        std::vector<Term2> n = map_terms(num_), m = map_terms(den_);
        int shift = 0;
        for (const auto& tm : n) shift = std::min(shift, tm.q);
        for (const auto& tm : m) shift = std::min(shift, tm.q);
        for (auto& tm : n) tm.q -= shift;
        for (auto& tm : m) tm.q -= shift;
        return QT(IntPoly2::from_terms(std::move(n)), IntPoly2::from_terms(std::move(m)));
    }

    /// q -> 1/q, t -> 1/t.
    QT iota() const { return substitute(-1, 0, 0, -1); }

    /// "num" when den = 1, otherwise "(num)/(den)".
    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const QT& a) { return os << a.to_string(); }

   private:
    // Removes gcd(x, y) from both.
    static void cancel(IntPoly2& x, IntPoly2& y) {
        if (y.is_one() || x.is_one()) return;
        if (!y.is_monomial()) {
            if (auto e = IntPoly2::divide_exact(x, y)) {
                x = std::move(*e);
                y = IntPoly2(1);
                return;
            }
        }
        IntPoly2 g = IntPoly2::gcd(x, y);
        if (g.is_one()) return;
        x = *IntPoly2::divide_exact(x, g);
        y = *IntPoly2::divide_exact(y, g);
    }

    // Moves the t-valuation of den into num and fixes the sign.
    void fix_units() {
        if (num_.is_zero()) {
            den_ = IntPoly2(1);
            return;
        }
        const int vt = den_.min_t();
        if (vt != 0) {
            den_ = den_.shifted(0, -vt);
            num_ = num_.shifted(0, -vt);
        }
        if (den_.leading().c < 0) {
            den_ = -den_;
            num_ = -num_;
        }
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = IntPoly2(1);
            return;
        }
        if (!den_.is_one()) cancel(num_, den_);
        fix_units();
    }

    IntPoly2 num_;
    IntPoly2 den_;
};

/// (a; b)_k = prod_{j<k} (1 - a b^j).
inline QT pochhammer(const QT& a, const QT& base, int k) {
    QT r(1), x(a);
    for (int j = 0; j < k; ++j) {
        r *= QT(1) - x;
        x *= base;
    }
    return r;
}

/// [n]_b = (1 - b^n)/(1 - b) as a polynomial.
inline QT qinteger(const QT& base, int n) {
    QT r(0), x(1);
    for (int j = 0; j < n; ++j) {
        r += x;
        x *= base;
    }
    return r;
}

}  // namespace qtmac
