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

#include <qtmac/xpoly.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qtmac {

/// Quotient num / Π f^k of Laurent polynomials over Q(q,t), with the denominator kept
/// factored. Factors are normalized to monic polynomials with no monomial content, so
/// repeated factors merge and sums only pay for the factors they do not share. No gcd is
/// ever taken; equality is decided by cross-multiplication.
class RatFn {
   public:
    struct Factor {
        XPoly poly;
        int mult = 0;
    };
    using FactorMap = std::map<std::string, Factor>;

    RatFn() = default;
    explicit RatFn(int n) : num_(n) {}
    RatFn(XPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
    RatFn(int n, const QT& c) : num_(n, c) {}

    /// num / Π dens.
    static RatFn fraction(XPoly num, const std::vector<XPoly>& dens) {
        RatFn r(std::move(num));
        for (const auto& d : dens) r.divide_by(d);
        return r;
    }

    int nvars() const { return num_.nvars(); }
    const XPoly& num() const { return num_; }
    const FactorMap& factors() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// The denominator multiplied out.
    XPoly den() const { return expand(den_, nvars()); }

    /// Divides by f^k in place.
    RatFn& divide_by(const XPoly& f, int k = 1) {
        if (f.is_zero()) throw DivisionByZero("RatFn: zero denominator");
        const Monomial low = f.min_exponents();
        XPoly g = f.times_monomial(low.inverse());
        const QT lc = g.leading().second;
        if (!lc.is_one()) g = g * lc.inverse();
        Monomial shift;
        for (int i = 0; i < kMaxVars; ++i) shift[i] = static_cast<std::int16_t>(-k * low[i]);
        num_ = num_.times_monomial(shift) * lc.inverse().pow(k);
        if (g.is_constant()) return *this;
        std::string key = g.to_string();
        auto it = den_.find(key);
        if (it == den_.end())
            den_.emplace(std::move(key), Factor{std::move(g), k});
        else
            it->second.mult += k;
        return *this;
    }

    RatFn operator-() const {
        RatFn r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        RatFn r(a.nvars());
        r.den_ = a.den_;
        for (const auto& [key, f] : b.den_) {
            auto it = r.den_.find(key);
            if (it == r.den_.end())
                r.den_.emplace(key, f);
            else
                it->second.mult = std::max(it->second.mult, f.mult);
        }
        r.num_ = a.num_ * missing(r.den_, a.den_, a.nvars()) + b.num_ * missing(r.den_, b.den_, b.nvars());
        return r;
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }

    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        RatFn r(a);
        r.num_ = a.num_ * b.num_;
        for (const auto& [key, f] : b.den_) {
            auto it = r.den_.find(key);
            if (it == r.den_.end())
                r.den_.emplace(key, f);
            else
                it->second.mult += f.mult;
        }
        return r;
    }
    friend RatFn operator*(const RatFn& a, const QT& c) {
        RatFn r(a);
        r.num_ = r.num_ * c;
        return r;
    }
    friend RatFn operator*(const QT& c, const RatFn& a) { return a * c; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw DivisionByZero("RatFn: division by zero");
        RatFn r(a);
        for (const auto& [key, f] : b.den_) r.num_ *= f.poly.pow(static_cast<unsigned>(f.mult));
        r.divide_by(b.num_);
        return r;
    }

    /// Multiplies by the monomial x^m.
    RatFn times_monomial(const Monomial& m) const {
        RatFn r(*this);
        r.num_ = r.num_.times_monomial(m);
        return r;
    }

    /// Applies a ring map that acts on numerator and every factor alike.
    template <class Map>
    RatFn transform(Map map) const {
        RatFn r(map(num_));
        for (const auto& [key, f] : den_) r.divide_by(map(f.poly), f.mult);
        return r;
    }
    RatFn swap_vars(int i, int j) const {
        return transform([&](const XPoly& p) { return p.swap_vars(i, j); });
    }
    /// Inverts every variable together with q and t.
    RatFn iota() const {
        return transform([](const XPoly& p) { return p.iota(); });
    }

    /// num_a den_b = num_b den_a, after dropping the factors both sides share.
    friend bool operator==(const RatFn& a, const RatFn& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        FactorMap da, db;
        for (const auto& [key, f] : a.den_) {
            auto it = b.den_.find(key);
            const int common = it == b.den_.end() ? 0 : std::min(f.mult, it->second.mult);
            if (f.mult > common) da.emplace(key, Factor{f.poly, f.mult - common});
        }
        for (const auto& [key, f] : b.den_) {
            auto it = a.den_.find(key);
            const int common = it == a.den_.end() ? 0 : std::min(f.mult, it->second.mult);
            if (f.mult > common) db.emplace(key, Factor{f.poly, f.mult - common});
        }
        return a.num_ * expand(db, a.nvars()) == b.num_ * expand(da, b.nvars());
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (den_.empty()) return num_.to_string(names);
        std::string s = "(" + num_.to_string(names) + ")/(";
        bool first = true;
        for (const auto& [key, f] : den_) {
            if (!first) s += "*";
            first = false;
            s += "(" + f.poly.to_string(names) + ")";
            if (f.mult > 1) s += "^" + std::to_string(f.mult);
        }
        return s + ")";
    }

   private:
    static XPoly expand(const FactorMap& fs, int n) {
        XPoly r(n, QT(1));
        for (const auto& [key, f] : fs) r *= f.poly.pow(static_cast<unsigned>(f.mult));
        return r;
    }
    // Π over `full` of the powers not already present in `have`.
    static XPoly missing(const FactorMap& full, const FactorMap& have, int n) {
        XPoly r(n, QT(1));
        for (const auto& [key, f] : full) {
            auto it = have.find(key);
            const int extra = f.mult - (it == have.end() ? 0 : it->second.mult);
            if (extra > 0) r *= f.poly.pow(static_cast<unsigned>(extra));
        }
        return r;
    }

    XPoly num_;
    FactorMap den_;
};

}  // namespace qtmac
