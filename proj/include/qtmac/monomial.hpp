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

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace qtmac {

inline constexpr int kMaxVars = 8;

/// Laurent monomial x^e in at most kMaxVars variables; unused slots are zero.
/// Ordered graded-lexicographically (total degree, then exponents left to right).
struct Monomial {
    std::array<std::int16_t, kMaxVars> e{};

    static Monomial var(int i, int power = 1) {
        if (i < 0 || i >= kMaxVars) throw std::out_of_range("Monomial: variable index");
        Monomial m;
        m.e[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(power);
        return m;
    }

    std::int16_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
    std::int16_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool nonnegative() const {
        for (auto x : e)
            if (x < 0) return false;
        return true;
    }
    bool is_one() const {
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }

    Monomial& operator*=(const Monomial& o) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
        return *this;
    }
    Monomial& operator/=(const Monomial& o) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::int16_t>(e[i] - o.e[i]);
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    friend Monomial operator/(Monomial a, const Monomial& b) { return a /= b; }
    Monomial inverse() const {
        Monomial r;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::int16_t>(-e[i]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da <=> db;
        return a.e <=> b.e;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : m.e) h = (h ^ static_cast<std::uint16_t>(x)) * 1099511628211ULL;
        return h;
    }
};

}  // namespace qtmac
