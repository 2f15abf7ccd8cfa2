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

#include <qtmac/partition.hpp>

#include <map>
#include <string>

namespace qtmac {

enum class Basis { m, e, p, s, bigS };

inline std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::e: return "e";
        case Basis::p: return "p";
        case Basis::s: return "s";
        case Basis::bigS: return "bigS";
    }
    return "?";
}

inline Basis parse_basis(const std::string& s) {
    if (s == "m") return Basis::m;
    if (s == "e") return Basis::e;
    if (s == "p") return Basis::p;
    if (s == "s") return Basis::s;
    if (s == "bigS") return Basis::bigS;
    throw std::invalid_argument("unknown basis \"" + s + "\"");
}

/// Linear combination Σ c_λ b_λ in one of the symmetric function bases.
struct SymExpansion {
    Basis basis = Basis::m;
    std::map<Partition, QT> coeffs;

    SymExpansion() = default;
    explicit SymExpansion(Basis b) : basis(b) {}
    SymExpansion(Basis b, std::map<Partition, QT> c) : basis(b), coeffs(std::move(c)) { prune(); }

    static SymExpansion single(Basis b, const Partition& p, const QT& c = QT(1)) {
        SymExpansion r(b);
        if (!c.is_zero()) r.coeffs.emplace(p, c);
        return r;
    }

    QT coeff(const Partition& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? QT(0) : it->second;
    }

    void add(const Partition& p, const QT& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    void prune() {
        for (auto it = coeffs.begin(); it != coeffs.end();)
            it = it->second.is_zero() ? coeffs.erase(it) : std::next(it);
    }

    int max_size() const {
        int d = 0;
        for (const auto& [p, c] : coeffs) d = std::max(d, p.size());
        return d;
    }

    SymExpansion scaled(const QT& c) const {
        SymExpansion r(basis);
        if (c.is_zero()) return r;
        for (const auto& [p, v] : coeffs) r.coeffs.emplace(p, v * c);
        return r;
    }

    friend SymExpansion operator+(const SymExpansion& a, const SymExpansion& b) {
        if (a.basis != b.basis) throw std::invalid_argument("SymExpansion: basis mismatch");
        SymExpansion r(a);
        for (const auto& [p, c] : b.coeffs) r.add(p, c);
        return r;
    }
    friend SymExpansion operator-(const SymExpansion& a, const SymExpansion& b) { return a + b.scaled(QT(-1)); }

    friend bool operator==(const SymExpansion& a, const SymExpansion& b) {
        return a.basis == b.basis && a.coeffs == b.coeffs;
    }

    std::string to_string() const {
        if (coeffs.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [p, c] : coeffs) {
            if (!first) s += " + ";
            first = false;
            s += "(" + c.to_string() + ")*" + basis_name(basis) + p.to_string();
        }
        return s;
    }
};

}  // namespace qtmac
