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

#include <qtmac/qt.hpp>

#include <compare>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtmac {

class InvalidPartition : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Weakly decreasing sequence of positive integers.
///
/// Ordering: by size, then reverse lexicographic, so (3) < (2,1) < (1,1,1).
/// Within one size this is a linear extension of dominance with the dominant
/// partitions first.
class Partition {
   public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw InvalidPartition("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidPartition("partition parts must be weakly decreasing");
        }
    }

    /// Parses "3,1"; "0", "-" and "" give the empty partition.
    static Partition parse(const std::string& s) {
        if (s.empty() || s == "0" || s == "-") return {};
        std::vector<int> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(item, &used);
            } catch (const std::exception&) {
                throw InvalidPartition("invalid partition \"" + s + "\"");
            }
            if (used != item.size() || v < 0) throw InvalidPartition("invalid partition \"" + s + "\"");
            parts.push_back(v);
        }
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] == 0 && parts[i + 1] != 0) throw InvalidPartition("invalid partition \"" + s + "\"");
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    /// λ_i with 1-based i, 0 beyond the length.
    int operator[](int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

    Partition conjugate() const {
        std::vector<int> c;
        if (!parts_.empty()) {
            c.assign(static_cast<std::size_t>(parts_[0]), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(c));
    }

    bool contains_cell(int i, int j) const { return i >= 1 && j >= 1 && j <= (*this)[i]; }

    int arm(int i, int j) const {
        if (!contains_cell(i, j)) throw std::out_of_range("cell not in partition");
        return (*this)[i] - j;
    }
    int leg(int i, int j) const {
        if (!contains_cell(i, j)) throw std::out_of_range("cell not in partition");
        int l = 0;
        while ((*this)[i + l + 1] >= j) ++l;
        return l;
    }

    /// n(λ) = Σ (i-1) λ_i.
    int n_stat() const {
        int s = 0;
        for (int i = 1; i <= length(); ++i) s += (i - 1) * (*this)[i];
        return s;
    }

    /// λ + (1^m): adds one to each of the first m parts.
    Partition add_column(int m) const {
        std::vector<int> p(parts_);
        if (static_cast<int>(p.size()) < m) p.resize(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i) ++p[static_cast<std::size_t>(i)];
        return Partition(std::move(p));
    }
    /// λ − (1^m); requires ℓ(λ) ≤ m and λ_m ≥ 1, i.e. ℓ(λ) = m.
    Partition remove_column(int m) const {
        if (length() != m) throw InvalidPartition("remove_column requires length m");
        std::vector<int> p(parts_);
        for (auto& x : p) --x;
        return Partition(std::move(p));
    }

    /// "(3,1)", "()" for the empty partition.
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }
    /// "3,1", "0" for the empty partition.
    std::string to_arg() const {
        if (parts_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        const int sa = a.size(), sb = b.size();
        if (sa != sb) return sa <=> sb;
        return b.parts_ <=> a.parts_;
    }

   private:
    std::vector<int> parts_;
};

/// Dominance μ ≤ λ (partial sums); sizes must agree.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw InvalidPartition("dominance requires equal sizes");
    int a = 0, b = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= len; ++i) {
        a += mu[i];
        b += lambda[i];
        if (a > b) return false;
    }
    return true;
}

/// All partitions of N in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int N, int max_length = -1) {
    std::vector<Partition> out;
    if (N < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, N, N);
    return out;
}

/// All partitions of size ≤ D with at most max_length parts, by size then reverse lex.
inline std::vector<Partition> partitions_up_to(int D, int max_length = -1) {
    std::vector<Partition> out;
    for (int N = 0; N <= D; ++N)
        for (auto& p : partitions_of(N, max_length)) out.push_back(std::move(p));
    return out;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Number of standard Young tableaux (hook length formula).
inline BigInt syt_count(const Partition& lambda) {
    BigInt hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i]; ++j) hooks *= lambda.arm(i, j) + lambda.leg(i, j) + 1;
    return factorial(lambda.size()) / hooks;
}

/// N! / (μ_1! μ_2! ⋯).
inline BigInt multinomial(const Partition& mu) {
    BigInt d = 1;
    for (int p : mu.parts()) d *= factorial(p);
    return factorial(mu.size()) / d;
}

/// c_λ = Π_s (1 − t^{ℓ(s)+1} q^{a(s)}).
inline QT c_lambda(const Partition& lambda) {
    QT r(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i]; ++j)
            r *= QT(1) - QT::monomial(1, lambda.arm(i, j), lambda.leg(i, j) + 1);
    return r;
}

/// b_λ = Π_s (1 − t^{ℓ(s)+1} q^{a(s)}) / (1 − t^{ℓ(s)} q^{a(s)+1}).
inline QT b_lambda(const Partition& lambda) {
    IntPoly2 num(1), den(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i]; ++j) {
            const int a = lambda.arm(i, j), l = lambda.leg(i, j);
            num *= IntPoly2(1) - IntPoly2::monomial(1, a, l + 1);
            den *= IntPoly2(1) - IntPoly2::monomial(1, a + 1, l);
        }
    return QT(num, den);
}

}  // namespace qtmac
