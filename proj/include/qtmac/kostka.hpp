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
#include <qtmac/parallel.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtmac {

class IntegralityViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

class CrossCheckMismatch : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Square table indexed by pairs of partitions of one size; rows λ, columns μ.
struct QTTable {
    int size = 0;
    std::map<std::pair<Partition, Partition>, QT> entries;

    QT at(const Partition& row, const Partition& col) const {
        auto it = entries.find({row, col});
        return it == entries.end() ? QT(0) : it->second;
    }
    friend bool operator==(const QTTable&, const QTTable&) = default;
};

using KostkaTable = QTTable;
using BTable = QTTable;

/// True when c lies in Z[q, t].
inline bool is_integer_polynomial(const QT& c) { return c.is_laurent_integral() && c.num().min_t() >= 0; }

/// K_{λ,μ}(q,t) for all λ ⊢ |μ|: J_μ = Σ_λ K_{λ,μ} S_λ(x;t), solved exactly in |μ| variables.
inline std::map<Partition, QT> kostka_qt(const Partition& mu) {
    const int N = mu.size();
    const SymExpansion K = basis_convert(rodrigues_J(mu, std::max(N, 1)), Basis::bigS, std::max(N, 1));
    std::map<Partition, QT> out;
    for (const auto& lam : partitions_of(N)) {
        const QT c = K.coeff(lam);
        if (!is_integer_polynomial(c))
            throw IntegralityViolation("K_{" + lam.to_string() + "," + mu.to_string() + "} = " + c.to_string() +
                                       " is not in Z[q,t]");
        out.emplace(lam, c);
    }
    return out;
}

/// All K_{λ,μ}(q,t) of size N; columns are computed in parallel.
inline KostkaTable kostka_table(int N, int jobs = 1) {
    const auto parts = partitions_of(N);
    std::vector<std::map<Partition, QT>> cols(parts.size());
    parallel_for(parts.size(), jobs, [&](std::size_t j) { cols[j] = kostka_qt(parts[j]); });
    KostkaTable table{N, {}};
    for (std::size_t j = 0; j < parts.size(); ++j)
        for (const auto& [lam, c] : cols[j]) table.entries.emplace(std::make_pair(lam, parts[j]), c);
    return table;
}

/// J̃_λ = J_λ[X/(1-t)], in the m basis with |λ| variables.
inline SymExpansion modified_J(const Partition& lambda) {
    const int n = std::max(lambda.size(), 1);
    return plethysm_substitute(rodrigues_J(lambda, n), n);
}

/// B_{λ,μ}: coefficient of m_μ in J̃_λ. Cross-checked against Σ_ν K_{ν,λ}(q,t) K_{ν,μ}.
inline BTable b_table(int N, int jobs = 1) {
    if (N < 1) throw std::invalid_argument("b_table: N must be positive");
    const auto parts = partitions_of(N);
    std::vector<SymExpansion> rows(parts.size());
    parallel_for(parts.size(), jobs, [&](std::size_t i) { rows[i] = modified_J(parts[i]); });
    const KostkaTable K = kostka_table(N, jobs);
    BTable table{N, {}};
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& mu : parts) {
            const QT b = rows[i].coeff(mu);
            QT check(0);
            for (const auto& nu : parts) check += K.at(nu, parts[i]) * QT(kostka_number(nu, mu));
            if (b != check)
                throw CrossCheckMismatch("B_{" + parts[i].to_string() + "," + mu.to_string() + "}: " + b.to_string() +
                                         " vs " + check.to_string());
            if (!b.is_zero()) table.entries.emplace(std::make_pair(parts[i], mu), b);
        }
    return table;
}

/// n(μ') = Σ_i C(μ_i, 2).
inline int n_conjugate(const Partition& mu) { return mu.conjugate().n_stat(); }

/// q^{n(μ')} (q;q)_N / Π_i (q;q)_{μ_i}.
inline QT q_multinomial_shifted(const Partition& mu) {
    const QT q = QT::q();
    QT d(1);
    for (int p : mu.parts()) d *= pochhammer(q, q, p);
    return q.pow(n_conjugate(mu)) * pochhammer(q, q, mu.size()) / d;
}

/// The four statements about B_{λ,μ} at size N, each as literally stated.
inline Report check_multinomial_statements(int N, const BTable& B) {
    Report rep("multinomial statements size=" + std::to_string(N));
    const auto parts = partitions_of(N);
    for (const auto& lam : parts)
        for (const auto& mu : parts) {
            const QT b = B.at(lam, mu);
            const std::string w = "lambda=" + lam.to_string() + " mu=" + mu.to_string();
            rep.record("B in Z[q,t]", is_integer_polynomial(b), w + " B=" + b.to_string());
            const BigRational at1 = b.specialize(1, 1);
            rep.record("B(1,1) = N!/prod mu_i!", at1 == BigRational(multinomial(mu)),
                       w + " B(1,1)=" + at1.get_str());
            const Partition lc = lam.conjugate();
            const QT dual = b.substitute(0, -1, -1, 0) * QT::monomial(1, lc.n_stat(), lam.n_stat());
            rep.record("B_{lambda',mu}(q,t) = q^{n(lambda')} t^{n(lambda)} B_{lambda,mu}(1/t,1/q)",
                       B.at(lc, mu) == dual, w + " lhs=" + B.at(lc, mu).to_string() + " rhs=" + dual.to_string());
        }
    const Partition row{N};
    for (const auto& mu : parts) {
        const QT want = q_multinomial_shifted(mu);
        rep.record("B_{(N),mu} = q^{n(mu')} (q;q)_N / prod (q;q)_{mu_i}", B.at(row, mu) == want,
                   "mu=" + mu.to_string() + " B=" + B.at(row, mu).to_string() + " formula=" + want.to_string());
    }
    return rep;
}

inline Report check_multinomial_statements(int N) { return check_multinomial_statements(N, b_table(N)); }

/// Variants of the row and duality statements that the computed tables satisfy; informational.
inline Report check_multinomial_variants(int N, const BTable& B) {
    Report rep("multinomial variants size=" + std::to_string(N));
    const auto parts = partitions_of(N);
    const QT q = QT::q();
    for (const auto& mu : parts) {
        QT d(1);
        for (int p : mu.parts()) d *= pochhammer(q, q, p);
        rep.record("B_{(N),mu} = (q;q)_N / prod (q;q)_{mu_i}", B.at(Partition{N}, mu) == pochhammer(q, q, N) / d,
                   "mu=" + mu.to_string());
    }
    const Partition column(std::vector<int>(static_cast<std::size_t>(N), 1));
    for (const auto& mu : parts)
        rep.record("B_{(1^N),mu}(q,t) = t^{n(mu')} (t;t)_N / prod (t;t)_{mu_i}",
                   B.at(column, mu) == q_multinomial_shifted(mu).substitute(0, 1, 0, 1), "mu=" + mu.to_string());
    for (const auto& lam : parts)
        for (const auto& mu : parts) {
            const Partition lc = lam.conjugate();
            const QT dual = B.at(lam, mu).substitute(0, -1, -1, 0) * QT::monomial(1, lam.n_stat(), lc.n_stat());
            rep.record("B_{lambda',mu}(q,t) = q^{n(lambda)} t^{n(lambda')} B_{lambda,mu}(1/t,1/q)",
                       B.at(lc, mu) == dual, "lambda=" + lam.to_string() + " mu=" + mu.to_string());
        }
    return rep;
}

/// Duality, specialization at q = t = 1, the multinomial column sums and the t-free column of K.
inline Report check_kostka_properties(int N, const KostkaTable& K) {
    Report rep("kostka properties size=" + std::to_string(N));
    const auto parts = partitions_of(N);
    for (const auto& lam : parts)
        for (const auto& mu : parts) {
            const QT k = K.at(lam, mu);
            const std::string w = "lambda=" + lam.to_string() + " mu=" + mu.to_string();
            rep.record("K in Z[q,t]", is_integer_polynomial(k), w + " K=" + k.to_string());
            rep.record("K_{lambda,mu}(q,t) = K_{lambda',mu'}(t,q)",
                       k == K.at(lam.conjugate(), mu.conjugate()).substitute(0, 1, 1, 0), w);
            rep.record("K_{nu,mu}(1,1) = f^nu", k.specialize(1, 1) == BigRational(syt_count(lam)), w);
        }
    for (const auto& mu : parts) {
        BigInt total = 0;
        for (const auto& nu : parts) total += syt_count(nu) * kostka_number(nu, mu);
        rep.record("sum_nu f^nu K_{nu,mu} = N!/prod mu_i!", total == multinomial(mu), "mu=" + mu.to_string());
    }
    const Partition row{N};
    for (const auto& nu : parts) {
        const QT k = K.at(nu, row);
        rep.record("K_{nu,(N)} is t-free", k.num().t_free() && k.den().t_free(), "nu=" + nu.to_string() + " K=" + k.to_string());
    }
    return rep;
}

/// The (N) column of K against Kostka-Foulkes polynomials K_{ν,(1^N)}(0,q), read literally and
/// with the conjugate index that the computed tables satisfy; informational.
inline Report check_kostka_column(int N, const KostkaTable& K) {
    Report rep("kostka (N) column size=" + std::to_string(N));
    const Partition row{N}, column(std::vector<int>(static_cast<std::size_t>(N), 1));
    for (const auto& nu : partitions_of(N)) {
        const QT k = K.at(nu, row);
        rep.record("K_{nu,(N)}(q,t) = K_{nu,(1^N)}(0,q)", k == K.at(nu, column).substitute(0, 0, 1, 0),
                   "nu=" + nu.to_string());
        rep.record("K_{nu,(N)}(q,t) = K_{nu',(1^N)}(0,q)", k == K.at(nu.conjugate(), column).substitute(0, 0, 1, 0),
                   "nu=" + nu.to_string());
    }
    return rep;
}

inline Report check_kostka_properties(int N) { return check_kostka_properties(N, kostka_table(N)); }

/// J̃_μ expanded in Schur functions has coefficients K_{λ,μ}(q,t).
inline Report check_modified_schur(int N, const KostkaTable& K) {
    Report rep("modified J in Schur basis size=" + std::to_string(N));
    for (const auto& mu : partitions_of(N)) {
        const SymExpansion s = basis_convert(modified_J(mu), Basis::s, std::max(N, 1));
        bool ok = true;
        for (const auto& lam : partitions_of(N)) ok = ok && s.coeff(lam) == K.at(lam, mu);
        rep.record("J~_mu = sum_lambda K_{lambda,mu} s_lambda", ok, "mu=" + mu.to_string());
    }
    return rep;
}

struct PositivityEntry {
    std::string table;  // "K" or "B"
    Partition lambda, mu;
    int max_q = 0, max_t = 0;
    bool negative = false;
};

struct PositivityScan {
    int size = 0;
    std::vector<PositivityEntry> entries;

    int negatives() const {
        int c = 0;
        for (const auto& e : entries) c += e.negative;
        return c;
    }
};

inline bool has_negative_coefficient(const QT& c) {
    if (!c.is_polynomial()) return true;
    for (const auto& tm : c.num().terms())
        if (tm.c < 0) return true;
    return false;
}

/// Sign pattern of every K and B entry of size N, with per-entry degrees.
inline PositivityScan positivity_scan(int N, const KostkaTable& K, const BTable& B) {
    PositivityScan scan{N, {}};
    const auto parts = partitions_of(N);
    for (const auto& [name, table] : {std::pair<std::string, const QTTable*>{"K", &K}, {"B", &B}})
        for (const auto& lam : parts)
            for (const auto& mu : parts) {
                const QT c = table->at(lam, mu);
                scan.entries.push_back({name, lam, mu, c.num().max_q(), c.num().max_t(), has_negative_coefficient(c)});
            }
    return scan;
}

inline PositivityScan positivity_scan(int N, int jobs = 1) { return positivity_scan(N, kostka_table(N, jobs), b_table(N, jobs)); }

/// A positivity scan as a report: one line per table, failing where a negative coefficient shows up.
inline Report positivity_report(const PositivityScan& scan) {
    Report rep("positivity size=" + std::to_string(scan.size));
    for (const auto& e : scan.entries)
        rep.record(e.table + " in N[q,t]", !e.negative, "lambda=" + e.lambda.to_string() + " mu=" + e.mu.to_string());
    return rep;
}

}  // namespace qtmac
