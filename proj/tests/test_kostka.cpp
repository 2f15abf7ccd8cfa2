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

#include <gtest/gtest.h>
#include <qtmac/kostka.hpp>

using namespace qtmac;

namespace {

QT Q(const char* s) { return parse_qt(s); }
const QT q = QT::q();
const QT t = QT::t();

const CheckResult* find(const Report& r, const std::string& prefix) {
    for (const auto& c : r.checks())
        if (c.relation.rfind(prefix, 0) == 0) return &c;
    return nullptr;
}

// q_r = Σ_k (-t)^k e_k h_{r-k}, then S_λ by cofactor expansion; no shared code with big_schur.
XPoly oracle_q(int r, int n) {
    XPoly out(n);
    if (r < 0) return out;
    for (int k = 0; k <= r; ++k) out += elementary(k, n) * complete(r - k, n) * (-t).pow(k);
    return out;
}

XPoly oracle_det(const std::vector<std::vector<XPoly>>& a) {
    const std::size_t k = a.size();
    if (k == 0) return XPoly(a.empty() ? 0 : a[0][0].nvars(), QT(1));
    if (k == 1) return a[0][0];
    XPoly out(a[0][0].nvars());
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::vector<XPoly>> minor;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<XPoly> row;
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(a[i][c]);
            minor.push_back(row);
        }
        XPoly term = a[0][j] * oracle_det(minor);
        out += j % 2 ? -term : term;
    }
    return out;
}

XPoly oracle_big_schur(const Partition& lam, int n) {
    if (lam.empty()) return XPoly(n, QT(1));
    std::vector<std::vector<XPoly>> a;
    for (int i = 1; i <= lam.length(); ++i) {
        std::vector<XPoly> row;
        for (int j = 1; j <= lam.length(); ++j) row.push_back(oracle_q(lam[i] - i + j, n));
        a.push_back(row);
    }
    return oracle_det(a);
}

}  // namespace

TEST(Kostka, Examples) {
    EXPECT_EQ(kostka_qt(Partition{1}).at(Partition{1}), QT(1));
    const auto k2 = kostka_qt(Partition{2});
    EXPECT_EQ(k2.at(Partition{2}), QT(1));
    EXPECT_EQ(k2.at(Partition{1, 1}), q);
    const auto k11 = kostka_qt(Partition{1, 1});
    EXPECT_EQ(k11.at(Partition{2}), t);
    EXPECT_EQ(k11.at(Partition{1, 1}), QT(1));
}

// Σ_λ K_{λ,μ} S_λ rebuilds J_μ, with S_λ from an independent determinant.
TEST(Kostka, ReconstructsJ) {
    for (int N = 1; N <= 4; ++N)
        for (const auto& mu : partitions_of(N)) {
            XPoly sum(N);
            for (const auto& [lam, k] : kostka_qt(mu)) sum += oracle_big_schur(lam, N) * k;
            EXPECT_EQ(to_msym(sum), eigen_P(mu, N).J) << mu.to_string();
        }
}

TEST(Kostka, ModifiedJ) {
    EXPECT_EQ(modified_J(Partition{1}), SymExpansion::single(Basis::m, Partition{1}));
    EXPECT_EQ(modified_J(Partition{}), SymExpansion::single(Basis::m, Partition{}));
    for (int N = 1; N <= 3; ++N) {
        Report rep = check_modified_schur(N, kostka_table(N));
        EXPECT_TRUE(rep.all_pass()) << rep.to_text();
    }
}

TEST(Kostka, BTableExamples) {
    EXPECT_EQ(b_table(1).at(Partition{1}, Partition{1}), QT(1));
    const BTable b2 = b_table(2);
    EXPECT_EQ(b2.at(Partition{2}, Partition{1, 1}), 1 + q);
    for (const auto& lam : partitions_of(2)) EXPECT_EQ(b2.at(lam, Partition{1, 1}).specialize(1, 1), BigRational(2));
    const BTable b3 = b_table(3);
    EXPECT_EQ(b3.at(Partition{3}, Partition{2, 1}), pochhammer(q, q, 3) / (pochhammer(q, q, 2) * pochhammer(q, q, 1)));
    for (const auto& lam : partitions_of(3)) EXPECT_EQ(b3.at(lam, Partition{1, 1, 1}).specialize(1, 1), BigRational(6));
    EXPECT_THROW(b_table(0), std::invalid_argument);
}

TEST(Kostka, Properties) {
    for (int N = 1; N <= 4; ++N) {
        Report rep = check_kostka_properties(N);
        EXPECT_TRUE(rep.all_pass()) << rep.to_text();
    }
}

// Integrality and the q=t=1 value hold; the literal row formula and duality disagree with
// the tables already at B_{(2),(2)} = 1, while the variants hold.
TEST(Kostka, MultinomialStatements) {
    for (int N = 2; N <= 4; ++N) {
        const BTable B = b_table(N);
        const Report rep = check_multinomial_statements(N, B);
        EXPECT_TRUE(find(rep, "B in Z[q,t]")->pass) << rep.to_text();
        EXPECT_TRUE(find(rep, "B(1,1)")->pass) << rep.to_text();
        EXPECT_FALSE(find(rep, "B_{(N),mu}")->pass);
        EXPECT_FALSE(find(rep, "B_{lambda',mu}")->pass);
        const Report var = check_multinomial_variants(N, B);
        EXPECT_TRUE(var.all_pass()) << var.to_text();
    }
    EXPECT_EQ(b_table(2).at(Partition{2}, Partition{2}), QT(1));
    EXPECT_EQ(q_multinomial_shifted(Partition{2}), q);
}

TEST(Kostka, ColumnIdentity) {
    const Report rep = check_kostka_column(3, kostka_table(3));
    EXPECT_FALSE(find(rep, "K_{nu,(N)}(q,t) = K_{nu,(1^N)}")->pass);
    EXPECT_TRUE(find(rep, "K_{nu,(N)}(q,t) = K_{nu',(1^N)}")->pass);
}

TEST(Kostka, Positivity) {
    for (int N = 1; N <= 4; ++N) {
        const PositivityScan scan = positivity_scan(N, 2);
        EXPECT_EQ(scan.negatives(), 0);
        const auto parts = partitions_of(N);
        EXPECT_EQ(scan.entries.size(), 2 * parts.size() * parts.size());
    }
    const PositivityScan s3 = positivity_scan(3);
    for (const auto& e : s3.entries)
        if (e.table == "B" && e.lambda == Partition{3} && e.mu == Partition{1, 1, 1}) {
            EXPECT_EQ(e.max_q, 3);
            EXPECT_EQ(e.max_t, 0);
        }
    EXPECT_TRUE(has_negative_coefficient(Q("1 - q")));
    EXPECT_FALSE(has_negative_coefficient(Q("1 + 2*q*t")));
}

TEST(Kostka, ParallelMatchesSerial) {
    EXPECT_EQ(kostka_table(4, 1), kostka_table(4, 4));
    EXPECT_EQ(b_table(3, 1), b_table(3, 3));
}
