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
#include <qtmac/macdonald.hpp>

#include "gen.hpp"

using namespace qtmac;

namespace {

XPoly X(const char* s, int n) { return parse_xpoly(s, n); }
QT Q(const char* s) { return parse_qt(s); }
const QT t = QT::t();
const QT q = QT::q();

SymExpansion msym(std::initializer_list<std::pair<Partition, QT>> entries) {
    SymExpansion e(Basis::m);
    for (const auto& [p, c] : entries) e.add(p, c);
    return e;
}

// s_λ as the alternant ratio a_{λ+δ}/a_δ, built from a signed permutation sum.
XPoly alternant_schur(const Partition& lam, int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i;
    XPoly num(n);
    do {
        Monomial m;
        int inv = 0;
        for (int i = 0; i < n; ++i) {
            m[w[static_cast<std::size_t>(i)]] = static_cast<std::int16_t>(lam[i + 1] + n - 1 - i);
            for (int j = i + 1; j < n; ++j) inv += w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)];
        }
        num.add_term(m, QT(inv % 2 ? -1 : 1));
    } while (std::next_permutation(w.begin(), w.end()));
    return exact_divide(num, vandermonde(n));
}

SymExpansion specialize_coeffs(const SymExpansion& e, int a, int b, int c, int d) {
    SymExpansion r(e.basis);
    for (const auto& [mu, v] : e.coeffs) r.add(mu, v.substitute(a, b, c, d));
    return r;
}

}  // namespace

TEST(Macdonald, DrExamples) {
    const XPoly f = X("x1^2*x2 + x1*x2^2 + 3*x1 + 3*x2", 2);
    EXPECT_EQ(macdonald_Dr(f, 0), f);
    EXPECT_EQ(macdonald_Dr(f, 2), f.qshift(SubsetMask::full(2)) * t);
    EXPECT_EQ(macdonald_Dr(X("x1 + x2", 2), 1), X("(t*q + 1)*(x1 + x2)", 2));
    const XPoly g = X("x1*x2*x3 + x1 + x2 + x3", 3);
    EXPECT_EQ(macdonald_Dr(g, 3), g.qshift(SubsetMask::full(3)) * t.pow(3));
    EXPECT_THROW(macdonald_Dr(X("x1", 2), 1), NotSymmetric);
    EXPECT_THROW(macdonald_Dr(X("x1", 2), 3), std::out_of_range);
}

TEST(Macdonald, DuExamples) {
    for (int n = 1; n <= 4; ++n) {
        const auto D = macdonald_Du(XPoly(n, QT(1)));
        const EigenvaluePoly c = eigenvalue_c(Partition{}, n);
        ASSERT_EQ(D.size(), static_cast<std::size_t>(n + 1));
        for (int r = 0; r <= n; ++r) EXPECT_EQ(D[static_cast<std::size_t>(r)], XPoly(n, c.signed_coeff(r)));
        // (u;t)_n at a sample u
        EXPECT_EQ(macdonald_Du_determinant(XPoly(n, QT(1)), q), XPoly(n, pochhammer(q, t, n)));
    }
    const XPoly m1 = monomial_symmetric(Partition{1}, 3);
    EXPECT_EQ(macdonald_Dr(macdonald_Dr(m1, 2), 1), macdonald_Dr(macdonald_Dr(m1, 1), 2));
    const XPoly a = monomial_symmetric(Partition{2, 1}, 3), b = monomial_symmetric(Partition{3}, 3);
    for (int r = 0; r <= 3; ++r) EXPECT_EQ(macdonald_Dr(a + b, r), macdonald_Dr(a, r) + macdonald_Dr(b, r));
}

TEST(Macdonald, DeterminantForm) {
    const XPoly f1 = X("x1^2 + 2", 1);
    const QT u = Q("q^2 - t");
    EXPECT_EQ(macdonald_Du_determinant(f1, u), f1 - f1.qshift(SubsetMask{1}) * u);
    // two values of u pin down a polynomial of degree 2 in u only together with u = 0
    const XPoly f = X("x1 + x2", 2);
    for (const QT& v : {QT(0), QT(2), q * t}) {
        XPoly subset(2);
        const auto D = macdonald_Du(f);
        QT p(1);
        for (const auto& d : D) {
            subset += d * p;
            p *= -v;
        }
        EXPECT_EQ(macdonald_Du_determinant(f, v), subset);
    }
}

TEST(Macdonald, EigenvalueExamples) {
    EXPECT_EQ(eigenvalue_c(Partition{}, 2).at(q), (1 - q * t) * (1 - q));
    const EigenvaluePoly c = eigenvalue_c(Partition{1}, 2);
    EXPECT_EQ(c.coeffs_in_u.size(), 3U);
    EXPECT_EQ(c.at(Q("q + 2")), (1 - Q("q + 2") * t * q) * (1 - Q("q + 2")));
    for (const auto& lam : partitions_up_to(4))
        for (int m = std::max(lam.length(), 1); m <= 4; ++m)
            if (lam[m] == 0) EXPECT_TRUE(eigenvalue_c(lam, m).at(QT(1)).is_zero());
    EXPECT_THROW(eigenvalue_c(Partition{1, 1, 1}, 2), TooFewVariables);
}

TEST(Macdonald, EigenPExamples) {
    EXPECT_EQ(eigen_P(Partition{1}, 1).P, msym({{Partition{1}, QT(1)}}));
    EXPECT_EQ(eigen_P(Partition{1, 1}, 2).P, msym({{Partition{1, 1}, QT(1)}}));
    EXPECT_EQ(eigen_P(Partition{2}, 2).P,
              msym({{Partition{2}, QT(1)}, {Partition{1, 1}, Q("(1 + q)*(1 - t)/(1 - q*t)")}}));
    EXPECT_THROW(eigen_P(Partition{1, 1, 1}, 2), TooFewVariables);
}

// P_λ(x; q, q) = s_λ and P_λ(x; q, 1) = m_λ are classical checks independent of the solver.
TEST(Macdonald, EigenPSpecializations) {
    for (int N = 1; N <= 4; ++N)
        for (const auto& lam : partitions_of(N)) {
            const SymExpansion P = eigen_P(lam, N).P;
            EXPECT_EQ(specialize_coeffs(P, 1, 0, 1, 0), to_msym(alternant_schur(lam, N))) << lam.to_string();
            EXPECT_EQ(specialize_coeffs(P, 1, 0, 0, 0), SymExpansion::single(Basis::m, lam)) << lam.to_string();
        }
}

TEST(Macdonald, EigenEquation) {
    for (int N = 1; N <= 4; ++N) {
        Report rep = verify_eigen_equation(N, N);
        EXPECT_TRUE(rep.all_pass()) << rep.to_text();
    }
}

TEST(Macdonald, RaisingExamples) {
    const XPoly one(3, QT(1));
    for (int m = 1; m <= 3; ++m) EXPECT_EQ(raising_Bm_qdiff(one, m), elementary(m, 3) * pochhammer(t, t, m));
    const XPoly J1 = X("(1 - t)*(x1 + x2)", 2);
    EXPECT_EQ(raising_Bm_qdiff(XPoly(2, QT(1)), 1), J1);
    const SymExpansion J2 = msym({{Partition{2}, Q("(1 - t)*(1 - q*t)")}, {Partition{1, 1}, Q("(1 + q)*(1 - t)^2")}});
    EXPECT_EQ(to_msym(raising_Bm_qdiff(J1, 1)), J2);
    EXPECT_EQ(to_msym(raising_Bm_qdiff(from_msym(J2, 3), 1)),
              eigen_P(Partition{3}, 3).J);
}

TEST(Macdonald, LoweringExamples) {
    for (int n = 1; n <= 3; ++n) {
        EXPECT_EQ(lowering_Am_qdiff(raising_Bm_qdiff(XPoly(n, QT(1)), 1), 1),
                  XPoly(n, (1 - q) * (1 - t.pow(n))));
        for (int m = 1; m <= n; ++m) EXPECT_TRUE(lowering_Am_qdiff(XPoly(n, QT(1)), m).is_zero());
    }
    const XPoly P21 = from_msym(eigen_P(Partition{2, 1}, 3).P, 3);
    EXPECT_TRUE(lowering_Am_qdiff(P21, 3).is_zero());
}

TEST(Macdonald, DunklForms) {
    EXPECT_EQ(raising_Bm_dunkl(XPoly(1, QT(1)), 1), X("(1 - t)*x1", 1));
    EXPECT_EQ(raising_Bm_dunkl(XPoly(3, QT(1)), 2), raising_Bm_qdiff(XPoly(3, QT(1)), 2));
    const XPoly e2 = elementary(2, 3);
    EXPECT_EQ(lowering_Am_dunkl(e2, 2), lowering_Am_qdiff(e2, 2));
    for (int n = 1; n <= 3; ++n) {
        Report rep = verify_operator_forms(n, 2);
        EXPECT_TRUE(rep.all_pass()) << rep.to_text();
    }
}

TEST(Macdonald, RodriguesExamples) {
    EXPECT_EQ(rodrigues_J(Partition{}, 2), SymExpansion::single(Basis::m, Partition{}));
    EXPECT_EQ(rodrigues_J(Partition{2}, 2),
              msym({{Partition{2}, Q("(1 - t)*(1 - q*t)")}, {Partition{1, 1}, Q("(1 + q)*(1 - t)^2")}}));
    for (int m = 1; m <= 4; ++m) {
        const Partition col(std::vector<int>(static_cast<std::size_t>(m), 1));
        EXPECT_EQ(rodrigues_J(col, m), to_msym(elementary(m, m) * pochhammer(t, t, m)));
    }
    EXPECT_THROW(rodrigues_J(Partition{1, 1, 1}, 2), TooFewVariables);
}

TEST(Macdonald, RodriguesMatchesOracle) {
    for (int N = 0; N <= 4; ++N) {
        Report rep = verify_rodrigues(N);
        EXPECT_TRUE(rep.all_pass()) << rep.to_text();
    }
}

TEST(Macdonald, RaisingLoweringCommutator) {
    Report rep = verify_raising(4, 4);
    rep.merge(verify_lowering(4, 4));
    rep.merge(verify_commutator(2, 3));
    EXPECT_TRUE(rep.all_pass()) << rep.to_text();
}

TEST(Macdonald, CenterRestriction) {
    for (auto [n, r] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{2, 2}}) {
        Report rep = verify_center_restriction(n, r, 2);
        EXPECT_TRUE(rep.all_pass()) << rep.to_text();
    }
}

TEST(Macdonald, SubsetIdentities) {
    for (int n = 1; n <= 3; ++n) {
        Report rep = verify_subset_sum_identities(n);
        EXPECT_TRUE(rep.all_pass()) << rep.to_text();
    }
}

// D^(r) preserves symmetry and commutes pairwise on seeded random symmetric inputs.
TEST(Macdonald, DrCommuteProperty) {
    gen::Gen g(7);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = g.uniform(2, 3);
        XPoly f(n);
        for (const auto& mu : partitions_up_to(2, n)) f += monomial_symmetric(mu, n) * QT(g.int_poly(1, 1, -1, 1, 2));
        const int r = g.uniform(1, n), s = g.uniform(1, n);
        const XPoly a = macdonald_Dr(macdonald_Dr(f, r), s), b = macdonald_Dr(macdonald_Dr(f, s), r);
        EXPECT_TRUE(is_symmetric(a));
        EXPECT_EQ(a, b);
    }
}
