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
#include <qtmac/hecke.hpp>
#include <qtmac/symfunc.hpp>

#include "gen.hpp"

using namespace qtmac;

namespace {

XPoly P(const char* s, int n) { return parse_xpoly(s, n); }
const QT t = QT::t();

// T_i through the rational expression t + (1 - t x_i/x_{i+1})/(1 - x_i/x_{i+1}) (s_i - 1),
// evaluated monomial by monomial with a geometric-series closed form.
XPoly T_by_rational(const XPoly& f, int i) {
    const int n = f.nvars();
    XPoly num = (XPoly::var(n, i + 1) - XPoly::var(n, i) * t) * (apply_S(f, i) - f);
    return f * t + exact_divide(num, XPoly::var(n, i + 1) - XPoly::var(n, i));
}

XPoly random_poly(gen::Gen& g, int n, int deg) { return gen::random_xpoly(g, n, deg); }

}  // namespace

TEST(Hecke, TiExamples) {
    XPoly sym = P("x1^2 + x2^2 + 5*x1*x2", 2);
    EXPECT_EQ(apply_T(sym, 1), sym * t);
    EXPECT_EQ(apply_T(P("x1", 2), 1), P("x2", 2));
    EXPECT_EQ(apply_T(P("x2", 2), 1), P("t*x1 + (t - 1)*x2", 2));
}

TEST(Hecke, TiInverseExamples) {
    EXPECT_EQ(apply_Tinv(apply_T(P("x1", 2), 1), 1), P("x1", 2));
    XPoly sym = P("x1 + x2 + x3", 3);
    EXPECT_EQ(apply_Tinv(sym, 2), sym * t.inverse());
    EXPECT_EQ(apply_Tinv(P("x2", 2), 1), P("x1", 2));
}

TEST(Hecke, OmegaExamples) {
    // ω(x_1) = q x_n, ω(x_i) = x_{i-1}
    EXPECT_EQ(apply_omega(P("x1", 2)), P("q*x2", 2));
    EXPECT_EQ(apply_omega(P("x2", 2)), P("x1", 2));
    XPoly f = P("x1^2*x2 - t*x2 + 3", 2);
    EXPECT_EQ(apply_omega(apply_omega(f)), f.qshift({1, 2}));
    EXPECT_EQ(apply_omega(XPoly(3, QT(1))), XPoly(3, QT(1)));
    // ω = τ_n s_{n-1} ⋯ s_1
    for (int n = 2; n <= 4; ++n) {
        gen::Gen g(static_cast<unsigned>(n));
        XPoly h = random_poly(g, n, 2);
        XPoly r(h);
        for (int i = 1; i < n; ++i) r = apply_S(r, i);
        r = r.qshift({n});
        EXPECT_EQ(apply_omega(h), r);
    }
}

TEST(Hecke, DunklExamples) {
    EXPECT_EQ(apply_Y(P("x1", 1), 1), P("q*x1", 1));
    XPoly f = P("x1 + x2", 2);
    XPoly lhs = apply_Y(f, 1) * t + apply_Y(f, 2);
    EXPECT_EQ(lhs, f * (QT::t() * QT::q() + 1));
    XPoly sym = P("x1^2 + x2^2 + 2*x1*x2 - x1 - x2", 2);
    // Y_n acts on symmetric input as τ_n; the value is f(x_1, q x_2), which equals f(q x_2, x_1)
    EXPECT_EQ(apply_Y(sym, 2), sym.qshift({2}));
}

TEST(Hecke, TwExamples) {
    XPoly f = P("x1^2*x3 + t*x2", 3);
    EXPECT_EQ(apply_Tw(f, {}), f);
    EXPECT_EQ(apply_Tw(f, {1, 2, 1}), apply_Tw(f, {2, 1, 2}));
    EXPECT_THROW(apply_Tw(f, {1, 1}), NonReducedWord);
}

TEST(Hecke, IotaExamples) {
    EXPECT_EQ(apply_iota(P("x1", 2)), P("x1^-1", 2));
    EXPECT_EQ(apply_iota(P("q*x1", 2)), P("q^-1*x1^-1", 2));
    XPoly f = P("q*x1^2 - t*x2 + 1", 2);
    EXPECT_EQ(apply_iota(apply_iota(f)), f);
}

TEST(Hecke, TiAgreesWithRationalForm) {
    gen::Gen g(31);
    for (int it = 0; it < 40; ++it) {
        const int n = g.uniform(2, 4);
        XPoly f = random_poly(g, n, 3);
        const int i = g.uniform(1, n - 1);
        EXPECT_EQ(apply_T(f, i), T_by_rational(f, i));
    }
}

TEST(Hecke, RelationsSmall) {
    Report r2 = verify_hecke_relations(2, 2);
    EXPECT_TRUE(r2.all_pass()) << r2.to_text();
    Report r3 = verify_hecke_relations(3, 3);
    EXPECT_TRUE(r3.all_pass()) << r3.to_text();
    XPoly f = P("x1*x2*x3", 3);
    EXPECT_EQ(apply_Y(apply_Y(f, 2), 1), apply_Y(apply_Y(f, 1), 2));
}

TEST(Hecke, PreservesLaurentIntegrality) {
    gen::Gen g(41);
    for (int it = 0; it < 40; ++it) {
        const int n = g.uniform(2, 4);
        XPoly f = random_poly(g, n, 3);
        const int i = g.uniform(1, n - 1);
        EXPECT_TRUE(apply_T(f, i).coefficients_laurent_integral());
        EXPECT_TRUE(apply_Tinv(f, i).coefficients_laurent_integral());
        EXPECT_TRUE(apply_Y(f, g.uniform(1, n)).coefficients_laurent_integral());
    }
}

TEST(Hecke, DunklProductsOnSymmetric) {
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const auto& mu : partitions_of(d, n)) {
                XPoly f = monomial_symmetric(mu, n);
                for (int r = 1; r <= n; ++r) {
                    XPoly lhs(f);
                    for (int j = n; j >= n - r + 1; --j) lhs = apply_Y(lhs, j);
                    EXPECT_EQ(lhs, f.qshift(SubsetMask::interval(n - r + 1, n))) << n << " " << mu.to_string();
                }
            }
}

TEST(Hecke, ReducedWordIndependence) {
    gen::Gen g(53);
    for (int n = 3; n <= 4; ++n) {
        XPoly f = random_poly(g, n, 2);
        // enumerate reduced words by BFS over words, group by permutation
        std::map<std::vector<int>, XPoly> by_perm;
        std::vector<std::vector<int>> frontier{{}};
        const int maxlen = n * (n - 1) / 2;
        for (int len = 0; len <= maxlen; ++len) {
            std::vector<std::vector<int>> next;
            for (const auto& w : frontier) {
                if (word_length_of_product(n, w) != static_cast<int>(w.size())) continue;
                std::vector<int> p(static_cast<std::size_t>(n));
                std::iota(p.begin(), p.end(), 0);
                for (int s : w) std::swap(p[static_cast<std::size_t>(s - 1)], p[static_cast<std::size_t>(s)]);
                XPoly v = apply_Tw(f, w);
                auto [it, inserted] = by_perm.emplace(p, v);
                if (!inserted) EXPECT_EQ(it->second, v);
                for (int s = 1; s < n; ++s) {
                    auto w2 = w;
                    w2.push_back(s);
                    next.push_back(w2);
                }
            }
            frontier = std::move(next);
        }
        EXPECT_EQ(by_perm.size(), n == 3 ? 6U : 24U);
    }
}

TEST(Hecke, OpWordMatchesDirect) {
    XPoly f = P("x1^2*x2 + q*x3", 3);
    OpWord y2 = OpWord::Tbar(2) * OpWord::Omega() * OpWord::Tbarinv(1);
    EXPECT_EQ(y2.apply(f), apply_Y(f, 2));
    EXPECT_EQ(OpWord::Y(2).apply(f), apply_Y(f, 2));
    OpWord w = OpWord::MulBy(P("x1", 3)) * OpWord::Tau({1});
    EXPECT_EQ(w.apply(f), f.qshift({1}) * P("x1", 3));
}
