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
#include <qtmac/xpoly.hpp>

#include <numeric>

#include "gen.hpp"

using namespace qtmac;

namespace {

XPoly P(const char* s, int n) { return parse_xpoly(s, n); }

XPoly random_xpoly(gen::Gen& g, int n, int terms, int maxdeg, bool laurent = false) {
    XPoly f(n);
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        for (int i = 0; i < n; ++i) m[i] = static_cast<std::int16_t>(g.uniform(laurent ? -1 : 0, maxdeg));
        f.add_term(m, QT(g.int_poly(2, 2, 0, 2, 3)));
    }
    return f;
}

std::vector<int> random_perm(gen::Gen& g, int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), g.engine());
    return w;
}

}  // namespace

TEST(XPoly, QShift) {
    EXPECT_EQ(P("x1^2*x2", 2).qshift({1}), P("q^2*x1^2*x2", 2));
    XPoly f = P("x1 - t*x2^3 + 4", 2);
    EXPECT_EQ(f.qshift({}), f);
    EXPECT_EQ(P("x1 + x2", 2).qshift({1, 2}), P("q*(x1 + x2)", 2));
}

TEST(XPoly, Permute) {
    EXPECT_EQ(P("x1", 2).permute({2, 1}), P("x2", 2));
    XPoly sym = P("x1^2*x2 + x1*x2^2 + x3^2*x1 + x1^2*x3 + x2^2*x3 + x2*x3^2", 3);
    EXPECT_EQ(sym.permute({3, 1, 2}), sym);
    EXPECT_EQ(P("x1*x2^2", 2).permute({2, 1}), P("x1^2*x2", 2));
}

TEST(XPoly, ExactDivide) {
    EXPECT_EQ(exact_divide(P("x1^2 - x2^2", 2), P("x1 - x2", 2)), P("x1 + x2", 2));
    XPoly f = P("q*x1^3 - t*x2 + 1", 2);
    EXPECT_EQ(exact_divide(f, XPoly(2, QT(1))), f);
    EXPECT_THROW(exact_divide(P("x1", 2), P("x1 - x2", 2)), NotDivisibleX);
    try {
        exact_divide(P("x1", 2), P("x1 - x2", 2));
    } catch (const NotDivisibleX& e) {
        EXPECT_FALSE(e.remainder().empty());
    }
}

TEST(XPoly, VandermondeDivide) {
    EXPECT_EQ(vandermonde_divide(P("x1 - x2", 2)), XPoly(2, QT(1)));
    EXPECT_EQ(vandermonde_divide(P("x1^2 - x2^2", 2)), P("x1 + x2", 2));
    EXPECT_EQ(vandermonde_divide(vandermonde(3) * P("x1", 3)), P("x1", 3));
    EXPECT_THROW(vandermonde_divide(P("x1", 2)), NotDivisibleX);
}

TEST(XPoly, ElementaryOnSubset) {
    EXPECT_EQ(elementary_on_subset(2, 1, {1, 2}), P("x1 + x2", 2));
    EXPECT_EQ(elementary_on_subset(3, 0, {2}), XPoly(3, QT(1)));
    EXPECT_EQ(elementary_on_subset(2, 1, {1, 2}, true), P("x1^-1 + x2^-1", 2));
    EXPECT_TRUE(elementary_on_subset(3, 3, {1, 2}).is_zero());
}

TEST(XPoly, MSymRoundTrip) {
    auto e1 = to_msym(P("x1 + x2", 2));
    EXPECT_EQ(e1.coeffs.size(), 1U);
    EXPECT_EQ(e1.coeff(Partition{1}), QT(1));
    EXPECT_EQ(to_msym(P("x1*x2", 2)).coeff(Partition{1, 1}), QT(1));
    auto e3 = to_msym(P("x1^2 + x2^2 + 3*x1*x2", 2));
    EXPECT_EQ(e3.coeff(Partition{2}), QT(1));
    EXPECT_EQ(e3.coeff(Partition{1, 1}), QT(3));
    EXPECT_THROW(to_msym(P("x1", 2)), NotSymmetric);
    try {
        to_msym(P("x1 + x2", 3));
    } catch (const NotSymmetric& e) {
        EXPECT_EQ(e.witness(), std::make_pair(2, 3));
    }
    EXPECT_THROW(from_msym(SymExpansion::single(Basis::m, Partition{1, 1, 1}), 2), TooFewVariables);
}

TEST(XPoly, PermuteIsGroupAction) {
    gen::Gen g(1);
    for (int it = 0; it < 60; ++it) {
        const int n = g.uniform(2, 5);
        XPoly f = random_xpoly(g, n, 4, 3, true);
        auto v = random_perm(g, n), w = random_perm(g, n);
        std::vector<int> wv(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) wv[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(v[static_cast<std::size_t>(i)] - 1)];
        EXPECT_EQ(f.permute(v).permute(w), f.permute(wv));
        SubsetMask I(static_cast<unsigned>(g.uniform(0, (1 << n) - 1)));
        SubsetMask wI;
        for (int i : I.members()) wI.insert(w[static_cast<std::size_t>(i - 1)]);
        EXPECT_EQ(f.qshift(I).permute(w), f.permute(w).qshift(wI));
    }
}

TEST(XPoly, DivisionRoundTrip) {
    gen::Gen g(2);
    for (int it = 0; it < 60; ++it) {
        const int n = g.uniform(1, 4);
        XPoly f = random_xpoly(g, n, 5, 3, true);
        XPoly d = random_xpoly(g, n, 3, 2, true);
        if (d.is_zero()) continue;
        EXPECT_EQ(exact_divide(f * d, d), f);
    }
}

TEST(XPoly, MSymRoundTripOnProductsOfElementary) {
    gen::Gen g(3);
    for (int it = 0; it < 40; ++it) {
        const int n = g.uniform(1, 4);
        XPoly f(n, QT(1));
        const int k = g.uniform(1, 3);
        for (int j = 0; j < k; ++j) f *= elementary_on_subset(n, g.uniform(0, n), SubsetMask::full(n)) * QT(g.int_poly(2, 1, 0, 1, 2)) + XPoly(n, QT(g.uniform(-2, 2)));
        EXPECT_TRUE(is_symmetric(f));
        EXPECT_EQ(from_msym(to_msym(f), n), f);
    }
}

TEST(XPoly, Iota) {
    EXPECT_EQ(P("x1", 2).iota(), P("x1^-1", 2));
    EXPECT_EQ(P("q*x1", 2).iota(), P("q^-1*x1^-1", 2));
    gen::Gen g(4);
    for (int it = 0; it < 20; ++it) {
        XPoly f = random_xpoly(g, 3, 4, 2, true);
        EXPECT_EQ(f.iota().iota(), f);
    }
}
