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
#include <qtmac/parse.hpp>
#include <qtmac/qt.hpp>

#include "gen.hpp"

using namespace qtmac;

namespace {

const QT q = QT::q();
const QT t = QT::t();

}  // namespace

TEST(IntPoly2, CanonicalString) {
    IntPoly2 p = IntPoly2::from_terms({{1, 2, -1}, {0, 0, 1}});
    EXPECT_EQ(p.to_string(), "1 - q*t^2");
    EXPECT_EQ(IntPoly2::monomial(1, 0, -1).to_string(), "t^-1");
    EXPECT_EQ(IntPoly2::monomial(-3, 2, 1).to_string(), "-3*q^2*t");
    EXPECT_EQ(IntPoly2().to_string(), "0");
}

TEST(IntPoly2, ExactDivision) {
    IntPoly2 a = IntPoly2::from_terms({{2, 0, 1}, {0, 0, -1}});
    IntPoly2 b = IntPoly2::from_terms({{1, 0, 1}, {0, 0, -1}});
    auto r = IntPoly2::divide_exact(a, b);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->to_string(), "1 + q");
    EXPECT_FALSE(IntPoly2::divide_exact(b, a).has_value());
    EXPECT_FALSE(IntPoly2::divide_exact(IntPoly2::t(), b).has_value());
}

TEST(IntPoly2, GcdRecoversCommonFactor) {
    gen::Gen g(11);
    for (int it = 0; it < 200; ++it) {
        IntPoly2 a = g.nonzero_int_poly(), b = g.nonzero_int_poly(), c = g.nonzero_int_poly();
        IntPoly2 d = IntPoly2::gcd(a * c, b * c);
        EXPECT_TRUE(IntPoly2::divide_exact(d, c.normalized_associate()).has_value())
            << a.to_string() << " | " << b.to_string() << " | " << c.to_string();
        EXPECT_TRUE(IntPoly2::divide_exact(a * c, d).has_value());
        EXPECT_TRUE(IntPoly2::divide_exact(b * c, d).has_value());
    }
}

TEST(QT, DivisionCancels) {
    QT a = (q * q - 1) / (q - 1);
    EXPECT_EQ(a, q + 1);
    EXPECT_TRUE(a.is_polynomial());
    EXPECT_EQ(a.to_string(), "1 + q");
}

TEST(QT, AdditiveIdentity) {
    QT a = (1 - t) / (1 - q * t);
    EXPECT_EQ(a + 0, a);
}

TEST(QT, RingExpansion) { EXPECT_EQ(((1 - t) * (1 - q * t)).to_string(), "1 - t - q*t + q*t^2"); }

TEST(QT, DivisionByZeroSignals) {
    EXPECT_THROW(QT(1) / QT(0), DivisionByZero);
    EXPECT_THROW(QT(0).inverse(), DivisionByZero);
}

TEST(QT, CanonicalFormIsStructural) {
    QT a = (2 * t * t - 2 * t) / (4 * t - 4 * q * t);
    QT b = QT(IntPoly2::from_terms({{0, 1, 1}, {0, 0, -1}}), IntPoly2::from_terms({{0, 0, 2}, {1, 0, -2}}));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.den().min_t(), 0);
    EXPECT_GT(a.den().leading().c, 0);
    EXPECT_EQ(a.num().content() * 0 + IntPoly2::gcd(a.num(), a.den()).content(), 1);
}

TEST(QT, FractionString) {
    EXPECT_EQ(((1 - t) / (1 - q)).to_string(), "(-1 + t)/(-1 + q)");
    EXPECT_EQ(t.inverse().to_string(), "t^-1");
}

TEST(QT, Pochhammer) {
    EXPECT_EQ(pochhammer(t, t, 2), (1 - t) * (1 - t * t));
    EXPECT_EQ(pochhammer(QT(7) * q, t, 0), QT(1));
    EXPECT_EQ(pochhammer(q, q, 3), (1 - q) * (1 - q * q) * (1 - q * q * q));
}

TEST(QT, Specialize) {
    EXPECT_EQ((1 + q).specialize(1, 1), 2);
    QT one = (1 - t) / (1 - t);
    EXPECT_EQ(one, QT(1));
    EXPECT_EQ(one.specialize(1, 1), 1);
    QT binom = pochhammer(q, q, 2) / (pochhammer(q, q, 1) * pochhammer(q, q, 1));
    // independent value: the Gaussian binomial [2 choose 1]_q = 1 + q
    for (int k = -3; k <= 3; ++k) EXPECT_EQ(binom.specialize(k, 5), BigRational(1 + k));
    EXPECT_EQ(binom.specialize(1, 1), 2);
    EXPECT_THROW((QT(1) / (1 - q)).specialize(1, 2), PoleAtSpecialization);
}

TEST(QT, FieldAxioms) {
    gen::Gen g(2026);
    for (int it = 0; it < 150; ++it) {
        QT a = g.qt(), b = g.qt(), c = g.nonzero_qt();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(c * c.inverse(), QT(1));
        EXPECT_EQ((a / c) * c, a);
        EXPECT_EQ(a - a, QT(0));
    }
}

TEST(QT, NormalizeIdempotent) {
    gen::Gen g(7);
    for (int it = 0; it < 150; ++it) {
        QT a = g.qt();
        QT b(a.num(), a.den());
        EXPECT_EQ(a, b);
        EXPECT_EQ(QT(b.num(), b.den()), b);
    }
}

TEST(QT, SpecializationIsHomomorphism) {
    gen::Gen g(99);
    for (int it = 0; it < 100; ++it) {
        QT a = g.qt(), b = g.qt();
        BigRational q0(g.uniform(2, 9), 7), t0(g.uniform(2, 9), 5);
        try {
            BigRational x = a.specialize(q0, t0), y = b.specialize(q0, t0);
            EXPECT_EQ((a * b).specialize(q0, t0), x * y);
            EXPECT_EQ((a + b).specialize(q0, t0), x + y);
        } catch (const PoleAtSpecialization&) {
        }
    }
}

TEST(QT, PochhammerSplits) {
    gen::Gen g(5);
    for (int it = 0; it < 30; ++it) {
        QT a = g.qt();
        QT base = g.uniform(0, 1) ? q : t;
        int j = g.uniform(0, 3), k = g.uniform(0, 3);
        EXPECT_EQ(pochhammer(a, base, j + k), pochhammer(a, base, j) * pochhammer(a * base.pow(j), base, k));
    }
}

TEST(QT, IotaAndSubstitution) {
    EXPECT_EQ((q * t).iota(), (q * t).inverse());
    gen::Gen g(3);
    for (int it = 0; it < 50; ++it) {
        QT a = g.qt(), b = g.qt();
        EXPECT_EQ(a.iota().iota(), a);
        EXPECT_EQ((a * b).substitute(0, 1, 1, 0), a.substitute(0, 1, 1, 0) * b.substitute(0, 1, 1, 0));
        EXPECT_EQ((a + b).substitute(0, -1, -1, 0), a.substitute(0, -1, -1, 0) + b.substitute(0, -1, -1, 0));
    }
}

TEST(QT, ParseRoundTrip) {
    EXPECT_EQ(parse_qt("1 - q*t^2"), 1 - q * t * t);
    EXPECT_EQ(parse_qt("t^-1"), t.inverse());
    EXPECT_EQ(parse_qt("(1-t)/(1-q)"), (1 - t) / (1 - q));
    gen::Gen g(8);
    for (int it = 0; it < 100; ++it) {
        QT a = g.qt();
        EXPECT_EQ(parse_qt(a.to_string()), a) << a.to_string();
    }
    EXPECT_THROW(parse_qt("x + 1"), ParseError);
    EXPECT_THROW(parse_qt("(1 + q"), ParseError);
}
