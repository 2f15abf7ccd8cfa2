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

// Seeded random generators for property tests.

#include <qtmac/xpoly.hpp>

#include <random>
#include <vector>

namespace qtmac::gen {

class Gen {
   public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    IntPoly2 int_poly(int max_terms = 4, int max_q = 3, int min_t = -1, int max_t = 3, int coeff = 5) {
        std::vector<Term2> terms;
        const int k = uniform(1, max_terms);
        for (int i = 0; i < k; ++i) terms.push_back({uniform(0, max_q), uniform(min_t, max_t), BigInt(uniform(-coeff, coeff))});
        return IntPoly2::from_terms(std::move(terms));
    }

    IntPoly2 nonzero_int_poly(int max_terms = 4) {
        while (true) {
            IntPoly2 p = int_poly(max_terms);
            if (!p.is_zero()) return p;
        }
    }

    QT qt() { return QT(int_poly(3), nonzero_int_poly(3)); }

    QT nonzero_qt() {
        while (true) {
            QT a = qt();
            if (!a.is_zero()) return a;
        }
    }

    std::mt19937& engine() { return rng_; }

   private:
    std::mt19937 rng_;
};

/// Four terms with exponents in [0, deg] and small coefficients in Z[q, t, t^-1].
inline XPoly random_xpoly(Gen& g, int n, int deg) {
    XPoly f(n);
    for (int k = 0; k < 4; ++k) {
        Monomial m;
        for (int i = 0; i < n; ++i) m[i] = static_cast<std::int16_t>(g.uniform(0, deg));
        f.add_term(m, QT(g.int_poly(2, 1, -1, 1, 3)));
    }
    return f;
}

}  // namespace qtmac::gen
