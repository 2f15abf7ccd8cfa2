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

#include <stdexcept>
#include <vector>

namespace qtmac {

class SingularSystem : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

using QTMatrix = std::vector<std::vector<QT>>;

/// Solves A X = B exactly over Q(q,t) for square A; B holds the right-hand
/// sides as columns. Gaussian elimination with the sparsest nonzero pivot.
inline QTMatrix solve(QTMatrix A, QTMatrix B) {
    const std::size_t n = A.size();
    const std::size_t k = n ? B[0].size() : 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        std::size_t best = 0;
        for (std::size_t r = col; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            std::size_t cost = A[r][col].num().size() + A[r][col].den().size();
            if (piv == n || cost < best) {
                piv = r;
                best = cost;
            }
        }
        if (piv == n) throw SingularSystem("solve: singular matrix");
        std::swap(A[col], A[piv]);
        std::swap(B[col], B[piv]);
        const QT inv = A[col][col].inverse();
        for (std::size_t j = col; j < n; ++j) A[col][j] *= inv;
        for (std::size_t j = 0; j < k; ++j) B[col][j] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col].is_zero()) continue;
            const QT f = A[r][col];
            for (std::size_t j = col; j < n; ++j)
                if (!A[col][j].is_zero()) A[r][j] -= f * A[col][j];
            for (std::size_t j = 0; j < k; ++j)
                if (!B[col][j].is_zero()) B[r][j] -= f * B[col][j];
        }
    }
    return B;
}

/// Solves A x = b for a single right-hand side.
inline std::vector<QT> solve_vector(const QTMatrix& A, const std::vector<QT>& b) {
    QTMatrix B(b.size(), std::vector<QT>(1));
    for (std::size_t i = 0; i < b.size(); ++i) B[i][0] = b[i];
    QTMatrix X = solve(A, B);
    std::vector<QT> x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) x[i] = X[i][0];
    return x;
}

}  // namespace qtmac
