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

// Computes a few Macdonald polynomials, applies the operators that define them and prints
// a small Kostka table.

#include <qtmac/kostka.hpp>
#include <qtmac/macdonald.hpp>

#include <iostream>

using namespace qtmac;

int main() {
    const int n = 3;
    for (const auto& lam : partitions_of(3)) {
        const MacdonaldPair pj = eigen_P(lam, n);
        std::cout << "P_" << lam.to_string() << " = " << pj.P.to_string() << "\n";
        std::cout << "J_" << lam.to_string() << " = " << pj.J.to_string() << "\n";
    }

    // D^(1) acts on P_(2,1) by a scalar; print it.
    const SymExpansion P = eigen_P(Partition{2, 1}, n).P;
    const SymExpansion DP = macdonald_Dr(P, n, 1);
    std::cout << "D^(1) P_(2,1) / P_(2,1) = " << (DP.coeff(Partition{2, 1}) / P.coeff(Partition{2, 1})).to_string() << "\n";

    // The same J from the raising operators.
    std::cout << "Rodrigues J_(2,1) matches: " << (rodrigues_J(Partition{2, 1}, n) == eigen_P(Partition{2, 1}, n).J ? "yes" : "no")
              << "\n";

    const KostkaTable K = kostka_table(3);
    std::cout << "K_{lambda,mu}(q,t), rows lambda, columns mu:\n";
    for (const auto& lam : partitions_of(3)) {
        std::cout << "  " << lam.to_string() << ":";
        for (const auto& mu : partitions_of(3)) std::cout << "  " << K.at(lam, mu).to_string();
        std::cout << "\n";
    }
}
