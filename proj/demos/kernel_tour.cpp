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

// The Cauchy-type kernel as a truncated series, and the rational functions h^I_K under
// the Hecke operators.

#include <qtmac/kernel.hpp>

#include <iostream>

using namespace qtmac;

int main() {
    const int n = 2, m = 1, D = 2;
    const XYSeries pi = pi_series(n, m, D);
    for (int d = 0; d <= D; ++d) std::cout << "y-degree " << d << ": " << pi.coeff(Monomial::var(0, d)).to_string() << "\n";
    std::cout << "expansion check: " << (verify_kernel_expansion(n, m, D).all_pass() ? "pass" : "fail") << "\n";

    const std::vector<std::string> names{"x1", "x2", "y1"};
    const RatFn h1 = mimachi_h(n, SubsetMask{1}, SubsetMask{1}, m);
    const RatFn h2 = mimachi_h(n, SubsetMask{2}, SubsetMask{1}, m);
    std::cout << "h^{1}_{1} = " << h1.to_string(names) << "\n";
    std::cout << "h^{2}_{1} = " << h2.to_string(names) << "\n";
    std::cout << "T_1 h^{2}_{1} = h^{1}_{1}: " << (apply_T_ratfn(h2, 1) == h1 ? "yes" : "no") << "\n";
    std::cout << verify_mimachi_T_action(2, 1, 1).to_text();
}
