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

// Acceptance run: one PASS/FAIL line per criterion, failing relations listed under it.
// Exit status is 0 only when every criterion passes. No cache is used.

#include <qtmac/hecke.hpp>
#include <qtmac/kernel.hpp>
#include <qtmac/kostka.hpp>
#include <qtmac/macdonald.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

using namespace qtmac;

namespace {

int g_jobs = 1;
// Informational lines gathered while a criterion runs, printed after its status line.
std::vector<std::string> g_notes;

bool run(int id, const std::string& what, const std::function<Report()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    std::string error;
    try {
        rep = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && rep.all_pass();
    std::size_t instances = 0;
    for (const auto& c : rep.checks()) instances += static_cast<std::size_t>(c.instances);
    std::printf("criterion %2d: %s  %s  [%zu checks, %.1fs]\n", id, ok ? "PASS" : "FAIL", what.c_str(), instances, secs);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    for (const auto& c : rep.checks())
        if (!c.pass)
            std::printf("    failed: %s  (%s)\n", c.relation.c_str(), c.counterexample.value_or("").c_str());
    for (const auto& note : g_notes) std::printf("    info: %s\n", note.c_str());
    g_notes.clear();
    std::fflush(stdout);
    return ok;
}

void note(const Report& rep) {
    for (const auto& c : rep.checks())
        g_notes.push_back(std::string(c.pass ? "holds " : "fails ") + c.relation + " [" + std::to_string(c.instances) + "]" +
                          (c.counterexample ? "  " + *c.counterexample : ""));
}

Report rodrigues() {
    Report rep("rodrigues");
    for (int N = 1; N <= 5; ++N) rep.merge(verify_rodrigues(N));
    return rep;
}

Report integrality() {
    Report rep("integrality");
    for (int N = 1; N <= 5; ++N)
        for (const auto& lam : partitions_of(N)) {
            const SymExpansion J = eigen_P(lam, N).J;
            for (const auto& [mu, c] : J.coeffs)
                rep.record("J_lambda m-coefficient in Z[q,t]", is_integer_polynomial(c),
                           lam.to_string() + " " + mu.to_string() + " " + c.to_string());
        }
    return rep;
}

Report kostka() {
    Report rep("kostka");
    for (int N = 1; N <= 5; ++N) rep.merge(check_kostka_properties(N, kostka_table(N, g_jobs)));
    return rep;
}

Report closed_forms() {
    Report rep("closed forms");
    const QT t = QT::t();
    for (int m = 1; m <= 5; ++m) {
        const Partition col(std::vector<int>(static_cast<std::size_t>(m), 1));
        SymExpansion expect(Basis::m);
        expect.add(col, pochhammer(t, t, m));
        rep.record("J_{(1^m)} = (t;t)_m e_m", eigen_P(col, m).J == expect, col.to_string());
    }
    for (int n = 1; n <= 4; ++n) rep.merge(verify_subset_sum_identities(n));
    return rep;
}

Report b_statements() {
    Report rep("multinomial");
    Report variants("variants");
    for (int N = 1; N <= 5; ++N) {
        const BTable B = b_table(N, g_jobs);
        rep.merge(check_multinomial_statements(N, B));
        variants.merge(check_multinomial_variants(N, B));
    }
    note(variants);
    note(positivity_report(positivity_scan(4, g_jobs)));
    return rep;
}

Report hecke() {
    Report rep("hecke");
    for (int n = 2; n <= 4; ++n) rep.merge(verify_hecke_relations(n, 3));
    return rep;
}

Report center() {
    Report rep("center");
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= n; ++r) rep.merge(verify_center_restriction(n, r, 3));
    return rep;
}

Report operator_forms() {
    Report rep("forms");
    for (int n = 1; n <= 3; ++n) rep.merge(verify_operator_forms(n, 3));
    return rep;
}

Report lowering() {
    Report rep("lowering");
    rep.merge(verify_lowering(4, 4));
    rep.merge(verify_commutator(2, 3));
    return rep;
}

Report kernel() {
    Report rep("kernel");
    for (auto [n, m, D] : {std::tuple{2, 2, 2}, std::tuple{3, 2, 3}, std::tuple{1, 1, 3}})
        rep.merge(verify_kernel_expansion(n, m, D));
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 2; ++m) {
            for (int r = 0; r <= std::min(n, m); ++r) rep.merge(verify_mimachi_T_action(n, m, r));
            rep.merge(verify_expansion_identities(n, m));
        }
    for (auto [n, m, D] : {std::tuple{2, 1, 3}, std::tuple{3, 2, 3}}) rep.merge(verify_kernel_operators(n, m, D));
    rep.merge(verify_F_identity(2, 1, 2));
    return rep;
}

}  // namespace

int main() {
    g_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool all = true;
    all &= run(1, "Rodrigues formula equals the eigenvector oracle, |lambda| <= 5", rodrigues);
    all &= run(2, "J_lambda integral in the monomial basis, |lambda| <= 5", integrality);
    all &= run(3, "K_{lambda,mu}(q,t) integrality, duality, K(1,1) = f^lambda, sizes <= 5", kostka);
    all &= run(4, "column closed form and subset-sum identities", closed_forms);
    all &= run(5, "B table statements as stated, sizes <= 5", b_statements);
    all &= run(6, "Hecke and Dunkl relations, n in {2,3,4}, degree <= 3", hecke);
    all &= run(7, "center restriction e_r(Y) = D^(r) and its dual, n <= 3", center);
    all &= run(8, "determinant and Dunkl operator forms, n <= 3, degree <= 3", operator_forms);
    all &= run(9, "lowering operators |lambda| <= 4 and the commutator at n = 3", lowering);
    all &= run(10, "kernel expansion, Hecke action on h^I_K, expansion identities", kernel);
    std::printf("overall: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
