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

// qtmac command line. Exit codes: 0 success, 1 a verification failed, 2 usage error,
// 3 internal error.

#include <qtmac/cache.hpp>
#include <qtmac/hecke.hpp>
#include <qtmac/io.hpp>
#include <qtmac/kernel.hpp>
#include <qtmac/kostka.hpp>
#include <qtmac/macdonald.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

using namespace qtmac;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string what;
    std::string lambda;
    std::optional<int> n, m, size, degree;
    std::string format;
    std::optional<std::string> cache_dir;
    bool no_cache = false;
    int jobs = 0;
};

int jobs_of(const Options& o) {
    if (o.jobs > 0) return o.jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<Cache> open_cache(const Options& o) {
    auto root = resolve_cache_root(o.cache_dir, o.no_cache);
    if (!root) return std::nullopt;
    return Cache(*root);
}

// Looks the key up, or computes and stores. A broken cache never blocks the answer.
Json cached(const Options& o, const CacheKey& key, const std::function<Json()>& compute) {
    std::optional<Cache> cache;
    try {
        cache = open_cache(o);
        if (cache)
            if (auto hit = cache->get(key)) return *hit;
    } catch (const CacheError& e) {
        std::cerr << "warning: " << e.what() << "\n";
        cache.reset();
    }
    Json value = compute();
    if (cache) {
        try {
            cache->put(key, value);
        } catch (const CacheError& e) {
            std::cerr << "warning: " << e.what() << "\n";
        }
    }
    return value;
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (f == a) return;
    throw UsageError("unsupported --format " + f);
}

int run_compute(const Options& o) {
    const std::string fmt = o.format.empty() ? "json" : o.format;
    require_format(fmt, {"json", "csv", "latex"});
    const Partition lambda = Partition::parse(o.lambda);
    const int n = o.what == "Jmod" ? lambda.size() : o.n.value_or(lambda.size());
    if (o.what != "Jmod" && lambda.length() > n)
        throw TooFewVariables(lambda.to_string() + " has more than " + std::to_string(n) + " parts");
    const Json payload = cached(o, CacheKey{o.what, lambda, n}, [&]() -> Json {
        if (o.what == "P") return to_json(eigen_P(lambda, n).P);
        if (o.what == "J") return to_json(eigen_P(lambda, n).J);
        return to_json(modified_J(lambda));
    });
    const SymExpansion e = sym_from_json(payload);
    if (fmt == "json")
        std::cout << Json{{"kind", o.what}, {"lambda", to_json(lambda)}, {"n", n}, {"expansion", payload}}.dump(2) << "\n";
    else if (fmt == "csv")
        std::cout << to_csv(e);
    else
        std::cout << to_latex(e) << "\n";
    return 0;
}

int run_table(const Options& o) {
    const std::string fmt = o.format.empty() ? "json" : o.format;
    require_format(fmt, {"json", "csv", "latex"});
    const int N = o.size.value_or(3);
    if (N < 1) throw UsageError("--size must be positive");
    const int jobs = jobs_of(o);
    const Json payload = cached(o, CacheKey{o.what, Partition{}, N}, [&]() -> Json {
        return o.what == "K" ? to_json(kostka_table(N, jobs)) : to_json(b_table(N, jobs));
    });
    const QTTable T = table_from_json(payload);
    if (fmt == "json")
        std::cout << Json{{"kind", o.what}, {"table", payload}}.dump(2) << "\n";
    else if (fmt == "csv")
        std::cout << to_csv(T);
    else
        std::cout << to_latex(T);
    return 0;
}

// Each suite returns one merged report. Without size flags the suites run at the sizes
// the acceptance run uses.
Report build_suite(const Options& o) {
    const std::string& s = o.what;
    Report rep(s);
    if (s == "hecke") {
        const int d = o.degree.value_or(3);
        for (int n = o.n.value_or(2); n <= o.n.value_or(4); ++n) rep.merge(verify_hecke_relations(n, d));
    } else if (s == "center") {
        const int d = o.degree.value_or(3);
        for (int n = o.n.value_or(1); n <= o.n.value_or(3); ++n)
            for (int r = 0; r <= n; ++r) rep.merge(verify_center_restriction(n, r, d));
    } else if (s == "forms") {
        rep.merge(verify_operator_forms(o.n.value_or(3), o.degree.value_or(3)));
    } else if (s == "eigen") {
        for (int N = 1; N <= o.size.value_or(4); ++N) rep.merge(verify_eigen_equation(N, o.n.value_or(N)));
    } else if (s == "rodrigues") {
        for (int N = 1; N <= o.size.value_or(5); ++N) rep.merge(verify_rodrigues(N));
    } else if (s == "operators") {
        const int N = o.size.value_or(4), n = o.n.value_or(4);
        rep.merge(verify_raising(N, n));
        rep.merge(verify_lowering(N, n));
        rep.merge(verify_commutator(o.size.value_or(2), o.n.value_or(3)));
    } else if (s == "kostka") {
        const int jobs = jobs_of(o);
        for (int N = 1; N <= o.size.value_or(5); ++N) {
            const KostkaTable K = kostka_table(N, jobs);
            rep.merge(check_kostka_properties(N, K));
            rep.merge(check_modified_schur(N, K));
        }
    } else if (s == "multinomial") {
        const int jobs = jobs_of(o);
        for (int N = 1; N <= o.size.value_or(5); ++N) {
            const BTable B = b_table(N, jobs);
            rep.merge(check_multinomial_statements(N, B));
            rep.merge(check_multinomial_variants(N, B));
        }
    } else if (s == "kernel") {
        if (o.n || o.m || o.degree) {
            const int n = o.n.value_or(2), m = o.m.value_or(1), D = o.degree.value_or(3);
            rep.merge(verify_kernel_expansion(n, m, D));
            rep.merge(verify_kernel_operators(n, m, D));
            rep.merge(verify_F_identity(n, m, std::min(D, 2)));
        } else {
            for (auto [n, m, D] : {std::tuple{2, 2, 2}, std::tuple{3, 2, 3}, std::tuple{1, 1, 3}})
                rep.merge(verify_kernel_expansion(n, m, D));
            for (auto [n, m, D] : {std::tuple{2, 1, 3}, std::tuple{3, 2, 3}}) rep.merge(verify_kernel_operators(n, m, D));
            rep.merge(verify_F_identity(2, 1, 2));
        }
    } else if (s == "mimachi") {
        for (int n = o.n.value_or(1); n <= o.n.value_or(3); ++n)
            for (int m = o.m.value_or(1); m <= o.m.value_or(2); ++m)
                for (int r = 0; r <= std::min(n, m); ++r) rep.merge(verify_mimachi_T_action(n, m, r));
    } else if (s == "identities") {
        for (int n = o.n.value_or(1); n <= o.n.value_or(3); ++n)
            for (int m = o.m.value_or(1); m <= o.m.value_or(2); ++m) rep.merge(verify_expansion_identities(n, m));
        for (int n = o.n.value_or(1); n <= o.n.value_or(4); ++n) rep.merge(verify_subset_sum_identities(n));
    } else {
        throw UsageError("unknown suite " + s);
    }
    return rep;
}

int run_verify(const Options& o) {
    const std::string fmt = o.format.empty() ? "text" : o.format;
    require_format(fmt, {"text", "json", "csv"});
    const Report rep = build_suite(o);
    if (fmt == "text")
        std::cout << rep.to_text();
    else if (fmt == "json")
        std::cout << to_json(rep).dump(2) << "\n";
    else
        std::cout << to_csv(rep);
    return rep.all_pass() ? 0 : kExitFail;
}

// Report-only: negative coefficients are findings, not failures.
int run_scan(const Options& o) {
    const std::string fmt = o.format.empty() ? "json" : o.format;
    require_format(fmt, {"json", "csv", "text"});
    const PositivityScan scan = positivity_scan(o.size.value_or(4), jobs_of(o));
    if (fmt == "json")
        std::cout << to_json(scan).dump(2) << "\n";
    else if (fmt == "csv")
        std::cout << to_csv(scan);
    else
        std::cout << positivity_report(scan).to_text();
    return 0;
}

void optional_int(CLI::App* app, const std::string& name, std::optional<int>& slot, const std::string& help) {
    app->add_option_function<int>(name, [&slot](const int& v) { slot = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macdonald polynomials over Q(q,t): compute, tabulate and verify"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format");
        sub->add_option("--cache-dir", o.cache_dir, "Cache directory (overrides QTMAC_CACHE_DIR)");
        sub->add_flag("--no-cache", o.no_cache, "Do not read or write the cache");
        sub->add_option("--jobs", o.jobs, "Worker threads (default: hardware concurrency)")->check(CLI::NonNegativeNumber);
    };

    auto* compute = app.add_subcommand("compute", "P_lambda, J_lambda or the modified J in the monomial basis");
    compute->add_option("kind", o.what, "P, J or Jmod")->required()->check(CLI::IsMember({"P", "J", "Jmod"}));
    compute->add_option("--lambda", o.lambda, "Partition, e.g. 3,1 (0 or - for the empty partition)")->required();
    optional_int(compute, "--n", o.n, "Number of variables (default |lambda|)");
    common(compute);

    auto* table = app.add_subcommand("table", "Kostka-Macdonald table K or modified table B");
    table->add_option("kind", o.what, "K or B")->required()->check(CLI::IsMember({"K", "B"}));
    optional_int(table, "--size", o.size, "Partition size N (default 3)");
    common(table);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify
        ->add_option("suite", o.what,
                     "hecke, center, forms, eigen, rodrigues, operators, kostka, multinomial, kernel, mimachi or identities")
        ->required()
        ->check(CLI::IsMember({"hecke", "center", "forms", "eigen", "rodrigues", "operators", "kostka", "multinomial",
                               "kernel", "mimachi", "identities"}));
    optional_int(verify, "--n", o.n, "Number of x variables");
    optional_int(verify, "--m", o.m, "Number of y variables");
    optional_int(verify, "--size", o.size, "Largest partition size");
    optional_int(verify, "--degree", o.degree, "Largest degree (y-degree for kernel)");
    common(verify);

    auto* scan = app.add_subcommand("scan-positivity", "List negative coefficients in the K and B tables");
    optional_int(scan, "--size", o.size, "Largest partition size (default 4)");
    common(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*compute) return run_compute(o);
        if (*table) return run_table(o);
        if (*verify) return run_verify(o);
        return run_scan(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
