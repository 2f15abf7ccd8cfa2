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
#include <qtmac/cache.hpp>
#include <qtmac/macdonald.hpp>
#include <qtmac/parse.hpp>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "gen.hpp"

using namespace qtmac;
namespace fs = std::filesystem;

namespace {

const QT t = QT::t();

fs::path fresh_dir(const std::string& tag) {
    const fs::path d = fs::temp_directory_path() / ("qtmac_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    return d;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST(Json, QTRoundTrip) {
    gen::Gen g(101);
    for (int i = 0; i < 100; ++i) {
        const QT a = g.qt();
        const Json j = to_json(a);
        EXPECT_EQ(qt_from_json(Json::parse(j.dump())), a);
        EXPECT_EQ(to_json(qt_from_json(j)).dump(), j.dump());
    }
}

TEST(Json, QTFormat) {
    const Json j = to_json((1 - t) / (1 - QT::q() * t));
    // canonical: the denominator's leading term (largest in (q, t) order) is positive
    EXPECT_EQ(j.at("num").dump(), R"([[0,0,"-1"],[0,1,"1"]])");
    EXPECT_EQ(j.at("den").dump(), R"([[0,0,"-1"],[1,1,"1"]])");
    // coefficients stay exact beyond 64 bits
    const QT big(IntPoly2(BigInt("123456789012345678901234567890")));
    EXPECT_EQ(qt_from_json(to_json(big)), big);
    EXPECT_THROW(qt_from_json(Json::parse(R"({"num":[[0,0,"1"]],"den":[]})")), FormatError);
    EXPECT_THROW(qt_from_json(Json::parse(R"({"num":[[0,0,1]],"den":[[0,0,"1"]]})")), FormatError);
}

TEST(Json, PartitionAndExpansion) {
    EXPECT_EQ(to_json(Partition{3, 1}).dump(), "[3,1]");
    EXPECT_EQ(partition_from_json(Json::parse("[2,2,1]")), (Partition{2, 2, 1}));
    EXPECT_THROW(partition_from_json(Json::parse("[1,2]")), InvalidPartition);
    for (const auto& lam : partitions_of(4)) {
        const SymExpansion J = eigen_P(lam, 4).J;
        EXPECT_EQ(sym_from_json(Json::parse(to_json(J).dump())), J) << lam.to_string();
    }
}

TEST(Json, XPolyRoundTrip) {
    gen::Gen g(103);
    for (int i = 0; i < 30; ++i) {
        const int n = g.uniform(1, 5);
        const XPoly f = gen::random_xpoly(g, n, 3);
        EXPECT_EQ(xpoly_from_json(Json::parse(to_json(f).dump())), f);
    }
    EXPECT_THROW(xpoly_from_json(Json::parse(R"({"nvars":2,"terms":[{"exponents":[1],"coeff":{"num":[[0,0,"1"]],"den":[[0,0,"1"]]}}]})")),
                 FormatError);
}

TEST(Json, TableRoundTrip) {
    const QTTable K = kostka_table(3);
    const QTTable back = table_from_json(Json::parse(to_json(K).dump()));
    for (const auto& lam : partitions_of(3))
        for (const auto& mu : partitions_of(3)) EXPECT_EQ(back.at(lam, mu), K.at(lam, mu));
}

TEST(Json, ReportSchema) {
    Report r("demo");
    r.record("a = a", true);
    r.record("b = c", false, "b=1 c=2");
    const Json j = to_json(r);
    EXPECT_EQ(j.at("status"), "fail");
    EXPECT_EQ(j.at("checks")[0].at("status"), "pass");
    EXPECT_FALSE(j.at("checks")[0].contains("counterexample"));
    EXPECT_EQ(j.at("checks")[1].at("counterexample"), "b=1 c=2");
}

// Every CSV cell is a canonical polynomial string that parses back to the table entry.
TEST(Csv, TableCellsParseBack) {
    const QTTable K = kostka_table(3);
    const auto rows = lines_of(to_csv(K));
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], R"csv(lambda\mu,(3),"(2,1)","(1,1,1)")csv");
    EXPECT_EQ(rows[1], "(3),1,t,t^3");
    const auto parts = partitions_of(3);
    for (const auto& lam : parts)
        for (const auto& mu : parts) EXPECT_EQ(parse_qt(K.at(lam, mu).to_string()), K.at(lam, mu));
}

TEST(Csv, Quoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
}

TEST(Latex, Expansion) {
    EXPECT_EQ(to_latex(eigen_P(Partition{1}, 1).P), "m_{(1)}");
    EXPECT_EQ(to_latex((1 - t) / (1 - QT::q())), "\\frac{-1 + t}{-1 + q}");
    const std::string s = to_latex(eigen_P(Partition{1, 1}, 2).J);
    EXPECT_EQ(s, "\\left(1 - t - t^{2} + t^{3}\\right) m_{(1,1)}");
}

TEST(Cache, PutThenGet) {
    const fs::path d = fresh_dir("put");
    Cache c(d);
    const CacheKey key{"J", Partition{2, 1}, 3};
    EXPECT_FALSE(c.get(key).has_value());
    const Json payload = to_json(eigen_P(Partition{2, 1}, 3).J);
    c.put(key, payload);
    ASSERT_TRUE(c.get(key).has_value());
    EXPECT_EQ(*c.get(key), payload);
    // different key, different entry
    EXPECT_FALSE(c.get(CacheKey{"J", Partition{2, 1}, 4}).has_value());
    EXPECT_FALSE(c.get(CacheKey{"P", Partition{2, 1}, 3}).has_value());
    fs::remove_all(d);
}

TEST(Cache, CorruptedEntryIsEvicted) {
    const fs::path d = fresh_dir("corrupt");
    Cache c(d);
    const CacheKey key{"P", Partition{1}, 1};
    c.put(key, Json{{"x", 1}});
    {
        std::ofstream out(c.path_of(key), std::ios::trunc);
        out << "{ not json";
    }
    EXPECT_FALSE(c.get(key).has_value());
    EXPECT_FALSE(fs::exists(c.path_of(key)));
    // an entry stored under another key is treated the same way
    c.put(CacheKey{"P", Partition{2}, 2}, Json{{"x", 2}});
    fs::copy_file(c.path_of(CacheKey{"P", Partition{2}, 2}), c.path_of(key));
    EXPECT_FALSE(c.get(key).has_value());
    fs::remove_all(d);
}

// Racing writers of one key must leave a complete entry and no temporaries.
TEST(Cache, ConcurrentPutsOfOneKey) {
    const fs::path d = fresh_dir("race");
    Cache c(d);
    const CacheKey key{"B", Partition{}, 3};
    const Json payload = to_json(b_table(3));
    std::vector<std::thread> ts;
    for (int i = 0; i < 8; ++i)
        ts.emplace_back([&] {
            for (int k = 0; k < 5; ++k) c.put(key, payload);
        });
    for (auto& th : ts) th.join();
    ASSERT_TRUE(c.get(key).has_value());
    EXPECT_EQ(*c.get(key), payload);
    int files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(d)) ++files;
    EXPECT_EQ(files, 1);
    fs::remove_all(d);
}

TEST(Cache, RootResolution) {
    ::setenv(kCacheEnvVar, "/tmp/from_env", 1);
    EXPECT_EQ(resolve_cache_root(std::string("/tmp/from_flag"), false), fs::path("/tmp/from_flag"));
    EXPECT_EQ(resolve_cache_root(std::nullopt, false), fs::path("/tmp/from_env"));
    EXPECT_FALSE(resolve_cache_root(std::string("/tmp/from_flag"), true).has_value());
    ::unsetenv(kCacheEnvVar);
    EXPECT_FALSE(resolve_cache_root(std::nullopt, false).has_value());
}

TEST(Cache, KeyNamesAreDistinct) {
    std::set<std::string> names;
    for (const auto& lam : partitions_of(4))
        for (const char* kind : {"P", "J", "Jmod"})
            for (int n = 1; n <= 4; ++n) EXPECT_TRUE(names.insert(CacheKey{kind, lam, n}.file_name()).second);
}
