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

// JSON, CSV and LaTeX renderings. JSON goes through nlohmann::json; object keys come out
// sorted, so identical values always serialize to identical bytes.

#include <qtmac/kostka.hpp>
#include <qtmac/report.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qtmac {

using Json = nlohmann::json;

class FormatError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// ---- Z[q, t, t^-1] and Q(q,t) ---------------------------------------------------------

/// [[eq, et, "coeff"], ...] in canonical term order.
inline Json to_json(const IntPoly2& p) {
    Json a = Json::array();
    for (const auto& tm : p.terms()) a.push_back(Json::array({tm.q, tm.t, tm.c.get_str()}));
    return a;
}

inline IntPoly2 int_poly_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("polynomial: expected an array of terms");
    std::vector<Term2> terms;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_string())
            throw FormatError("polynomial: each term is [q-exponent, t-exponent, \"coefficient\"]");
        BigInt c;
        if (c.set_str(e[2].get<std::string>(), 10) != 0) throw FormatError("polynomial: bad coefficient " + e[2].dump());
        terms.push_back({e[0].get<int>(), e[1].get<int>(), c});
    }
    return IntPoly2::from_terms(std::move(terms));
}

/// {"num": terms, "den": terms}.
inline Json to_json(const QT& c) { return Json{{"num", to_json(c.num())}, {"den", to_json(c.den())}}; }

inline QT qt_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw FormatError("QT: expected {num, den}");
    IntPoly2 den = int_poly_from_json(j.at("den"));
    if (den.is_zero()) throw FormatError("QT: zero denominator");
    return QT(int_poly_from_json(j.at("num")), std::move(den));
}

// ---- partitions and symmetric functions -----------------------------------------------

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("partition: expected an integer array");
    std::vector<int> parts;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw FormatError("partition: expected an integer array");
        parts.push_back(e.get<int>());
    }
    return Partition(std::move(parts));
}

/// {"basis": "m", "entries": [{"partition": [...], "coeff": QT}, ...]}.
inline Json to_json(const SymExpansion& e) {
    Json entries = Json::array();
    for (const auto& [p, c] : e.coeffs) entries.push_back(Json{{"partition", to_json(p)}, {"coeff", to_json(c)}});
    return Json{{"basis", basis_name(e.basis)}, {"entries", entries}};
}

inline SymExpansion sym_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("entries")) throw FormatError("expansion: expected {basis, entries}");
    SymExpansion e(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& x : j.at("entries")) e.add(partition_from_json(x.at("partition")), qt_from_json(x.at("coeff")));
    return e;
}

/// {"nvars": n, "terms": [{"exponents": [...], "coeff": QT}, ...]}.
inline Json to_json(const XPoly& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> ex;
        for (int i = 0; i < f.nvars(); ++i) ex.push_back(m[i]);
        terms.push_back(Json{{"exponents", ex}, {"coeff", to_json(c)}});
    }
    return Json{{"nvars", f.nvars()}, {"terms", terms}};
}

inline XPoly xpoly_from_json(const Json& j) {
    const int n = j.at("nvars").get<int>();
    XPoly f(n);
    for (const auto& x : j.at("terms")) {
        const auto ex = x.at("exponents").get<std::vector<int>>();
        if (static_cast<int>(ex.size()) != n) throw FormatError("polynomial: exponent tuple has the wrong length");
        Monomial m;
        for (int i = 0; i < n; ++i) m[i] = static_cast<std::int16_t>(ex[static_cast<std::size_t>(i)]);
        f.add_term(m, qt_from_json(x.at("coeff")));
    }
    return f;
}

// ---- reports and tables ---------------------------------------------------------------

/// {"title", "status", "checks": [{"relation", "status", "instances", "counterexample"?}]}.
inline Json to_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks()) {
        Json e{{"relation", c.relation}, {"status", c.pass ? "pass" : "fail"}, {"instances", c.instances}};
        if (c.counterexample) e["counterexample"] = *c.counterexample;
        checks.push_back(std::move(e));
    }
    return Json{{"title", r.title()}, {"status", r.all_pass() ? "pass" : "fail"}, {"checks", checks}};
}

/// {"size", "rows": [...], "cols": [...], "cells": [[QT, ...], ...]} in partition order.
inline Json to_json(const QTTable& T) {
    const auto parts = partitions_of(T.size);
    Json rows = Json::array(), cells = Json::array();
    for (const auto& lam : parts) {
        rows.push_back(to_json(lam));
        Json row = Json::array();
        for (const auto& mu : parts) row.push_back(to_json(T.at(lam, mu)));
        cells.push_back(std::move(row));
    }
    return Json{{"size", T.size}, {"rows", rows}, {"cols", rows}, {"cells", cells}};
}

inline QTTable table_from_json(const Json& j) {
    QTTable T;
    T.size = j.at("size").get<int>();
    const auto& rows = j.at("rows");
    const auto& cols = j.at("cols");
    const auto& cells = j.at("cells");
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) {
            QT v = qt_from_json(cells.at(a).at(b));
            if (!v.is_zero()) T.entries.emplace(std::make_pair(partition_from_json(rows[a]), partition_from_json(cols[b])), v);
        }
    return T;
}

inline Json to_json(const PositivityScan& s) {
    Json entries = Json::array();
    for (const auto& e : s.entries)
        entries.push_back(Json{{"table", e.table},
                               {"lambda", to_json(e.lambda)},
                               {"mu", to_json(e.mu)},
                               {"max_q", e.max_q},
                               {"max_t", e.max_t},
                               {"negative", e.negative}});
    return Json{{"size", s.size}, {"negatives", s.negatives()}, {"entries", entries}};
}

// ---- CSV ------------------------------------------------------------------------------

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

/// Header row "lambda\mu" then the columns; one row per λ; cells use the canonical
/// polynomial strings.
inline std::string to_csv(const QTTable& T) {
    const auto parts = partitions_of(T.size);
    std::string s = csv_field("lambda\\mu");
    for (const auto& mu : parts) s += "," + csv_field(mu.to_string());
    s += "\n";
    for (const auto& lam : parts) {
        s += csv_field(lam.to_string());
        for (const auto& mu : parts) s += "," + csv_field(T.at(lam, mu).to_string());
        s += "\n";
    }
    return s;
}

inline std::string to_csv(const SymExpansion& e) {
    std::string s = "partition,coeff\n";
    for (const auto& [p, c] : e.coeffs) s += csv_field(p.to_string()) + "," + csv_field(c.to_string()) + "\n";
    return s;
}

inline std::string to_csv(const PositivityScan& sc) {
    std::string s = "table,lambda,mu,max_q,max_t,negative\n";
    for (const auto& e : sc.entries)
        s += e.table + "," + csv_field(e.lambda.to_string()) + "," + csv_field(e.mu.to_string()) + "," +
             std::to_string(e.max_q) + "," + std::to_string(e.max_t) + "," + (e.negative ? "1" : "0") + "\n";
    return s;
}

inline std::string to_csv(const Report& r) {
    std::string s = "relation,status,instances,counterexample\n";
    for (const auto& c : r.checks())
        s += csv_field(c.relation) + "," + (c.pass ? "pass" : "fail") + "," + std::to_string(c.instances) + "," +
             csv_field(c.counterexample.value_or("")) + "\n";
    return s;
}

// ---- LaTeX ----------------------------------------------------------------------------

inline std::string to_latex(const IntPoly2& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& tm : p.terms()) {
        BigInt c = tm.c;
        if (c < 0) {
            s += first ? "-" : " - ";
            c = -c;
        } else if (!first) {
            s += " + ";
        }
        first = false;
        std::string mono;
        auto power = [](const char* v, int e) { return e == 1 ? std::string(v) : std::string(v) + "^{" + std::to_string(e) + "}"; };
        if (tm.q != 0) mono += power("q", tm.q);
        if (tm.t != 0) mono += power("t", tm.t);
        s += mono.empty() ? c.get_str() : (c == 1 ? mono : c.get_str() + mono);
    }
    return s;
}

inline std::string to_latex(const QT& c) {
    if (c.is_polynomial()) return to_latex(c.num());
    return "\\frac{" + to_latex(c.num()) + "}{" + to_latex(c.den()) + "}";
}

inline std::string partition_latex(const Partition& p) { return p.to_string(); }

/// Σ (coeff) b_{(λ)}, dropping unit coefficients.
inline std::string to_latex(const SymExpansion& e) {
    if (e.coeffs.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : e.coeffs) {
        if (!first) s += " + ";
        first = false;
        const std::string sym = basis_name(e.basis) + "_{" + partition_latex(p) + "}";
        if (c.is_one())
            s += sym;
        else if (c.is_polynomial() && c.num().size() == 1 && !(c.num().leading().c < 0))
            s += to_latex(c) + " " + sym;
        else
            s += "\\left(" + to_latex(c) + "\\right) " + sym;
    }
    return s;
}

inline std::string to_latex(const QTTable& T) {
    const auto parts = partitions_of(T.size);
    std::string s = "\\begin{array}{c|" + std::string(parts.size(), 'c') + "}\n";
    s += "\\lambda \\backslash \\mu";
    for (const auto& mu : parts) s += " & " + partition_latex(mu);
    s += " \\\\\n\\hline\n";
    for (const auto& lam : parts) {
        s += partition_latex(lam);
        for (const auto& mu : parts) s += " & " + to_latex(T.at(lam, mu));
        s += " \\\\\n";
    }
    return s + "\\end{array}\n";
}

}  // namespace qtmac
