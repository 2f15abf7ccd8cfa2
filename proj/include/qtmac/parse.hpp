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

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtmac {

class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Recursive-descent parser for expressions over a ring R.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' ['-'] integer)?
///   atom   := integer | identifier | '(' expr ')'
///
/// Identifiers are resolved by `var`; `pow` must accept negative exponents and
/// `div` handles '/'.
template <class R>
class ExprParser {
   public:
    using VarFn = std::function<R(const std::string&)>;
    using DivFn = std::function<R(const R&, const R&)>;
    using PowFn = std::function<R(const R&, int)>;
    using ConstFn = std::function<R(const BigInt&)>;

    ExprParser(VarFn var, DivFn div, PowFn pow, ConstFn constant)
        : var_(std::move(var)), div_(std::move(div)), pow_(std::move(pow)), const_(std::move(constant)) {}

    R parse(std::string_view s) {
        src_ = s;
        pos_ = 0;
        R r = expr();
        skip();
        if (pos_ != src_.size()) fail("unexpected character");
        return r;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + what + " in \"" +
                         std::string(src_) + "\"");
    }
    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    R expr() {
        R r = term();
        while (true) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                return r;
        }
    }
    R term() {
        R r = unary();
        while (true) {
            if (accept('*'))
                r = r * unary();
            else if (accept('/'))
                r = div_(r, unary());
            else
                return r;
        }
    }
    R unary() {
        if (accept('-')) return const_(BigInt(0)) - unary();
        if (accept('+')) return unary();
        return power();
    }
    R power() {
        R base = atom();
        if (accept('^')) {
            bool neg = accept('-');
            if (!neg && accept('(')) {
                neg = accept('-');
                int e = integer_exponent();
                if (!accept(')')) fail("expected ')'");
                return pow_(base, neg ? -e : e);
            }
            int e = integer_exponent();
            return pow_(base, neg ? -e : e);
        }
        return base;
    }
    int integer_exponent() {
        skip();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        return std::stoi(std::string(src_.substr(start, pos_ - start)));
    }
    R atom() {
        skip();
        if (pos_ >= src_.size()) fail("unexpected end");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            R r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return const_(BigInt(std::string(src_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return var_(std::string(src_.substr(start, pos_ - start)));
        }
        fail("unexpected character");
    }

    VarFn var_;
    DivFn div_;
    PowFn pow_;
    ConstFn const_;
    std::string_view src_;
    std::size_t pos_ = 0;
};

/// Parses an element of Q(q,t), e.g. "(1 - t)/(1 - q*t^2)" or "t^-1".
inline QT parse_qt(std::string_view s) {
    ExprParser<QT> p(
        [](const std::string& name) -> QT {
            if (name == "q") return QT::q();
            if (name == "t") return QT::t();
            throw ParseError("unknown symbol '" + name + "'");
        },
        [](const QT& a, const QT& b) { return a / b; }, [](const QT& a, int e) { return a.pow(e); }, [](const BigInt& c) { return QT(c); });
    return p.parse(s);
}

}  // namespace qtmac
