#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "w3/engine.hpp"

namespace w3 {

// Parses mode-word expressions like
//   "L(-4)J(-3)^2|0>"  or  "3/2 L(-2)^2|0> - J(-3)|0>"
// into a StateVector. Words need not be in normal form: the modes of each
// term are applied to the vacuum right to left through the engine.
//
//   vector := term (('+'|'-') term)*
//   term   := [rational] factor* "|0>"
//   factor := ('L'|'J') '(' integer ')' ['^' digits]
class VectorExprParser {
public:
    explicit VectorExprParser(std::string src) : s_(std::move(src)) {}

    StateVector parse() {
        StateVector out;
        skip_ws();
        bool negative = eat_sign();
        out.add(parse_term(), negative ? Rat(-1) : Rat(1));
        skip_ws();
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            out.add(parse_term(), c == '-' ? Rat(-1) : Rat(1));
            skip_ws();
        }
        return out;
    }

private:
    StateVector parse_term() {
        Rat coef(1);
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            coef = parse_rational();
        std::vector<Mode> modes;
        skip_ws();
        while (pos_ < s_.size() && (s_[pos_] == 'L' || s_[pos_] == 'J')) {
            Gen g = s_[pos_] == 'L' ? Gen::L : Gen::J;
            ++pos_;
            expect('(');
            long n = parse_integer();
            expect(')');
            long exp = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                exp = parse_integer();
                if (exp < 0) fail("negative exponent");
            }
            for (long i = 0; i < exp; ++i) modes.push_back({g, static_cast<int>(n)});
            skip_ws();
        }
        expect('|');
        expect('0');
        expect('>');
        StateVector v(vacuum(), coef);
        for (auto it = modes.rbegin(); it != modes.rend(); ++it) v = apply_mode(*it, v);
        return v;
    }

    Rat parse_rational() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        return rat_parse(s_.substr(start, pos_ - start));
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::stol(s_.substr(start, pos_ - start));
    }

    bool eat_sign() {
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            bool neg = s_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("vector expression: " + msg + " at position " +
                                    std::to_string(pos_) + " in '" + s_ + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

inline StateVector parse_vector_expr(const std::string& src) {
    return VectorExprParser(src).parse();
}

}  // namespace w3
