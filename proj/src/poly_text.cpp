#include "revring/poly_text.hpp"

#include <cctype>

namespace revring {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    MultiPoly parse() {
        skip_ws();
        if (at_end()) throw SyntaxError("empty polynomial", pos_);
        MultiPoly p;
        bool negative = accept_sign();
        p += parse_term(negative);
        skip_ws();
        while (!at_end()) {
            char c = s_[pos_];
            if (c != '+' && c != '-') throw SyntaxError("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            p += parse_term(c == '-');
            skip_ws();
        }
        return p;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept_sign() {
        if (!at_end() && s_[pos_] == '-') { ++pos_; skip_ws(); return true; }
        if (!at_end() && s_[pos_] == '+') { ++pos_; skip_ws(); }
        return false;
    }

    Int parse_int() {
        skip_ws();
        size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError("expected integer", pos_);
        return Int(s_.substr(start, pos_ - start));
    }

    // factor := 'x' <int> [ '^' <int> ]
    void parse_factor(ExponentVector& e) {
        if (at_end() || s_[pos_] != 'x') throw SyntaxError("expected variable", pos_);
        ++pos_;
        Int idx = parse_int();
        if (idx > 1000000) throw SyntaxError("variable index too large", pos_);
        uint32_t exp = 1;
        skip_ws();
        if (!at_end() && s_[pos_] == '^') {
            ++pos_;
            Int k = parse_int();
            if (k <= 0 || k > 1000000) throw SyntaxError("bad exponent", pos_);
            exp = static_cast<uint32_t>(k.get_ui());
        }
        uint32_t i = static_cast<uint32_t>(idx.get_ui());
        e.set(i, e.get(i) + exp);
    }

    MultiPoly parse_term(bool negative) {
        skip_ws();
        if (at_end()) throw SyntaxError("expected term", pos_);
        Rat coef = 1;
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            Int num = parse_int();
            Int den = 1;
            skip_ws();
            if (!at_end() && s_[pos_] == '/') {
                ++pos_;
                den = parse_int();
                if (den == 0) throw SyntaxError("zero denominator", pos_);
            }
            coef = Rat(num, den);
            saw_coef = true;
        }
        ExponentVector e;
        bool saw_mono = false;
        skip_ws();
        if (!saw_coef || (!at_end() && s_[pos_] == '*')) {
            if (saw_coef) { ++pos_; skip_ws(); }
            parse_factor(e);
            saw_mono = true;
            skip_ws();
            while (!at_end() && s_[pos_] == '*') {
                ++pos_;
                skip_ws();
                parse_factor(e);
                skip_ws();
            }
        }
        if (!saw_coef && !saw_mono) throw SyntaxError("expected term", pos_);
        if (negative) coef = -coef;
        return MultiPoly::monomial(e, coef);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

} // namespace revring
