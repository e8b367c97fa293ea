#include "newton/parser.hpp"

#include <cctype>

namespace newton {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    Ring ring;
    TowerPtr tower = FieldTower::rationals();

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) { throw parse_error(what, pos); }

    LaurentPoly constant(const Rat& r) {
        return LaurentPoly::constant(tower, "x", "y", ring, AlgebraicScalar(r));
    }

    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return Int(s.substr(start, pos - start));
    }

    Exp exponent() {
        skip_ws();
        bool paren = eat('(');
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected an exponent");
        Int v = integer();
        if (paren && !eat(')')) fail("expected ')' after exponent");
        if (!v.fits_slong_p()) fail("exponent overflow");
        Exp e = v.get_si();
        return neg ? -e : e;
    }

    LaurentPoly base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            LaurentPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'x') {
            ++pos;
            return LaurentPoly::monomial(tower, "x", "y", ring, 1, 0, AlgebraicScalar(Rat(1)));
        }
        if (c == 'y') {
            ++pos;
            return LaurentPoly::monomial(tower, "x", "y", ring, 0, 1, AlgebraicScalar(Rat(1)));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            if (eat('/')) {
                Int den = integer();
                if (den == 0) fail("zero denominator");
                Rat r(num, den);
                r.canonicalize();
                return constant(r);
            }
            return constant(Rat(num));
        }
        fail("unexpected character");
    }

    LaurentPoly power() {
        LaurentPoly b = base();
        skip_ws();
        if (peek() != '^') return b;
        ++pos;
        size_t at = pos;
        Exp e = exponent();
        if (b.is_monomial()) {
            const auto& [me, mc] = *b.terms().begin();
            try {
                return LaurentPoly::monomial(tower, "x", "y", ring, me.first * e,
                                             me.second * e, mc.pow(e));
            } catch (const precondition_error& err) {
                throw parse_error(err.what(), at);
            }
        }
        if (e < 0) fail("negative exponent of a non-monomial");
        if (e > 4096) fail("exponent overflow");
        return b.pow(static_cast<int>(e));
    }

    LaurentPoly term() {
        LaurentPoly p = power();
        while (peek() == '*') {
            ++pos;
            p = p * power();
        }
        return p;
    }

    LaurentPoly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPoly p = term();
        if (neg) p = -p;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                p = p + term();
            } else if (c == '-') {
                ++pos;
                p = p - term();
            } else {
                break;
            }
        }
        return p;
    }
};

}  // namespace

LaurentPoly parse_polynomial(const std::string& text, Ring ring) {
    Parser p{text, 0, ring};
    LaurentPoly r = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

std::string print_polynomial(const LaurentPoly& f) { return f.to_string(); }

}  // namespace newton
