#include "ggl/poly_parse.hpp"

#include <cctype>

namespace ggl {

namespace {

struct Parser {
    const std::string& src;
    size_t pos = 0;
    Ring ring;
    const std::vector<std::string>& vars;

    Parser(const std::string& s, Ring r, const std::vector<std::string>& v)
        : src(s), ring(r), vars(v) {}

    void skip() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return pos < src.size() ? src[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    Int integer() {
        skip();
        size_t start = pos;
        while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
        if (pos == start) fail("expected a number");
        return Int(src.substr(start, pos - start));
    }

    int small_int() {
        bool neg = eat('-');
        Int v = integer();
        if (v > 1000000) fail("exponent too large");
        int out = v.convert_to<int>();
        return neg ? -out : out;
    }

    LaurentPoly expr() {
        LaurentPoly acc = eat('-') ? -term() : term();
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    LaurentPoly term() {
        LaurentPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    LaurentPoly factor() {
        LaurentPoly base = atom();
        if (eat('^')) {
            int e = small_int();
            if (e >= 0) return pow(base, (unsigned)e);
            // negative power: invertible monomials only
            if (!base.is_monomial()) fail("negative power of a non-monomial");
            auto [be, bc] = base.leading_term();
            if (!ring.is_unit(bc)) fail("negative power of a non-unit coefficient");
            Exponents inv(be.size());
            for (size_t i = 0; i < be.size(); ++i) inv[i] = -be[i];
            LaurentPoly m = LaurentPoly::monomial(ring, base.nvars(), inv, ring.invert(bc));
            return pow(m, (unsigned)(-e));
        }
        return base;
    }

    LaurentPoly atom() {
        skip();
        if (eat('(')) {
            LaurentPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
            Int num = integer();
            if (eat('/')) {
                Int den = integer();
                return LaurentPoly::constant(ring, (int)vars.size(), Rat(num, den));
            }
            return LaurentPoly::constant(ring, (int)vars.size(), Rat(num));
        }
        // variable name: longest match
        skip();
        int best = -1;
        size_t best_len = 0;
        for (int i = 0; i < (int)vars.size(); ++i) {
            const auto& name = vars[i];
            if (src.compare(pos, name.size(), name) == 0 && name.size() > best_len) {
                best = i;
                best_len = name.size();
            }
        }
        if (best < 0) fail("expected a number or variable");
        pos += best_len;
        return LaurentPoly::variable(ring, (int)vars.size(), best);
    }
};

}  // namespace

LaurentPoly parse_poly(const std::string& src, const Ring& ring,
                       const std::vector<std::string>& var_names) {
    Parser p(src, ring, var_names);
    LaurentPoly out = p.expr();
    p.skip();
    if (p.pos != src.size()) p.fail("trailing input");
    return out;
}

}  // namespace ggl
