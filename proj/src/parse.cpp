#include "ringtrace/parse.hpp"

#include <cctype>

#include "ringtrace/errors.hpp"

namespace ringtrace {

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("parse error at position " + std::to_string(pos) + ": " + msg +
                         " in \"" + s + "\"");
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int read_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return Int(s.substr(start, pos - start));
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected an identifier");
        ++pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_' || s[pos] == '\''))
            ++pos;
        return s.substr(start, pos - start);
    }

    // atom := number [/ number] | identifier | '(' expr ')'
    Poly atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Poly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = read_int();
            size_t save = pos;
            if (eat('/')) {
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    Int den = read_int();
                    if (den == 0) fail("zero denominator");
                    Rat q(num, den);
                    q.canonicalize();
                    return Poly::constant(ring, q);
                }
                pos = save;  // '/' not followed by an integer literal
                fail("division is only supported in rational literals p/q");
            }
            return Poly::constant(ring, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = read_ident();
            int idx = variable_index(*ring, name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            return Poly::variable(ring, idx);
        }
        fail("expected a number, variable, or '('");
    }

    // factor := atom ('^' integer)*
    Poly factor() {
        Poly base = atom();
        while (peek() == '^') {
            ++pos;
            bool neg = eat('-');
            Int e = read_int();
            if (neg) fail("negative exponents are not supported");
            if (e > 100000) throw ResourceError("exponent literal too large");
            Poly r = Poly::constant(ring, Rat(1));
            Poly b = base;
            unsigned long k = e.get_ui();
            while (k > 0) {  // square and multiply
                if (k & 1) r = r * b;
                b = b * b;
                k >>= 1;
            }
            base = r;
        }
        return base;
    }

    bool starts_factor() {
        char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    // term := factor (('*' | juxtaposition) factor)*
    Poly term() {
        Poly p = factor();
        while (true) {
            if (eat('*')) {
                p = p * factor();
            } else if (starts_factor()) {
                p = p * factor();
            } else {
                return p;
            }
        }
    }

    // expr := ['-'|'+'] term (('+'|'-') term)*
    Poly expr() {
        bool neg = false;
        while (true) {
            if (eat('-')) neg = !neg;
            else if (eat('+')) continue;
            else break;
        }
        Poly p = term();
        if (neg) p = -p;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Poly q = term();
                p = (c == '+') ? p + q : p - q;
            } else {
                return p;
            }
        }
    }

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos != s.size()) fail("unexpected trailing input");
        return p;
    }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    return p.run();
}

}  // namespace ringtrace
