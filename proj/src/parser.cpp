#include "chern/parser.hpp"

#include <cctype>
#include <limits>

#include "chern/error.hpp"

namespace chern {

void parse_error_at(size_t pos, const std::string& what) {
    input_error("parse_error", what + " at offset " + std::to_string(pos));
}

namespace {

struct cursor {
    const std::string& s;
    size_t i = 0;

    void skip_space() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool at_end() {
        skip_space();
        return i >= s.size();
    }
    char peek() {
        skip_space();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

int64_t read_nat(cursor& c, const char* what) {
    c.skip_space();
    size_t start = c.i;
    if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        parse_error_at(c.i, std::string("expected ") + what);
    int64_t v = 0;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        int digit = c.s[c.i] - '0';
        if (v > (std::numeric_limits<int64_t>::max() - digit) / 10)
            parse_error_at(start, "number too large");
        v = v * 10 + digit;
        ++c.i;
    }
    return v;
}

parsed_factor read_factor(cursor& c) {
    parsed_factor f;
    c.skip_space();
    f.pos = c.i;
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
        f.is_coeff = true;
        f.num = read_nat(c, "number");
        if (c.eat('/')) f.den = read_nat(c, "denominator");
        return f;
    }
    if (!ident_start(ch)) parse_error_at(c.i, "expected a variable or a number");
    while (c.i < c.s.size() && ident_char(c.s[c.i])) f.var.push_back(c.s[c.i++]);
    if (c.eat('^')) {
        int64_t e = read_nat(c, "exponent");
        if (e > int64_t(std::numeric_limits<uint32_t>::max()))
            parse_error_at(f.pos, "exponent too large");
        f.exp = uint32_t(e);
    }
    return f;
}

parsed_term read_term(cursor& c) {
    parsed_term t;
    if (c.eat('-')) t.negative = true;
    t.factors.push_back(read_factor(c));
    while (c.eat('*')) t.factors.push_back(read_factor(c));
    return t;
}

} // namespace

parsed_poly parse_poly_text(const std::string& src) {
    cursor c{src};
    parsed_poly p;
    if (c.at_end()) parse_error_at(c.i, "empty expression");
    p.terms.push_back(read_term(c));
    while (!c.at_end()) {
        if (c.eat('+')) {
            p.terms.push_back(read_term(c));
        } else if (c.eat('-')) {
            parsed_term t = read_term(c);
            t.negative = !t.negative;
            p.terms.push_back(t);
        } else {
            parse_error_at(c.i, "expected '+' or '-'");
        }
    }
    return p;
}

} // namespace chern
