#ifndef CHERN_PARSER_HPP
#define CHERN_PARSER_HPP

#include <algorithm>

#include "chern/polynomial.hpp"

namespace chern {

// Polynomial expression grammar (multiplication is always explicit):
//   poly   := term (('+'|'-') term)*
//   term   := ['-'] factor ('*' factor)*
//   factor := coeff | var ['^' nat]
//   coeff  := nat ['/' nat]
// Errors carry the byte offset of the offending position.

struct parsed_factor {
    bool is_coeff = false;
    int64_t num = 0, den = 1; // when is_coeff
    std::string var;          // when !is_coeff
    uint32_t exp = 1;
    size_t pos = 0;
};

struct parsed_term {
    bool negative = false;
    std::vector<parsed_factor> factors;
};

struct parsed_poly {
    std::vector<parsed_term> terms;
};

parsed_poly parse_poly_text(const std::string& src);

[[noreturn]] void parse_error_at(size_t pos, const std::string& what);

template <class K>
poly<K> materialize(const parsed_poly& p, const ring_ptr& R) {
    poly<K> out = poly<K>::zero(R);
    for (const parsed_term& t : p.terms) {
        K c = t.negative ? -K::one(R->field) : K::one(R->field);
        monomial m(R->nvars());
        for (const parsed_factor& f : t.factors) {
            if (f.is_coeff) {
                c = c * K::from_ratio(f.num, f.den, R->field);
            } else {
                auto it = std::find(R->vars.begin(), R->vars.end(), f.var);
                if (it == R->vars.end())
                    parse_error_at(f.pos, "unknown variable '" + f.var + "'");
                m = m * monomial::var(size_t(it - R->vars.begin()), f.exp, R->nvars());
            }
        }
        out = out + poly<K>::from_monomial(R, std::move(m)) * poly<K>::constant(R, c);
    }
    return out;
}

template <class K>
poly<K> parse_poly(const std::string& src, const ring_ptr& R) {
    return materialize<K>(parse_poly_text(src), R);
}

} // namespace chern

#endif
