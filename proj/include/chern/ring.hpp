#ifndef CHERN_RING_HPP
#define CHERN_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "chern/field.hpp"
#include "chern/monomial.hpp"

namespace chern {

// Coordinate ring descriptor k[x1..xn] with a fixed term order.  Shared by
// value (shared_ptr) between everything built over it; two rings are the same
// iff variables, field and order agree.
struct poly_ring {
    std::vector<std::string> vars;
    field_spec field;
    order_kind order = order_kind::grevlex;

    size_t nvars() const { return vars.size(); }

    bool same(const poly_ring& o) const {
        return vars == o.vars && field == o.field && order == o.order;
    }
};

using ring_ptr = std::shared_ptr<const poly_ring>;

inline ring_ptr make_ring_desc(std::vector<std::string> vars, field_spec f,
                               order_kind ord = order_kind::grevlex) {
    if (vars.empty())
        input_error("no_variables", "a polynomial ring needs at least one variable");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                input_error("duplicate_variable", "duplicate variable '" + vars[i] + "'");
    validate_field(f);
    auto r = std::make_shared<poly_ring>();
    r->vars = std::move(vars);
    r->field = f;
    r->order = ord;
    return r;
}

inline void require_same_ring(const ring_ptr& a, const ring_ptr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same(*b))
        input_error("mixed_rings", "operands live in different rings");
}

} // namespace chern

#endif
