#ifndef CHERN_IDEAL_HPP
#define CHERN_IDEAL_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "chern/buchberger.hpp"

namespace chern {

// Homogeneous ideal of the coordinate ring, held by value.  Generators are
// immutable; the reduced basis is computed once on demand and shared by all
// copies, so concurrent readers either find nothing and compute behind a
// once-flag or see the finished canonical basis — never a partial state.
template <class K>
class ideal {
public:
    ideal() = default;
    explicit ideal(ring_ptr r) : ring_(std::move(r)), cell_(std::make_shared<cache_cell>()) {}
    ideal(ring_ptr r, std::vector<poly<K>> gens)
        : ring_(std::move(r)), gens_(std::move(gens)), cell_(std::make_shared<cache_cell>()) {
        for (auto& g : gens_) require_same_ring(ring_, g.ring());
    }

    static ideal zero(const ring_ptr& r) { return ideal(r); }
    static ideal unit(const ring_ptr& r) {
        return ideal(r, {poly<K>::constant(r, K::one(r->field))});
    }
    // wrap generators that are already a reduced basis (skips recomputation)
    static ideal from_reduced_basis(const ring_ptr& r, std::vector<poly<K>> gb) {
        ideal I(r, gb);
        I.cell_->gb = std::move(gb);
        I.cell_->ready = true;
        return I;
    }

    const ring_ptr& ring() const { return ring_; }
    const std::vector<poly<K>>& gens() const { return gens_; }

    const std::vector<poly<K>>& gb() const {
        std::call_once(cell_->once, [this] {
            cell_->gb = buchberger(ring_, gens_);
            cell_->ready = true;
        });
        return cell_->gb;
    }

    bool is_zero_ideal() const { return gb().empty(); }
    bool is_unit_ideal() const {
        const auto& g = gb();
        return g.size() == 1 && g[0].is_constant();
    }

    bool is_homogeneous() const {
        for (const auto& g : gb())
            if (!g.is_homogeneous()) return false;
        return true;
    }

    std::vector<monomial> lt_monomials() const {
        std::vector<monomial> lt;
        lt.reserve(gb().size());
        for (const auto& g : gb()) lt.push_back(g.lm());
        return lt;
    }

    poly<K> reduce(const poly<K>& f) const { return normal_form(f, gb()); }
    bool contains(const poly<K>& f) const { return reduce(f).is_zero(); }
    bool contains(const ideal& J) const {
        require_same_ring(ring_, J.ring_);
        for (const auto& g : J.gb())
            if (!contains(g)) return false;
        return true;
    }

    bool operator==(const ideal& o) const {
        require_same_ring(ring_, o.ring_);
        const auto& a = gb();
        const auto& b = o.gb();
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    }
    bool operator!=(const ideal& o) const { return !(*this == o); }

private:
    struct cache_cell {
        std::once_flag once;
        std::vector<poly<K>> gb;
        bool ready = false;
    };
    ring_ptr ring_;
    std::vector<poly<K>> gens_;
    std::shared_ptr<cache_cell> cell_;
};

template <class K>
ideal<K> ideal_sum(const ideal<K>& a, const ideal<K>& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<poly<K>> g = a.gb();
    for (const auto& f : b.gb()) g.push_back(f);
    return ideal<K>(a.ring(), std::move(g));
}

template <class K>
ideal<K> ideal_product(const ideal<K>& a, const ideal<K>& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<poly<K>> g;
    for (const auto& f : a.gb())
        for (const auto& h : b.gb()) g.push_back(f * h);
    return ideal<K>(a.ring(), std::move(g));
}

template <class K>
ideal<K> ideal_power(const ideal<K>& a, uint32_t k) {
    ideal<K> r = ideal<K>::unit(a.ring());
    for (uint32_t i = 0; i < k; ++i) r = ideal_product(r, a);
    return r;
}

// exact division of g by f; g must be a polynomial multiple of f
template <class K>
poly<K> poly_divide_exact(poly<K> g, const poly<K>& f) {
    if (f.is_zero()) internal_error("division by zero polynomial");
    poly<K> q(g.ring());
    while (!g.is_zero()) {
        if (!f.lm().divides(g.lm()))
            internal_error("inexact polynomial division");
        K c = g.lc() / f.lc();
        monomial m = g.lm() / f.lm();
        q = q + poly<K>(g.ring(), {{m, c}}, false);
        g = g - f.term_mul(c, m);
    }
    return q;
}

namespace detail {

// move a polynomial into k[_t, x1..xn] (exponent 0 on the auxiliary variable)
template <class K>
poly<K> lift_to_elim(const ring_ptr& ext, const poly<K>& f) {
    std::vector<typename poly<K>::term> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        std::vector<uint32_t> e(ext->nvars(), 0);
        for (size_t i = 0; i < t.m.nvars(); ++i) e[i + 1] = t.m[i];
        ts.push_back({monomial(std::move(e)), t.c});
    }
    return poly<K>(ext, std::move(ts));
}

template <class K>
poly<K> drop_elim_var(const ring_ptr& base, const poly<K>& f) {
    std::vector<typename poly<K>::term> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        std::vector<uint32_t> e(base->nvars());
        for (size_t i = 0; i < base->nvars(); ++i) e[i] = t.m[i + 1];
        ts.push_back({monomial(std::move(e)), t.c});
    }
    return poly<K>(base, std::move(ts));
}

inline std::string fresh_aux_name(const std::vector<std::string>& vars) {
    std::string name = "_t";
    for (int k = 0; ; ++k) {
        bool clash = false;
        for (const auto& v : vars)
            if (v == name) { clash = true; break; }
        if (!clash) return name;
        name = "_t" + std::to_string(k);
    }
}

} // namespace detail

// Intersection by elimination: I ∩ J = (t·I + (1−t)·J) ∩ k[x], computed with
// the auxiliary variable in its own leading block.  The t-free slice of that
// basis is a basis of the intersection; one interreduction makes it canonical.
template <class K>
ideal<K> ideal_intersect(const ideal<K>& a, const ideal<K>& b) {
    require_same_ring(a.ring(), b.ring());
    const ring_ptr& R = a.ring();
    if (a.is_zero_ideal() || b.is_zero_ideal()) return ideal<K>::zero(R);
    if (a.is_unit_ideal()) return b;
    if (b.is_unit_ideal()) return a;

    std::vector<std::string> vars;
    vars.push_back(detail::fresh_aux_name(R->vars));
    for (const auto& v : R->vars) vars.push_back(v);
    ring_ptr ext = make_ring_desc(vars, R->field, order_kind::elim_first);

    poly<K> t = poly<K>::variable(ext, 0);
    poly<K> one_minus_t = poly<K>::constant(ext, K::one(R->field)) - t;
    std::vector<poly<K>> gens;
    for (const auto& f : a.gb()) gens.push_back(t * detail::lift_to_elim<K>(ext, f));
    for (const auto& g : b.gb()) gens.push_back(one_minus_t * detail::lift_to_elim<K>(ext, g));

    std::vector<poly<K>> basis = buchberger(ext, std::move(gens));
    std::vector<poly<K>> cut;
    for (const auto& f : basis)
        if (f.lm()[0] == 0) cut.push_back(detail::drop_elim_var<K>(R, f));
    return ideal<K>::from_reduced_basis(R, interreduce(std::move(cut)));
}

// (I : f) for a single nonzero divisor, via (I ∩ (f)) / f
template <class K>
ideal<K> ideal_colon(const ideal<K>& a, const poly<K>& f) {
    if (f.is_zero()) input_error("colon_by_zero", "colon by the zero polynomial");
    ideal<K> cap = ideal_intersect(a, ideal<K>(a.ring(), {f}));
    std::vector<poly<K>> q;
    for (const auto& g : cap.gb()) q.push_back(poly_divide_exact(g, f));
    return ideal<K>(a.ring(), std::move(q));
}

template <class K>
ideal<K> ideal_colon(const ideal<K>& a, const ideal<K>& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero_ideal())
        input_error("colon_by_zero", "colon by the zero ideal");
    bool first = true;
    ideal<K> acc;
    for (const auto& f : b.gb()) {
        ideal<K> step = ideal_colon(a, f);
        acc = first ? step : ideal_intersect(acc, step);
        first = false;
    }
    return acc;
}

// colon to a fixed point; each step can only grow, so equality terminates
template <class K>
ideal<K> ideal_saturation(const ideal<K>& a, const ideal<K>& b) {
    ideal<K> cur = a;
    for (int guard = 0; guard < 1024; ++guard) {
        ideal<K> next = ideal_colon(cur, b);
        if (next == cur) return cur;
        cur = next;
    }
    internal_error("saturation did not stabilize");
}

} // namespace chern

#endif
