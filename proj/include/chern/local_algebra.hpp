#ifndef CHERN_LOCAL_ALGEBRA_HPP
#define CHERN_LOCAL_ALGEBRA_HPP

#include "chern/graded.hpp"
#include "chern/util.hpp"

namespace chern {

// standard graded algebra A = S/I, I homogeneous and proper
template <class K>
struct graded_ring {
    ring_ptr S;
    ideal<K> defining;
    int dim = 0;
};

// cyclic module M = S/rel over A, where defining ⊆ rel; every submodule in
// play is written as an ideal of S containing rel
template <class K>
struct cyclic_module {
    graded_ring<K> amb;
    ideal<K> rel;
    int dim = 0;

    const ring_ptr& S() const { return amb.S; }
};

template <class K>
graded_ring<K> make_ring(const ring_ptr& S, std::vector<poly<K>> relations) {
    ideal<K> I(S, std::move(relations));
    if (I.is_unit_ideal())
        input_error("unit_ideal", "the defining ideal is the unit ideal (zero ring)");
    if (!I.is_homogeneous())
        input_error("non_homogeneous", "ring relations must be homogeneous");
    return graded_ring<K>{S, I, krull_dim(I)};
}

template <class K>
cyclic_module<K> make_module(const graded_ring<K>& A, std::vector<poly<K>> extra) {
    ideal<K> rel = extra.empty() ? A.defining
                                 : ideal_sum(A.defining, ideal<K>(A.S, std::move(extra)));
    if (rel.is_unit_ideal())
        input_error("unit_ideal", "module relations collapse the module to zero");
    if (!rel.is_homogeneous())
        input_error("non_homogeneous", "module relations must be homogeneous");
    if (!rel.contains(A.defining))
        internal_error("module relations do not contain the ring relations");
    return cyclic_module<K>{A, rel, krull_dim(rel)};
}

// homogeneous element of A, kept in normal form against the defining ideal
template <class K>
struct ring_element {
    poly<K> rep;
    uint32_t degree = 0;
};

template <class K>
ring_element<K> make_element(const graded_ring<K>& A, const poly<K>& f) {
    poly<K> r = A.defining.reduce(f);
    if (r.is_zero())
        input_error("zero_element", "element is zero in the ring");
    if (!r.is_homogeneous())
        input_error("non_homogeneous", "element is not homogeneous");
    return ring_element<K>{r, uint32_t(r.degree())};
}

template <class K>
ideal<K> maximal_ideal(const ring_ptr& S) {
    std::vector<poly<K>> vars;
    for (size_t i = 0; i < S->nvars(); ++i) vars.push_back(poly<K>::variable(S, i));
    return ideal<K>(S, std::move(vars));
}

template <class K>
length_t length(const cyclic_module<K>& M) {
    return module_length(M.rel);
}

// (0 :_M a) as an ideal of S, i.e. (rel : a); its length is the layer over rel
template <class K>
ideal<K> zero_colon(const cyclic_module<K>& M, const poly<K>& a) {
    return ideal_colon(M.rel, a);
}

template <class K>
int64_t zero_colon_length(const cyclic_module<K>& M, const poly<K>& a) {
    return layer_length(zero_colon(M, a), M.rel).value();
}

template <class K>
bool is_regular(const cyclic_module<K>& M, const poly<K>& a) {
    return zero_colon(M, a) == M.rel;
}

// H^0_m(M) = union of (rel : m^t)/rel; the saturation is reached at a finite
// step and the layer is the finite-length part W of M
template <class K>
struct saturation_data {
    ideal<K> sat;        // rel : m^∞
    int64_t w_length;    // λ(W)
    cyclic_module<K> quotient; // M/W = S/sat  (the saturated module)
};

template <class K>
saturation_data<K> h0_and_saturate(const cyclic_module<K>& M) {
    ideal<K> m = maximal_ideal<K>(M.S());
    ideal<K> sat = ideal_saturation(M.rel, m);
    int64_t w = layer_length(sat, M.rel).value();
    saturation_data<K> out{sat, w,
                           cyclic_module<K>{M.amb, sat, sat.is_unit_ideal() ? 0 : krull_dim(sat)}};
    if (M.dim >= 1 && !sat.is_unit_ideal()) {
        // a saturated module of positive dimension has positive depth
        if (ideal_saturation(sat, m) != sat)
            internal_error("saturated module still has a finite-length part");
    }
    return out;
}

namespace detail {

// random degree-δ combination of the generators of q (all of one degree)
template <class K>
poly<K> generic_combination(const ideal<K>& q, rng& r) {
    const ring_ptr& S = q.ring();
    poly<K> acc(S);
    for (const poly<K>& g : q.gens()) {
        K c = K::zero(S->field);
        if (S->field.kind == field_kind::prime) {
            c = K::from_int(int64_t(1 + r.below(S->field.p - 1)), S->field);
        } else {
            int64_t v = int64_t(r.below(21)) - 10;
            if (v == 0) v = 11;
            c = K::from_int(v, S->field);
        }
        acc = acc + g.scaled(c);
    }
    return acc;
}

template <class K>
void require_equigenerated(const ideal<K>& q) {
    const auto& gens = q.gens();
    if (gens.empty())
        input_error("empty_ideal", "expected a nonzero equigenerated ideal");
    int64_t d = -1;
    for (const poly<K>& g : gens) {
        if (g.is_zero() || !g.is_homogeneous())
            input_error("q_not_equigenerated", "generators must be homogeneous and nonzero");
        if (d == -1) d = g.degree();
        if (g.degree() != d)
            input_error("q_not_equigenerated", "generators must share one degree");
    }
}

template <class K>
void require_mprimary(const ideal<K>& q, const ideal<K>& rel) {
    ideal<K> qa = ideal_sum(q, rel);
    if (!lt_artinian(qa.lt_monomials(), q.ring()->nvars()))
        input_error("q_not_mprimary", "the ideal is not primary to the maximal ideal on this module");
}

} // namespace detail

// grade(q, M) = length of a maximal M-regular sequence in q, by certified
// descent: the zero test is exact (some power of q kills a nonzero submodule
// iff saturating rel by q moves it), and each step picks a random regular
// element, retrying a few times before giving up on genericity.
template <class K>
int grade(const ideal<K>& q, const cyclic_module<K>& M, uint64_t seed) {
    detail::require_equigenerated(q);
    detail::require_mprimary(q, M.rel);
    rng r(mix_seed(seed, "grade"));
    cyclic_module<K> cur = M;
    int depth = 0;
    for (size_t level = 0; level <= M.S()->nvars(); ++level) {
        if (ideal_saturation(cur.rel, q) != cur.rel) return depth;
        bool found = false;
        for (int attempt = 0; attempt < 8; ++attempt) {
            poly<K> a = detail::generic_combination(q, r);
            if (cur.rel.contains(a)) continue;
            if (!is_regular(cur, a)) continue;
            cur = cyclic_module<K>{cur.amb, ideal_sum(cur.rel, ideal<K>(cur.S(), {a})),
                                   cur.dim - 1};
            ++depth;
            found = true;
            break;
        }
        if (!found)
            certification_error("genericity",
                                "no regular element found in 8 attempts; a regular element exists");
    }
    internal_error("grade exceeded the number of variables");
}

template <class K>
bool is_cohen_macaulay(const cyclic_module<K>& M, uint64_t seed) {
    return grade(maximal_ideal<K>(M.S()), M, seed) == M.dim;
}

} // namespace chern

#endif
