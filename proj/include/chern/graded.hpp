#ifndef CHERN_GRADED_HPP
#define CHERN_GRADED_HPP

#include <optional>

#include "chern/hilbert_series.hpp"
#include "chern/ideal.hpp"

namespace chern {

// Finite or infinite module length.  Infinite is a value, not an error: a
// caller asking for the length of a positive-dimensional module gets told so.
struct length_t {
    std::optional<int64_t> v;

    bool finite() const { return v.has_value(); }
    int64_t value() const {
        if (!v) internal_error("length is infinite where a finite value was required");
        return *v;
    }
    static length_t infinite() { return {}; }
    static length_t of(int64_t x) { return {x}; }

    bool operator==(const length_t&) const = default;
};

template <class K>
void require_homogeneous(const ideal<K>& I, const char* where) {
    if (!I.is_homogeneous())
        input_error("non_homogeneous", std::string(where) + " needs a homogeneous ideal");
}

// dim_k of the degree-t slice of S/I: standard monomials of degree t
template <class K>
int64_t graded_piece_dim(const ideal<K>& I, uint32_t t) {
    require_homogeneous(I, "graded_piece_dim");
    return count_standard(I.lt_monomials(), I.ring()->nvars(), t);
}

template <class K>
int krull_dim(const ideal<K>& I) {
    require_homogeneous(I, "krull_dim");
    int d = krull_dim_lt(I.lt_monomials(), I.ring()->nvars());
    if (d < 0) input_error("unit_ideal", "krull_dim of the unit ideal");
    return d;
}

// λ(S/I): finite iff the leading-term ideal has a pure power of every variable
template <class K>
length_t module_length(const ideal<K>& I) {
    require_homogeneous(I, "length");
    auto lts = I.lt_monomials();
    size_t n = I.ring()->nvars();
    if (!lt_artinian(lts, n)) return length_t::infinite();
    return length_t::of(lt_artinian_length(lts, n));
}

// λ(a/b) for nested homogeneous ideals b ⊆ a, via the difference of Hilbert
// series: (N_b - N_a)/(1-z)^n is a polynomial exactly when the layer has
// finite length, and then its value at 1 is the length.
template <class K>
length_t layer_length(const ideal<K>& outer, const ideal<K>& inner) {
    require_same_ring(outer.ring(), inner.ring());
    require_homogeneous(outer, "layer_length");
    require_homogeneous(inner, "layer_length");
    size_t n = outer.ring()->nvars();
    zpoly num_inner = hilbert_numerator(inner.lt_monomials(), n);
    zpoly num_outer = hilbert_numerator(outer.lt_monomials(), n);
    auto diff = zpoly_div_one_minus_z(zpoly_sub(num_inner, num_outer), n);
    if (!diff) return length_t::infinite();
    for (int64_t c : *diff)
        if (c < 0)
            internal_error("negative layer dimension: ideals are not nested");
    return length_t::of(zpoly_eval1(*diff));
}

} // namespace chern

#endif
