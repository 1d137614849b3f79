#ifndef CHERN_BUCHBERGER_HPP
#define CHERN_BUCHBERGER_HPP

#include <algorithm>
#include <vector>

#include "chern/polynomial.hpp"

namespace chern {

// Full normal form: divide until no term of the remainder is divisible by any
// leading monomial of G.  Divisor choice is the first basis element (lowest
// index) whose leading monomial divides, which keeps the whole computation
// deterministic.  Against a reduced basis this is the canonical normal form.
template <class K>
poly<K> normal_form(poly<K> f, const std::vector<poly<K>>& g) {
    using P = poly<K>;
    if (f.is_zero()) return f;
    const ring_ptr& R = f.ring();
    P rem(R);
    while (!f.is_zero()) {
        bool reduced = false;
        for (const P& d : g) {
            if (d.is_zero()) continue;
            if (d.lm().divides(f.lm())) {
                K c = f.lc() / d.lc();
                f = f - d.term_mul(c, f.lm() / d.lm());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // the leading term is irreducible: it belongs to the remainder
            rem = rem + P(R, {{f.lm(), f.lc()}}, false);
            f = f - P(R, {{f.lm(), f.lc()}}, false);
        }
    }
    return rem;
}

template <class K>
poly<K> s_polynomial(const poly<K>& f, const poly<K>& g) {
    monomial l = monomial::lcm(f.lm(), g.lm());
    poly<K> a = f.term_mul(f.lc().inv(), l / f.lm());
    poly<K> b = g.term_mul(g.lc().inv(), l / g.lm());
    return a - b;
}

namespace detail {

struct critical_pair {
    size_t i, j; // i < j, indices into the working basis
    monomial lcm;
};

// Gebauer–Möller update: add generator t to the pair queue, discarding pairs
// by the chain (lcm divisibility) and product (coprimality) criteria.
template <class K>
void update_pairs(std::vector<critical_pair>& pairs,
                  const std::vector<poly<K>>& basis, size_t t) {
    order_kind ord = basis[t].ring()->order;
    const monomial& ht = basis[t].lm();

    std::vector<critical_pair> fresh;
    fresh.reserve(t);
    for (size_t i = 0; i < t; ++i)
        fresh.push_back({i, t, monomial::lcm(basis[i].lm(), ht)});

    // keep a new pair only if no other new pair's lcm properly divides its
    // lcm (for equal lcms the earliest survives); coprime pairs are always
    // kept here so they can kill their multiples, then dropped below
    std::vector<char> keep(fresh.size(), 1);
    for (size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        for (size_t b = 0; b < fresh.size(); ++b) {
            if (a == b || !keep[a]) continue;
            bool b_alive = keep[b] != 0;
            if (!b_alive) continue;
            if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm) {
                keep[a] = 0;
            } else if (fresh[b].lcm == fresh[a].lcm && b < a) {
                keep[a] = 0;
            }
        }
    }

    // chain criterion against the old queue: drop (i,j) once lcm(i,j) is a
    // proper multiple of both new lcms
    std::vector<critical_pair> kept_old;
    kept_old.reserve(pairs.size());
    for (const critical_pair& p : pairs) {
        bool drop = ht.divides(p.lcm) &&
                    monomial::lcm(basis[p.i].lm(), ht) != p.lcm &&
                    monomial::lcm(basis[p.j].lm(), ht) != p.lcm;
        if (!drop) kept_old.push_back(p);
    }
    pairs = std::move(kept_old);

    for (size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        if (monomial::coprime(basis[fresh[a].i].lm(), ht)) continue; // s-poly reduces to 0
        pairs.push_back(fresh[a]);
    }
    (void)ord;
}

// normal selection strategy: smallest lcm in the term order, ties by index pair
template <class K>
size_t select_pair(const std::vector<critical_pair>& pairs,
                   const std::vector<poly<K>>& basis) {
    order_kind ord = basis[0].ring()->order;
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
        int c = cmp_mono(ord, pairs[k].lcm, pairs[best].lcm);
        if (c < 0 ||
            (c == 0 && (pairs[k].i < pairs[best].i ||
                        (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
            best = k;
    }
    return best;
}

} // namespace detail

// Unique reduced basis: leading monomials form the minimal generating set of
// the leading-term ideal, every tail is in normal form, every element is
// canonically scaled, and the list is sorted descending by leading monomial.
template <class K>
std::vector<poly<K>> interreduce(std::vector<poly<K>> g) {
    using P = poly<K>;
    g.erase(std::remove_if(g.begin(), g.end(), [](const P& f) { return f.is_zero(); }),
            g.end());
    if (g.empty()) return g;
    order_kind ord = g[0].ring()->order;
    std::sort(g.begin(), g.end(),
              [&](const P& a, const P& b) { return cmp_mono(ord, a.lm(), b.lm()) < 0; });
    std::vector<P> minimal;
    for (P& f : g) {
        bool redundant = false;
        for (const P& h : minimal)
            if (h.lm().divides(f.lm())) { redundant = true; break; }
        if (!redundant) minimal.push_back(std::move(f));
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<P> others;
            others.reserve(minimal.size() - 1);
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            P r = normal_form(minimal[i], others).canonical_scaled();
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const P& a, const P& b) { return cmp_mono(ord, a.lm(), b.lm()) > 0; });
    return minimal;
}

// Buchberger's algorithm with the Gebauer–Möller queue.  Returns the reduced
// basis, which is a canonical form of the ideal: two generator lists span the
// same ideal iff this function returns identical term lists for both.
template <class K>
std::vector<poly<K>> buchberger(const ring_ptr& R, std::vector<poly<K>> gens) {
    using P = poly<K>;
    order_kind ord = R->order;

    std::vector<P> basis;
    for (P& f : gens) {
        require_same_ring(R, f.ring());
        if (!f.is_zero()) basis.push_back(f.canonical_scaled());
    }
    std::sort(basis.begin(), basis.end(), [&](const P& a, const P& b) {
        int c = cmp_mono(ord, a.lm(), b.lm());
        if (c != 0) return c < 0;
        return a.terms().size() < b.terms().size();
    });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    if (basis.empty()) return basis;

    std::vector<detail::critical_pair> pairs;
    std::vector<P> work;
    for (const P& f : basis) {
        P r = normal_form(f, work);
        if (r.is_zero()) continue;
        work.push_back(r.canonical_scaled());
        detail::update_pairs(pairs, work, work.size() - 1);
    }

    while (!pairs.empty()) {
        size_t k = detail::select_pair(pairs, work);
        detail::critical_pair p = pairs[k];
        pairs.erase(pairs.begin() + k);
        P s = s_polynomial(work[p.i], work[p.j]);
        P r = normal_form(s, work);
        if (r.is_zero()) continue;
        if (r.is_constant()) {
            // unit ideal: short-circuit, the reduced basis is {1}
            return {P::constant(R, K::one(R->field))};
        }
        work.push_back(r.canonical_scaled());
        detail::update_pairs(pairs, work, work.size() - 1);
    }

    return interreduce(std::move(work));
}

} // namespace chern

#endif
