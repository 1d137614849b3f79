#ifndef CHERN_FILTRATION_HPP
#define CHERN_FILTRATION_HPP

#include <mutex>
#include <optional>
#include <string>

#include "chern/local_algebra.hpp"

namespace chern {

// Good q-filtration M = M_0 ⊇ M_1 ⊇ M_2 ⊇ ... of a cyclic module, presented
// by finitely many head terms and continued by M_{j+1} = q·M_j.  Every term is
// stored as the ideal T_j of S with T_j/rel = M_j (so T_0 is the unit ideal),
// memoized on demand; copies share the memo.
template <class K>
class filtration {
public:
    filtration(cyclic_module<K> M, ideal<K> q, std::vector<ideal<K>> head)
        : st_(std::make_shared<state>(std::move(M), std::move(q), std::move(head))) {
        validate();
    }

    const cyclic_module<K>& module() const { return st_->M; }
    const ideal<K>& q() const { return st_->q; }
    size_t head_len() const { return st_->head.size(); }
    bool is_adic() const { return st_->head.empty(); }
    int dim() const { return st_->M.dim; }

    ideal<K> term(size_t j) const {
        std::lock_guard<std::mutex> lock(st_->mu);
        while (st_->terms.size() <= j) {
            const ideal<K>& prev = st_->terms.back();
            size_t n = st_->terms.size();
            if (n <= st_->head.size()) {
                st_->terms.push_back(st_->head[n - 1]);
            } else {
                st_->terms.push_back(ideal_sum(ideal_product(st_->q, prev), st_->M.rel));
            }
        }
        return st_->terms[j];
    }

private:
    struct state {
        state(cyclic_module<K> m, ideal<K> qq, std::vector<ideal<K>> h)
            : M(std::move(m)), q(std::move(qq)), head(std::move(h)) {
            terms.push_back(ideal<K>::unit(M.S()));
        }
        cyclic_module<K> M;
        ideal<K> q;
        std::vector<ideal<K>> head; // T_1..T_s, module relations folded in
        std::vector<ideal<K>> terms;
        std::mutex mu;
    };

    void validate() {
        auto& s = *st_;
        detail::require_equigenerated(s.q);
        detail::require_mprimary(s.q, s.M.rel);
        for (size_t j = 0; j < s.head.size(); ++j) {
            if (!s.head[j].is_homogeneous())
                input_error("non_homogeneous", "filtration term " + std::to_string(j + 1) +
                                                   " is not homogeneous");
            if (!s.head[j].contains(s.M.rel))
                internal_error("filtration term without the module relations folded in");
        }
        // descending chain, with T_0 the unit ideal
        for (size_t j = 0; j + 1 < s.head.size(); ++j) {
            if (!s.head[j].contains(s.head[j + 1]))
                input_error("chain_violation",
                            "filtration term " + std::to_string(j + 2) +
                                " is not contained in term " + std::to_string(j + 1));
        }
        // goodness on the head: q·T_j + rel ⊆ T_{j+1} for j = 0..s-1
        for (size_t j = 0; j < s.head.size(); ++j) {
            ideal<K> lhs = (j == 0) ? ideal_sum(s.q, s.M.rel)
                                    : ideal_sum(ideal_product(s.q, s.head[j - 1]), s.M.rel);
            if (!s.head[j].contains(lhs))
                input_error("goodness_violation",
                            "q times term " + std::to_string(j) +
                                " is not contained in term " + std::to_string(j + 1));
        }
    }

    std::shared_ptr<state> st_;
};

template <class K>
filtration<K> adic_filtration(const cyclic_module<K>& M, const ideal<K>& q) {
    return filtration<K>(M, q, {});
}

// H(j) = λ(M_j / M_{j+1}); finite for every good filtration by q primary to m
template <class K>
int64_t hilbert_function(const filtration<K>& F, size_t j) {
    length_t l = layer_length(F.term(j), F.term(j + 1));
    if (!l.finite()) internal_error("infinite filtration layer");
    return l.value();
}

// H¹(j) = λ(M / M_{j+1}) — the first-sum transform of H
template <class K>
int64_t hilbert_sum_function(const filtration<K>& F, size_t j) {
    length_t l = module_length(F.term(j + 1));
    if (!l.finite()) internal_error("infinite truncation quotient");
    return l.value();
}

// ---------------------------------------------------------------------------
// Hilbert coefficients with certified truncation
// ---------------------------------------------------------------------------

struct hilbert_data {
    int dim = 0;
    std::vector<int64_t> H;   // H(0..T)
    std::vector<int64_t> h;   // numerator coefficients, trailing zeros trimmed
    std::vector<int64_t> e;   // e_0 .. e_dim
    int64_t truncation = 0;   // the T the data was certified at
    int window = 4;
    std::optional<int64_t> reduction_index;

    // e_i extended past dim: i-th factorial-normalized derivative of h at 1
    int64_t e_ext(int64_t i) const {
        int64_t s = 0;
        for (size_t k = 0; k < h.size(); ++k)
            s = checked_add(s, checked_mul(binomial(int64_t(k), i), h[k]));
        return s;
    }
};

// value of the length polynomial matching H¹ for large arguments
inline int64_t hilbert_polynomial1(const hilbert_data& d, int64_t j) {
    int64_t s = 0;
    for (int i = 0; i <= d.dim; ++i) {
        int64_t term = checked_mul(d.e[i], binomial(j + d.dim - i, d.dim - i));
        s = checked_add(s, (i % 2 == 0) ? term : -term);
    }
    return s;
}

// Truncate, transform, certify: compute H up to T, take the dim-th difference
// to get the series numerator h, and accept only when the last `window` h
// values vanish and the polynomial p¹ already agrees with H¹ there.  T starts
// at max(d+2, head+red+d) and grows to --max-index before giving up.
template <class K>
hilbert_data compute_hilbert_data(const filtration<K>& F, int window, int64_t max_index,
                                  std::optional<int64_t> red_index = std::nullopt,
                                  std::optional<int64_t> expected_e0 = std::nullopt) {
    const int d = F.dim();
    hilbert_data out;
    out.dim = d;
    out.window = window;
    out.reduction_index = red_index;

    int64_t T = std::max<int64_t>(d + 2, int64_t(F.head_len()) + red_index.value_or(0) + d);
    T = std::max<int64_t>(T, window + 1);
    std::vector<int64_t> H;
    while (true) {
        while (int64_t(H.size()) <= T) H.push_back(hilbert_function(F, H.size()));

        std::vector<int64_t> h(T + 1, 0);
        for (int64_t k = 0; k <= T; ++k) {
            int64_t s = 0;
            for (int i = 0; i <= std::min<int64_t>(k, d); ++i) {
                int64_t term = checked_mul(binomial(d, i), H[k - i]);
                s = checked_add(s, (i % 2 == 0) ? term : -term);
            }
            h[k] = s;
        }

        bool flat = true;
        for (int64_t k = T - window + 1; k <= T && flat; ++k)
            if (h[k] != 0) flat = false;

        if (flat) {
            out.H.assign(H.begin(), H.begin() + T + 1);
            out.h = h;
            while (!out.h.empty() && out.h.back() == 0) out.h.pop_back();
            out.e.assign(d + 1, 0);
            for (int i = 0; i <= d; ++i) {
                int64_t s = 0;
                for (size_t k = 0; k < out.h.size(); ++k)
                    s = checked_add(s, checked_mul(binomial(int64_t(k), i), out.h[k]));
                out.e[i] = s;
            }
            out.truncation = T;

            // the numerator certificate must also close the loop numerically:
            // H¹ equals its polynomial on the certified tail
            bool agree = true;
            int64_t run = 0;
            std::vector<int64_t> H1(T + 1);
            for (int64_t j = 0; j <= T; ++j) {
                run = checked_add(run, H[j]);
                H1[j] = run;
            }
            for (int64_t j = T - window + 1; j <= T && agree; ++j)
                if (hilbert_polynomial1(out, j) != H1[j]) agree = false;

            if (agree) {
                if (out.e[0] < 1) internal_error("nonpositive multiplicity");
                if (expected_e0 && *expected_e0 != out.e[0])
                    inconsistency("e0_mismatch",
                                  "multiplicity disagrees with the J-adic control value");
                return out;
            }
        }

        int64_t next = T + window + d + 1;
        if (next > max_index)
            certification_error("truncation",
                                "series numerator did not stabilize by index " +
                                    std::to_string(max_index) +
                                    "; raise --max-index if the example is this deep");
        T = next;
    }
}

// ---------------------------------------------------------------------------
// reduction index of J on F:  least n0 with M_{n+1} = J·M_n for all n ≥ n0
// ---------------------------------------------------------------------------
template <class K>
int64_t find_reduction_index(const filtration<K>& F, const ideal<K>& J, int64_t max_index) {
    const ideal<K>& rel = F.module().rel;
    auto matches = [&](int64_t n) {
        ideal<K> jt = J.is_zero_ideal() ? rel : ideal_sum(ideal_product(J, F.term(n)), rel);
        return F.term(n + 1) == jt;
    };
    int64_t s = int64_t(F.head_len());
    // beyond the head the property propagates upward, so the first hit at
    // n ≥ s is permanent; then peel back through the head while it still holds
    for (int64_t n = s; n <= max_index; ++n) {
        if (!matches(n)) continue;
        int64_t n0 = n;
        while (n0 > 0 && matches(n0 - 1)) --n0;
        return n0;
    }
    certification_error("no_reduction",
                        "J is not a reduction of the filtration by index " +
                            std::to_string(max_index));
}

// v_j = λ(M_{j+1} / J·M_j), zero for j ≥ reduction index (exactly)
template <class K>
std::vector<int64_t> v_values(const filtration<K>& F, const ideal<K>& J, int64_t upto) {
    const ideal<K>& rel = F.module().rel;
    std::vector<int64_t> v;
    for (int64_t j = 0; j <= upto; ++j) {
        ideal<K> jm = J.is_zero_ideal() ? rel : ideal_sum(ideal_product(J, F.term(j)), rel);
        v.push_back(layer_length(F.term(j + 1), jm).value());
    }
    return v;
}

// u_j = e_0 − H(j) in dimension one
inline std::vector<int64_t> u_values(const hilbert_data& d) {
    if (d.dim != 1) input_error("wrong_dimension", "u-values are defined in dimension one");
    std::vector<int64_t> u;
    for (int64_t Hj : d.H) u.push_back(d.e[0] - Hj);
    return u;
}

// ---------------------------------------------------------------------------
// derived filtrations
// ---------------------------------------------------------------------------

template <class K>
filtration<K> quotient_filtration(const filtration<K>& F, const poly<K>& a) {
    const cyclic_module<K>& M = F.module();
    ideal<K> rel2 = ideal_sum(M.rel, ideal<K>(M.S(), {a}));
    if (rel2.is_unit_ideal())
        input_error("unit_ideal", "quotient by this element collapses the module");
    cyclic_module<K> M2{M.amb, rel2, krull_dim(rel2)};
    std::vector<ideal<K>> head;
    for (size_t j = 1; j <= F.head_len(); ++j) head.push_back(ideal_sum(F.term(j), rel2));
    return filtration<K>(M2, F.q(), std::move(head));
}

template <class K>
filtration<K> derived_N(const filtration<K>& F, const ideal<K>& J) {
    return filtration<K>(F.module(), J, {});
}

// E: M ⊇ M_1 ⊇ J·M_1 ⊇ J²·M_1 ⊇ ...
template <class K>
filtration<K> derived_E(const filtration<K>& F, const ideal<K>& J) {
    return filtration<K>(F.module(), J, {F.term(1)});
}

template <class K>
filtration<K> saturated_filtration(const filtration<K>& F, const saturation_data<K>& sd) {
    std::vector<ideal<K>> head;
    for (size_t j = 1; j <= F.head_len(); ++j)
        head.push_back(ideal_sum(F.term(j), sd.quotient.rel));
    return filtration<K>(sd.quotient, F.q(), std::move(head));
}

// ---------------------------------------------------------------------------
// superficial elements
// ---------------------------------------------------------------------------

struct definition_check {
    int64_t j;
    bool pass;
};

struct superficial_certificate {
    std::string element;   // canonical text of the witness
    int64_t c = 0;         // intersection bound used by the definition checks
    int window = 4;
    int attempt = 0;       // 0-based candidate counter (singles first, then random)
    std::vector<std::vector<definition_check>> checks; // one list per filtration
    uint64_t seed = 0;
};

namespace detail {

// least n0 such that M_{n+1} = q·M_n for every n from n0 through the head
template <class K>
int64_t stabilization_index(const filtration<K>& F) {
    int64_t s = int64_t(F.head_len());
    int64_t n0 = s;
    while (n0 > 0) {
        ideal<K> qt = ideal_sum(ideal_product(F.q(), F.term(n0 - 1)), F.module().rel);
        if (F.term(n0) != qt) break;
        --n0;
    }
    return n0;
}

// windowed check of (M_{j+1} : a) ∩ M_c = M_j for j in [c, c+window]
template <class K>
bool superficial_definition(const filtration<K>& F, const poly<K>& a, int window,
                            std::vector<definition_check>& log) {
    int64_t c = stabilization_index(F) + window;
    ideal<K> Mc = F.term(c);
    bool all = true;
    for (int64_t j = c; j <= c + window; ++j) {
        ideal<K> lhs = ideal_intersect(ideal_colon(F.term(j + 1), a), Mc);
        bool pass = (lhs == F.term(j));
        log.push_back({j, pass});
        if (!pass) { all = false; break; }
    }
    return all;
}

} // namespace detail

template <class K>
struct superficial_witness {
    poly<K> element;
    superficial_certificate cert;
};

// Search for one element superficial for every filtration in the list (they
// must share the ring; candidates come from the smallest q present).  Single
// generators are tried first in order, then seeded generic combinations; all
// certification is by the windowed definition checks above.
template <class K>
superficial_witness<K> find_superficial(const std::vector<filtration<K>>& Fs,
                                        uint64_t seed, int window) {
    if (Fs.empty()) input_error("empty_filtration_list", "nothing to search");
    const ring_ptr& S = Fs[0].module().S();
    for (const auto& F : Fs) require_same_ring(S, F.module().S());

    // candidate pool: the q contained in all the others
    size_t pool_idx = Fs.size();
    for (size_t i = 0; i < Fs.size() && pool_idx == Fs.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < Fs.size() && minimal; ++j)
            if (!Fs[j].q().contains(Fs[i].q())) minimal = false;
        if (minimal) pool_idx = i;
    }
    if (pool_idx == Fs.size())
        input_error("incomparable_q",
                    "the filtrations have no smallest continuation ideal to draw from");
    const ideal<K>& pool = Fs[pool_idx].q();

    rng r(mix_seed(seed, "superficial"));
    std::vector<poly<K>> candidates;
    for (const poly<K>& g : pool.gens()) candidates.push_back(g);
    for (int i = 0; i < 8; ++i) candidates.push_back(detail::generic_combination(pool, r));

    for (size_t idx = 0; idx < candidates.size(); ++idx) {
        const poly<K>& a = candidates[idx];
        if (a.is_zero()) continue;
        bool on_module = false;
        for (const auto& F : Fs)
            if (!F.module().rel.contains(a)) on_module = true;
        if (!on_module) continue;

        superficial_certificate cert;
        cert.element = a.str();
        cert.window = window;
        cert.attempt = int(idx) + 1; // 1-based: which candidate finally passed
        cert.seed = seed;
        bool ok = true;
        for (const auto& F : Fs) {
            std::vector<definition_check> log;
            bool pass = detail::superficial_definition(F, a, window, log);
            cert.c = detail::stabilization_index(F) + window;
            cert.checks.push_back(std::move(log));
            if (!pass) { ok = false; break; }
        }
        if (ok) return superficial_witness<K>{a, std::move(cert)};
    }
    certification_error("genericity",
                        "no superficial element found among generators and 8 seeded combinations");
}

template <class K>
struct superficial_sequence_data {
    std::vector<superficial_witness<K>> steps; // element i certified on the i-th quotient
    std::vector<filtration<K>> stages;         // F = stages[0], then successive quotients
    ideal<K> J;                                // generated by the elements
    int64_t reduction_index = 0;
};

// maximal sequence: dim(M) elements, each superficial for the filtration
// induced on the quotient by its predecessors; J is then a reduction of F
// and the reduction index is detected exactly.
template <class K>
superficial_sequence_data<K> superficial_sequence(const filtration<K>& F, uint64_t seed,
                                                  int window, int64_t max_index) {
    superficial_sequence_data<K> out{{}, {F}, ideal<K>::zero(F.module().S()), 0};
    std::vector<poly<K>> elements;
    for (int i = 0; i < F.dim(); ++i) {
        const filtration<K>& cur = out.stages.back();
        superficial_witness<K> w =
            find_superficial<K>({cur}, mix_seed(seed, "seq" + std::to_string(i)), window);
        out.stages.push_back(quotient_filtration(cur, w.element));
        elements.push_back(w.element);
        out.steps.push_back(std::move(w));
    }
    out.J = ideal<K>(F.module().S(), elements);
    out.reduction_index = find_reduction_index(F, out.J, max_index);
    return out;
}

} // namespace chern

#endif
