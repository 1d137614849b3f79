#ifndef CHERN_THEOREMS_HPP
#define CHERN_THEOREMS_HPP

#include <map>
#include <memory>

#include "chern/filtration.hpp"

namespace chern {

enum class verdict { holds, equality, strict, inconsistent, skipped };

inline const char* verdict_str(verdict v) {
    switch (v) {
        case verdict::holds: return "holds";
        case verdict::equality: return "equality";
        case verdict::strict: return "strict";
        case verdict::inconsistent: return "inconsistent";
        case verdict::skipped: return "skipped";
    }
    return "?";
}

struct theorem_report {
    std::string id;
    verdict v = verdict::holds;
    std::vector<std::string> hypotheses;
    std::vector<std::pair<std::string, int64_t>> quantities;
    std::vector<std::string> notes;

    void quantity(const std::string& k, int64_t x) { quantities.emplace_back(k, x); }
    void note(std::string s) { notes.push_back(std::move(s)); }
    void flag_inconsistent(std::string why) {
        v = verdict::inconsistent;
        notes.push_back(std::move(why));
    }
    // inequality lhs ≤ rhs: equality / strict, or inconsistent when violated
    void bound(int64_t lhs, int64_t rhs, const std::string& what) {
        if (v == verdict::inconsistent) return;
        if (lhs > rhs)
            flag_inconsistent(what + " violated: " + std::to_string(lhs) + " > " +
                              std::to_string(rhs));
        else if (v != verdict::strict)
            v = (lhs == rhs) ? verdict::equality : verdict::strict;
        if (lhs < rhs) v = verdict::strict;
    }
    static theorem_report skip(std::string id, std::string why) {
        theorem_report r;
        r.id = std::move(id);
        r.v = verdict::skipped;
        r.notes.push_back(std::move(why));
        return r;
    }
};

struct engine_options {
    uint64_t seed = 42;
    int window_stab = 4;
    int window_superficial = 4;
    int window_vv = 4;
    int64_t max_index = 64;
};

// P_S written over (1-z)^d: numerator and Hilbert function of the Sally module
struct sally_data {
    std::vector<int64_t> HS; // HS[n] = λ(M_{n+1}/J^n M_1), HS[0] = 0
    zpoly numerator;         // (h_E - h_M)/(1-z), exact
    bool is_zero = true;
    bool dim_is_d = false;   // e1(M) > e1(E)
    int64_t e0 = 0;          // numerator(1) = e1(M) - e1(E)
    int64_t sum_v_tail = 0;  // Σ_{j≥1} v_j
};

// ---------------------------------------------------------------------------
// the full dataset every check draws from
// ---------------------------------------------------------------------------
template <class K>
struct analysis {
    graded_ring<K> A;
    cyclic_module<K> M;
    filtration<K> F;
    engine_options opt;

    int d = 0;
    size_t grade_m = 0;
    bool cm = false;
    saturation_data<K> sat;
    hilbert_data dM;

    // dimension ≥ 1 only
    std::optional<superficial_sequence_data<K>> seq;
    std::optional<filtration<K>> N, E;
    std::optional<hilbert_data> dN, dE, dsat;
    std::vector<int64_t> v;
    std::optional<std::vector<int64_t>> u; // dimension 1
    std::optional<sally_data> sally;
    int vv_depth = 0; // leading prefixes of the sequence certified regular on gr

    bool is_madic_on_ring = false;
    std::shared_ptr<analysis<K>> madic; // control data for the ring checks
};

namespace detail {

// λ(0:_M a) for the module S/rel
template <class K>
length_t annihilator_length(const ideal<K>& rel, const poly<K>& a) {
    return layer_length(ideal_colon(rel, a), rel);
}

// the superficial-element consequences: dimension drop, e_j transfer with the
// (0:a) correction in the last slot, and the coefficientwise series bound
// P_M(z) ≤ P¹_{M/aM}(z); any failure is an engine-level contradiction
template <class K>
void verify_superficial_properties(const filtration<K>& cur, const hilbert_data& dc,
                                   const filtration<K>& quot, const hilbert_data& dq,
                                   const poly<K>& a) {
    int dcur = cur.dim();
    if (quot.dim() != dcur - 1)
        inconsistency("superficial_property", "dimension did not drop by one");
    for (int j = 0; j + 2 <= dcur; ++j)
        if (dc.e[j] != dq.e[j])
            inconsistency("superficial_property",
                          "e_" + std::to_string(j) + " not preserved by the quotient");
    length_t ann = annihilator_length(cur.module().rel, a);
    if (!ann.finite())
        inconsistency("superficial_property", "annihilator of the witness has infinite length");
    int64_t shift = (dcur % 2 == 1) ? ann.value() : -ann.value();
    if (dq.e_ext(dcur - 1) != checked_add(dc.e_ext(dcur - 1), shift))
        inconsistency("superficial_property", "top coefficient shift disagrees with λ(0:a)");
    // series bound, coefficientwise on the shared computed range
    int64_t run = 0;
    size_t nmax = std::min(dc.H.size(), dq.H.size());
    for (size_t j = 0; j < nmax; ++j) {
        run = checked_add(run, dq.H[j]);
        if (dc.H[j] > run)
            inconsistency("superficial_property",
                          "series bound against the quotient fails at index " +
                              std::to_string(j));
    }
}

// leading prefixes (a_1..a_r) with M_{j+1} ∩ (a_1..a_r)M = (a_1..a_r)M_j for
// all j up to the window; each prefix certifies one more regular initial form
// on the associated graded module
template <class K>
int vv_certified_depth(const filtration<K>& F, const std::vector<poly<K>>& els,
                       int64_t jmax) {
    // A prefix certifies gr-depth r when (a) it is a regular sequence on M --
    // initial forms regular on gr force that, so it is a hard precondition,
    // not a convenience -- and (b) the intersection identities
    // T_n ∩ (J_r + rel) = J_r·T_{n-1} + rel hold through the window, which
    // upgrades regularity on M to regularity of the initial forms on gr.
    const ideal<K>& rel = F.module().rel;
    cyclic_module<K> cur = F.module();
    std::vector<poly<K>> prefix;
    int depth = 0;
    for (const poly<K>& a : els) {
        if (!is_regular(cur, a)) break;
        prefix.push_back(a);
        ideal<K> Jr(F.module().S(), prefix);
        ideal<K> JrM = ideal_sum(Jr, rel);
        bool ok = true;
        for (int64_t j = 0; j <= jmax && ok; ++j) {
            ideal<K> lhs = ideal_intersect(F.term(j + 1), JrM);
            ideal<K> rhs = ideal_sum(ideal_product(Jr, F.term(j)), rel);
            if (lhs != rhs) ok = false;
        }
        if (!ok) break;
        cur = cyclic_module<K>{cur.amb, ideal_sum(cur.rel, ideal<K>(cur.S(), {a})),
                               cur.dim - 1};
        ++depth;
    }
    return depth;
}

// expand numerator/(1-z)^d back into function values
inline int64_t series_value(const zpoly& num, int d, int64_t n) {
    int64_t s = 0;
    for (size_t i = 0; i < num.size() && int64_t(i) <= n; ++i) {
        int64_t b = (d == 0) ? (int64_t(i) == n ? 1 : 0) : binomial(n - int64_t(i) + d - 1, d - 1);
        s = checked_add(s, checked_mul(num[i], b));
    }
    return s;
}

// λ(0:_M a^∞) with a complete stopping certificate: once (rel:a^t) equals
// (rel:a^2t) the chain is stationary at every later exponent
template <class K>
std::pair<int64_t, int64_t> stable_colon_length(const ideal<K>& rel, const poly<K>& a) {
    int64_t t = 1;
    poly<K> at = a;
    while (true) {
        poly<K> a2t = at * at;
        ideal<K> c1 = ideal_colon(rel, at);
        ideal<K> c2 = ideal_colon(rel, a2t);
        if (c1 == c2) return {layer_length(c1, rel).value(), t};
        at = a2t;
        t = checked_mul(t, int64_t{2});
        if (t > (int64_t{1} << 40)) internal_error("colon chain did not stabilize");
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// building the dataset
// ---------------------------------------------------------------------------

template <class K>
analysis<K> build_analysis(const graded_ring<K>& A, const cyclic_module<K>& M,
                           const filtration<K>& F, const engine_options& opt,
                           bool want_ring_control = true);

namespace detail {

template <class K>
void build_sally(analysis<K>& an) {
    const hilbert_data& dM = an.dM;
    const hilbert_data& dE = *an.dE;
    sally_data s;
    s.dim_is_d = dM.e[1] > dE.e[1];
    // numerator of P_S over (1-z)^d; the difference of the two numerators has
    // zero sum because the multiplicities agree, so the division is exact
    zpoly diff = zpoly_sub(dE.h, dM.h);
    auto num = zpoly_div_one_minus_z(diff, 1);
    if (!num) inconsistency("sally_series", "numerator difference not divisible by 1-z");
    s.numerator = *num;
    s.e0 = 0;
    for (int64_t c : s.numerator) s.e0 = checked_add(s.e0, c);
    if (s.e0 != checked_add(dM.e[1], -dE.e[1]))
        internal_error("sally numerator sum disagrees with e1 difference");

    // H_S three ways: direct lengths, difference of the two Hilbert-Samuel
    // functions, and expansion of the numerator — all must agree
    int64_t nmax = std::min(dM.truncation, dE.truncation);
    int64_t runM = 0, runE = 0;
    for (int64_t n = 0; n <= nmax; ++n) {
        int64_t direct = layer_length(an.F.term(n + 1), an.E->term(n + 1)).value();
        runM = checked_add(runM, dM.H[n]);
        runE = checked_add(runE, dE.H[n]);
        if (direct != runE - runM)
            inconsistency("sally_series",
                          "direct Sally length disagrees with the series route at " +
                              std::to_string(n));
        if (direct != series_value(s.numerator, dM.dim, n))
            inconsistency("sally_series",
                          "Sally numerator expansion disagrees at " + std::to_string(n));
        s.HS.push_back(direct);
        if (direct != 0) s.is_zero = false;
    }
    for (size_t j = 1; j < an.v.size(); ++j) s.sum_v_tail = checked_add(s.sum_v_tail, an.v[j]);
    an.sally = std::move(s);
}

} // namespace detail

template <class K>
analysis<K> build_analysis(const graded_ring<K>& A, const cyclic_module<K>& M,
                           const filtration<K>& F, const engine_options& opt,
                           bool want_ring_control) {
    analysis<K> an{A, M, F, opt};
    an.d = M.dim;
    an.grade_m = grade(maximal_ideal<K>(M.S()), M, mix_seed(opt.seed, "grade-m"));
    an.cm = (int(an.grade_m) == an.d);
    an.sat = h0_and_saturate(M);
    if (an.d >= 1 && (an.sat.w_length == 0) != (an.grade_m >= 1))
        inconsistency("local_cohomology", "vanishing of W disagrees with positive depth");

    ideal<K> mm = maximal_ideal<K>(M.S());
    an.is_madic_on_ring = F.is_adic() && F.q() == mm && M.rel == A.defining;

    if (an.d == 0) {
        an.dM = compute_hilbert_data(F, opt.window_stab, opt.max_index);
        if (an.dM.e[0] != length(M).value())
            inconsistency("artinian_multiplicity", "e0 of an artinian module is its length");
        return an;
    }

    an.seq = superficial_sequence(F, opt.seed, opt.window_superficial, opt.max_index);
    int64_t red = an.seq->reduction_index;
    an.dM = compute_hilbert_data(F, opt.window_stab, opt.max_index, red);

    // hilbert data down the quotient tower, with the transfer rules checked
    std::vector<hilbert_data> stage_data{an.dM};
    for (size_t i = 0; i < an.seq->steps.size(); ++i) {
        const filtration<K>& quot = an.seq->stages[i + 1];
        hilbert_data dq = compute_hilbert_data(quot, opt.window_stab, opt.max_index);
        detail::verify_superficial_properties(an.seq->stages[i], stage_data.back(), quot, dq,
                                              an.seq->steps[i].element);
        stage_data.push_back(std::move(dq));
    }

    an.N = derived_N(F, an.seq->J);
    an.E = derived_E(F, an.seq->J);
    an.dN = compute_hilbert_data(*an.N, opt.window_stab, opt.max_index, red, an.dM.e[0]);
    an.dE = compute_hilbert_data(*an.E, opt.window_stab, opt.max_index, red, an.dM.e[0]);
    an.dN->reduction_index.reset(); // the hint above was F's index, not theirs
    an.dE->reduction_index.reset();

    int64_t vmax = std::max<int64_t>(red, int64_t(an.dM.h.size())) + opt.window_stab;
    an.v = v_values(F, an.seq->J, vmax);
    for (int64_t j = red; j <= vmax; ++j)
        if (an.v[j] != 0)
            inconsistency("reduction_index", "v_j nonzero past the reduction index");
    if (an.d == 1) an.u = u_values(an.dM);

    an.vv_depth = detail::vv_certified_depth(
        F, [&] {
            std::vector<poly<K>> els;
            for (const auto& st : an.seq->steps) els.push_back(st.element);
            return els;
        }(),
        int64_t(F.head_len()) + red + opt.window_vv);

    // saturation transfer: all coefficients agree except the last, which moves
    // by (−1)^d λ(W)
    if (an.sat.w_length > 0) {
        filtration<K> Fs = saturated_filtration(F, an.sat);
        hilbert_data ds = compute_hilbert_data(Fs, opt.window_stab, opt.max_index, red);
        for (int i = 0; i <= an.d - 1; ++i)
            if (an.dM.e[i] != ds.e[i])
                inconsistency("saturation_transfer",
                              "e_" + std::to_string(i) + " changed under saturation");
        int64_t shift = (an.d % 2 == 0) ? an.sat.w_length : -an.sat.w_length;
        if (an.dM.e[an.d] != checked_add(ds.e[an.d], shift))
            inconsistency("saturation_transfer", "top coefficient shift is not ±λ(W)");
        an.dsat = std::move(ds);
    } else {
        an.dsat = an.dM; // W = 0: saturation changes nothing
    }

    // Cohen-Macaulay control values: the J-adic numerator collapses to a
    // constant, so every higher coefficient vanishes and λ(M/JM) = e0
    if (an.cm) {
        for (size_t i = 1; i < an.dN->e.size(); ++i)
            if (an.dN->e[i] != 0)
                inconsistency("cm_control", "J-adic coefficients of a CM module must vanish");
        if (an.dN->e_ext(int64_t(an.dN->e.size())) != 0)
            inconsistency("cm_control", "J-adic numerator of a CM module must be constant");
        int64_t colength =
            module_length(ideal_sum(an.seq->J, M.rel)).value();
        if (colength != an.dM.e[0])
            inconsistency("cm_control", "λ(M/JM) must equal the multiplicity when CM");
        // gr of the E-filtration has minimal multiplicity
        zpoly he{an.dM.H[0], an.dM.e[0] - an.dM.H[0]};
        while (!he.empty() && he.back() == 0) he.pop_back();
        if (an.dE->h != he)
            inconsistency("cm_control", "E-numerator is not of minimal multiplicity shape");
    }

    detail::build_sally(an);

    if (want_ring_control && !an.is_madic_on_ring && A.dim >= 1) {
        cyclic_module<K> Aself = make_module(A, std::vector<poly<K>>{});
        filtration<K> Fm = adic_filtration(Aself, mm);
        engine_options sub = opt;
        sub.seed = mix_seed(opt.seed, "ring-control");
        an.madic = std::make_shared<analysis<K>>(
            build_analysis(A, Aself, Fm, sub, false));
    }
    return an;
}

// the analysis holding the m-adic filtration data of the ring itself
template <class K>
const analysis<K>* ring_control(const analysis<K>& an) {
    if (an.is_madic_on_ring) return &an;
    return an.madic.get();
}

// ---------------------------------------------------------------------------
// the checks
// ---------------------------------------------------------------------------

template <class K>
theorem_report check_valabrega_valla(const analysis<K>& an) {
    theorem_report r;
    r.id = "valabrega_valla";
    if (an.d == 0) return theorem_report::skip(r.id, "needs dimension at least one");
    r.hypotheses.push_back("maximal superficial sequence");
    r.quantity("certified_gr_depth", an.vv_depth);
    r.quantity("dim", an.d);
    if (an.vv_depth > an.d) r.flag_inconsistent("certified depth exceeds the dimension");
    if (an.vv_depth > int(an.grade_m))
        r.flag_inconsistent("gr depth exceeds module depth");
    r.note("prefixes of the sequence with initial forms regular on gr: " +
           std::to_string(an.vv_depth));
    return r;
}

template <class K>
theorem_report check_sally_machine(const analysis<K>& an) {
    theorem_report r;
    r.id = "sally_machine";
    if (an.d < 2) return theorem_report::skip(r.id, "needs dimension at least two");
    r.hypotheses.push_back("first sequence element is superficial");
    const filtration<K>& quot = an.seq->stages[1];
    size_t gM = grade(an.F.q(), an.F.module(), mix_seed(an.opt.seed, "machine-m"));
    size_t gQ = grade(an.F.q(), quot.module(), mix_seed(an.opt.seed, "machine-q"));
    r.quantity("grade_q_M", int64_t(gM));
    r.quantity("grade_q_quotient", int64_t(gQ));
    for (size_t j = 1; j <= an.F.module().S()->nvars(); ++j)
        if ((gM >= j + 1) != (gQ >= j)) {
            r.flag_inconsistent("grade shift fails at level " + std::to_string(j));
            return r;
        }
    r.v = verdict::holds;
    return r;
}

template <class K>
theorem_report check_dim1_package(const analysis<K>& an) {
    theorem_report r;
    r.id = "dim1_package";
    if (an.d != 1) return theorem_report::skip(r.id, "needs dimension exactly one");
    r.hypotheses.push_back("dimension one, a = single superficial element");
    const poly<K>& a = an.seq->steps[0].element;
    const ideal<K>& rel = an.F.module().rel;
    const std::vector<int64_t>& u = *an.u;

    // u_j = λ(M_{j+1}/aM_j) − λ(0:_{M_j} a)
    ideal<K> colon_a = ideal_colon(rel, a);
    for (size_t j = 0; j < an.v.size() && j < u.size(); ++j) {
        int64_t ann_j = layer_length(ideal_intersect(colon_a, an.F.term(j)), rel).value();
        if (u[j] != an.v[j] - ann_j) {
            r.flag_inconsistent("u-value formula fails at index " + std::to_string(j));
            return r;
        }
    }
    // e_i from the u-values, i ≥ 1
    for (int64_t i = 1; i <= 3; ++i) {
        int64_t s = 0;
        for (size_t k = 0; k < u.size(); ++k)
            s = checked_add(s, checked_mul(binomial(int64_t(k), i - 1), u[k]));
        if (s != an.dM.e_ext(i)) {
            r.flag_inconsistent("e_" + std::to_string(i) + " does not match its u-expansion");
            return r;
        }
    }
    // e1 of the (a)-adic filtration is −λ(0:a^∞), which is also −λ(W)
    auto [wlen, t] = detail::stable_colon_length(rel, a);
    r.quantity("lambda_W", an.sat.w_length);
    r.quantity("colon_stabilized_at", t);
    if (an.dN->e[1] != -wlen) r.flag_inconsistent("e1 of the adic control is not -λ(0:a^∞)");
    if (wlen != an.sat.w_length) r.flag_inconsistent("λ(0:a^∞) is not λ(W)");

    int64_t sumv = 0;
    for (int64_t x : an.v) sumv = checked_add(sumv, x);
    r.quantity("e1", an.dM.e[1]);
    r.quantity("e1_adic", an.dN->e[1]);
    r.quantity("sum_v", sumv);
    if (an.dN->e[1] > 0) r.flag_inconsistent("adic e1 must be nonpositive in dimension one");
    r.bound(an.dM.e[1] - an.dN->e[1], sumv, "dimension-one upper bound");
    // equality with W inside M_1 forces the module to be Cohen-Macaulay
    if (r.v == verdict::equality && an.F.term(1).contains(an.sat.sat)) {
        r.note("equality with W inside the first term: module must be Cohen-Macaulay");
        if (!an.cm) r.flag_inconsistent("equality case fails to force Cohen-Macaulay");
    }
    return r;
}

template <class K>
theorem_report check_en_northcott(const analysis<K>& an) {
    theorem_report r;
    r.id = "en_northcott";
    if (an.d == 0) return theorem_report::skip(r.id, "needs dimension at least one");
    r.hypotheses.push_back("J from a maximal superficial sequence");
    int64_t e1M = an.dM.e[1], e1E = an.dE->e[1], e1N = an.dN->e[1];
    int64_t e0 = an.dM.e[0], h0 = an.dM.H[0];
    r.quantity("e1", e1M);
    r.quantity("e1_E", e1E);
    r.quantity("e1_adic", e1N);
    r.quantity("e0", e0);
    r.quantity("h0", h0);
    if (e1M < e1E || e1E < e1N)
        r.flag_inconsistent("chain e1 >= e1(E) >= e1(adic) violated");
    if (e1E - e1N < e0 - h0) r.flag_inconsistent("strengthened lower bound violated");
    r.bound(e0 - h0, e1M - e1N, "lower bound on e1 - e1(adic)");
    return r;
}

template <class K>
theorem_report check_hm_bound(const analysis<K>& an) {
    theorem_report r;
    r.id = "hm_bound";
    if (an.d == 0) return theorem_report::skip(r.id, "needs dimension at least one");
    r.hypotheses.push_back("J from a maximal superficial sequence");
    int64_t sumv = 0;
    for (int64_t x : an.v) sumv = checked_add(sumv, x);
    r.quantity("e1", an.dM.e[1]);
    r.quantity("e1_adic", an.dN->e[1]);
    r.quantity("sum_v", sumv);
    r.quantity("reduction_index", an.seq->reduction_index);
    r.bound(an.dM.e[1] - an.dN->e[1], sumv, "upper bound on e1 - e1(adic)");
    return r;
}

template <class K>
theorem_report check_cm_equivalences(const analysis<K>& an) {
    theorem_report r;
    r.id = "cm_equivalences";
    if (an.d == 0) return theorem_report::skip(r.id, "needs dimension at least one");
    if (!an.cm) return theorem_report::skip(r.id, "module is not Cohen-Macaulay");
    r.hypotheses.push_back("Cohen-Macaulay module");
    int64_t sumv = 0, sumjv = 0;
    for (size_t j = 0; j < an.v.size(); ++j) {
        sumv = checked_add(sumv, an.v[j]);
        sumjv = checked_add(sumjv, checked_mul(int64_t(j), an.v[j]));
    }
    int64_t e1 = an.dM.e[1], e2 = an.dM.e_ext(2);
    r.quantity("e1", e1);
    r.quantity("e2", e2);
    r.quantity("sum_v", sumv);
    r.quantity("sum_jv", sumjv);
    if (e1 > sumv) r.flag_inconsistent("first coefficient exceeds its v-bound");
    if (e2 > sumjv) r.flag_inconsistent("second coefficient exceeds its v-bound");

    bool c1 = an.vv_depth >= an.d - 1;
    bool c2 = true;
    int64_t imax = std::max<int64_t>(int64_t(an.dM.h.size()), an.seq->reduction_index + 1) + 1;
    for (int64_t i = 1; i <= imax && c2; ++i) {
        int64_t s = 0;
        for (size_t k = 0; k < an.v.size(); ++k)
            s = checked_add(s, checked_mul(binomial(int64_t(k), i - 1), an.v[k]));
        if (an.dM.e_ext(i) != s) c2 = false;
    }
    bool c3 = (e1 == sumv);
    bool c4 = (e2 == sumjv);
    zpoly target{an.dM.H[0]};
    for (size_t j = 0; j + 1 < an.v.size(); ++j) target.push_back(an.v[j] - an.v[j + 1]);
    while (!target.empty() && target.back() == 0) target.pop_back();
    bool c5 = (an.dM.h == target);
    r.quantity("cond_depth", c1);
    r.quantity("cond_all_coefficients", c2);
    r.quantity("cond_e1", c3);
    r.quantity("cond_e2", c4);
    r.quantity("cond_series", c5);
    if (c1 != c2 || c2 != c3 || c3 != c4 || c4 != c5)
        r.flag_inconsistent("the five equivalent conditions disagree");
    else
        r.v = c1 ? verdict::equality : verdict::strict;
    return r;
}

template <class K>
theorem_report check_madic_characterization(const analysis<K>& an) {
    theorem_report r;
    r.id = "madic_characterization";
    if (an.A.dim < 1) return theorem_report::skip(r.id, "ring has dimension zero");
    const analysis<K>* rc = ring_control(an);
    if (!rc) return theorem_report::skip(r.id, "ring control data not built");
    r.hypotheses.push_back("the ring with its maximal-ideal filtration");
    int64_t sumv = 0;
    for (int64_t x : rc->v) sumv = checked_add(sumv, x);
    int64_t e1m = rc->dM.e[1], e1J = rc->dN->e[1];
    r.quantity("e1_m", e1m);
    r.quantity("e1_J", e1J);
    r.quantity("sum_v_m", sumv);
    r.quantity("ring_cm", rc->cm);
    r.quantity("certified_gr_depth", rc->vv_depth);
    bool lhs = (e1m - e1J == sumv);
    bool rhs = rc->cm && rc->vv_depth >= rc->d - 1;
    if (lhs != rhs) {
        r.flag_inconsistent("numerical equality and the structural side disagree");
        return r;
    }
    r.v = lhs ? verdict::equality : verdict::strict;
    if (rc->cm && e1J != 0) r.flag_inconsistent("Cohen-Macaulay ring with nonzero e1(J)");
    if (e1J <= 0) {
        if (e1m > sumv) r.flag_inconsistent("e1(J) <= 0 but e1(m) exceeds the v-sum");
        r.note("e1(J) <= 0: the v-sum bounds e1(m), with equality exactly in the"
               " Cohen-Macaulay high-depth case");
    }
    return r;
}

template <class K>
theorem_report check_sally_bound(const analysis<K>& an) {
    theorem_report r;
    r.id = "sally_bound";
    if (an.d == 0) return theorem_report::skip(r.id, "needs dimension at least one");
    r.hypotheses.push_back("Sally module of the filtration with respect to J");
    const sally_data& s = *an.sally;
    r.quantity("e0_S", s.e0);
    r.quantity("sum_v_from_1", s.sum_v_tail);
    r.quantity("sally_zero", s.is_zero);
    r.quantity("dim_is_d", s.dim_is_d);
    // identity e_i(S) = e_{i+1} − e_{i+1}(E), built into the series relation
    for (int64_t i = 0; i <= 2; ++i) {
        int64_t lhs = 0;
        for (size_t k = 0; k < s.numerator.size(); ++k)
            lhs = checked_add(lhs, checked_mul(binomial(int64_t(k), i), s.numerator[k]));
        if (lhs != an.dM.e_ext(i + 1) - an.dE->e_ext(i + 1)) {
            r.flag_inconsistent("coefficient transfer identity fails at " + std::to_string(i));
            return r;
        }
    }
    if (s.is_zero && s.dim_is_d) {
        r.flag_inconsistent("a vanishing Sally module cannot have maximal dimension");
        return r;
    }
    // with M Cohen-Macaulay the adic Sally module is nonzero exactly when it
    // has maximal dimension (E has minimal multiplicity, so e1 > e1(E) means
    // M_2 != J M_1); without depth the forward direction can genuinely fail
    if (an.cm && an.F.is_adic() && s.dim_is_d == s.is_zero) {
        r.flag_inconsistent("for an adic filtration of a Cohen-Macaulay module the Sally"
                            " module is nonzero exactly when it has maximal dimension");
        return r;
    }
    if (!s.dim_is_d) {
        r.v = verdict::holds;
        r.note(s.is_zero ? "Sally module vanishes" : "Sally module has lower dimension");
        if (s.e0 > s.sum_v_tail)
            r.flag_inconsistent("multiplicity bound violated in the degenerate case");
        return r;
    }
    r.bound(s.e0, s.sum_v_tail, "Sally multiplicity bound");
    return r;
}

template <class K>
theorem_report check_sally_equivalences(const analysis<K>& an) {
    theorem_report r;
    r.id = "sally_equivalences";
    if (an.d == 0) return theorem_report::skip(r.id, "needs dimension at least one");

    // ring part: e0(S) = Σ_{j≥1}v_j  ⟺  e1(m)−e1(J) = Σ v_j  ⟺  CM + high depth
    const analysis<K>* rc = ring_control(an);
    if (rc && rc->sally) {
        const sally_data& sm = *rc->sally;
        int64_t sumv = 0;
        for (int64_t x : rc->v) sumv = checked_add(sumv, x);
        bool c1 = (sm.e0 == sm.sum_v_tail);
        bool c2 = (rc->dM.e[1] - rc->dN->e[1] == sumv);
        bool c3 = rc->cm && rc->vv_depth >= rc->d - 1;
        r.quantity("ring_cond_sally", c1);
        r.quantity("ring_cond_e1", c2);
        r.quantity("ring_cond_structure", c3);
        if (sm.dim_is_d && (c1 != c2 || c2 != c3)) {
            r.flag_inconsistent("ring-level equivalences disagree");
            return r;
        }
        if (!sm.dim_is_d && (c2 != c3)) {
            r.flag_inconsistent("ring-level biconditional fails");
            return r;
        }
    }

    if (!an.cm || !an.F.is_adic()) {
        if (r.quantities.empty())
            return theorem_report::skip(r.id, "needs a Cohen-Macaulay module with an adic"
                                              " filtration");
        r.v = verdict::holds;
        r.note("module part skipped: needs a Cohen-Macaulay module with an adic filtration");
        return r;
    }
    r.hypotheses.push_back("Cohen-Macaulay module, adic filtration");
    const sally_data& s = *an.sally;
    bool c1 = (s.e0 == s.sum_v_tail);
    // series shape P_S = Σ_{j≥1} v_j z^j / (1-z)^d
    zpoly target;
    target.push_back(0);
    for (size_t j = 1; j < an.v.size(); ++j) target.push_back(an.v[j]);
    while (!target.empty() && target.back() == 0) target.pop_back();
    zpoly num = s.numerator;
    while (!num.empty() && num.back() == 0) num.pop_back();
    bool c2 = (num == target);
    r.quantity("cond_sally_multiplicity", c1);
    r.quantity("cond_sally_series", c2);
    r.note("the series shape holds exactly when the Sally module is Cohen-Macaulay");

    // tie back to the five-condition theorem on the module
    bool five = an.vv_depth >= an.d - 1;
    r.quantity("cond_gr_depth", five);
    if (c1 != c2 || c2 != five) {
        r.flag_inconsistent("Sally equivalences disagree with the depth condition");
        return r;
    }
    r.v = c1 ? verdict::equality : verdict::strict;
    return r;
}

// ---------------------------------------------------------------------------
// runner
// ---------------------------------------------------------------------------

inline std::vector<std::string> default_check_ids() {
    return {"valabrega_valla", "sally_machine",          "dim1_package",
            "en_northcott",    "hm_bound",               "cm_equivalences",
            "madic_characterization", "sally_bound",     "sally_equivalences"};
}

template <class K>
theorem_report run_check(const analysis<K>& an, const std::string& id) {
    if (id == "valabrega_valla") return check_valabrega_valla(an);
    if (id == "sally_machine") return check_sally_machine(an);
    if (id == "dim1_package") return check_dim1_package(an);
    if (id == "en_northcott") return check_en_northcott(an);
    if (id == "hm_bound") return check_hm_bound(an);
    if (id == "cm_equivalences") return check_cm_equivalences(an);
    if (id == "madic_characterization") return check_madic_characterization(an);
    if (id == "sally_bound") return check_sally_bound(an);
    if (id == "sally_equivalences") return check_sally_equivalences(an);
    input_error("unknown_check", "no check named '" + id + "'");
}

template <class K>
std::vector<theorem_report> run_checks(const analysis<K>& an,
                                       const std::vector<std::string>& ids) {
    std::vector<theorem_report> out;
    for (const std::string& id : ids) out.push_back(run_check(an, id));
    return out;
}

} // namespace chern

#endif
