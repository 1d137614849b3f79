#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "chern/filtration.hpp"
#include "chern/parser.hpp"

using namespace chern;

namespace {

using P = poly<fp_scalar>;
using I = ideal<fp_scalar>;
using F = filtration<fp_scalar>;

P p(const ring_ptr& R, const std::string& s) { return parse_poly<fp_scalar>(s, R); }

std::vector<P> pl(const ring_ptr& R, const std::vector<std::string>& ss) {
    std::vector<P> out;
    for (auto& s : ss) out.push_back(p(R, s));
    return out;
}

struct fixture {
    ring_ptr S;
    cyclic_module<fp_scalar> M;
    F Fm; // maximal-ideal adic filtration

    fixture(std::vector<std::string> vars, std::vector<std::string> rels)
        : S(make_ring_desc(std::move(vars), field_spec{})),
          M(make_module(make_ring(S, [&] {
                            std::vector<P> v;
                            for (auto& r : rels) v.push_back(p(S, r));
                            return v;
                        }()),
                        {})),
          Fm(adic_filtration(M, maximal_ideal<fp_scalar>(S))) {}
};

std::string thrown_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const engine_error& e) {
        return e.code();
    }
    return "";
}

std::vector<int64_t> first(const std::vector<int64_t>& v, size_t n) {
    return {v.begin(), v.begin() + std::min(n, v.size())};
}

} // namespace

TEST_CASE("terms of the adic filtration") {
    fixture fx({"x", "y"}, {"x^2", "x*y"});
    CHECK(fx.Fm.is_adic());
    CHECK(fx.Fm.head_len() == 0);
    CHECK(fx.Fm.term(0).is_unit_ideal());
    CHECK(fx.Fm.term(1) == I(fx.S, pl(fx.S, {"x", "y"})));
    CHECK(fx.Fm.term(2) == I(fx.S, pl(fx.S, {"x^2", "x*y", "y^2"})));
    CHECK(fx.Fm.term(3) == I(fx.S, pl(fx.S, {"x^2", "x*y", "y^3"})));
}

TEST_CASE("good non-adic heads are accepted, bad ones rejected") {
    fixture fx({"x", "y"}, {"x^3"});
    I m = maximal_ideal<fp_scalar>(fx.S);
    I m2 = ideal_power(m, 2);
    I rel = fx.M.rel;

    F good(fx.M, m, {ideal_sum(m, rel), ideal_sum(m2, rel)});
    CHECK(!good.is_adic());
    CHECK(good.head_len() == 2);
    CHECK(good.term(2) == ideal_sum(m2, rel));
    CHECK(good.term(3) == ideal_sum(ideal_product(m, m2), rel));

    // T_2 not inside T_1
    CHECK(thrown_code([&] {
              F bad(fx.M, m, {ideal_sum(m2, rel), ideal_sum(m, rel)});
          }) == "chain_violation");
    // q*T_1 lands outside T_2
    CHECK(thrown_code([&] {
              F bad(fx.M, m, {ideal_sum(m, rel), ideal_sum(ideal_power(m, 3), rel)});
          }) == "goodness_violation");
    // q must be generated in one degree
    CHECK(thrown_code([&] {
              F bad(fx.M, I(fx.S, pl(fx.S, {"x", "y^2"})), {});
          }) == "q_not_equigenerated");
    // q must be primary to the irrelevant maximal ideal on M
    fixture reg({"x", "y"}, {});
    CHECK(thrown_code([&] {
              F bad(reg.M, I(reg.S, pl(reg.S, {"y"})), {});
          }) == "q_not_mprimary");
}

TEST_CASE("hilbert function values") {
    fixture fx({"x", "y"}, {"x^2", "x*y"});
    std::vector<int64_t> H;
    for (size_t j = 0; j < 6; ++j) H.push_back(hilbert_function(fx.Fm, j));
    CHECK(H == std::vector<int64_t>{1, 2, 1, 1, 1, 1});
    // H¹ is the running sum of H
    CHECK(hilbert_sum_function(fx.Fm, 0) == 1);
    CHECK(hilbert_sum_function(fx.Fm, 3) == 1 + 2 + 1 + 1);
}

TEST_CASE("hilbert data: frozen coefficients for the four reference rings") {
    SUBCASE("embedded point on a line") {
        fixture fx({"x", "y"}, {"x^2", "x*y"});
        auto d = compute_hilbert_data(fx.Fm, 4, 64);
        CHECK(d.dim == 1);
        CHECK(first(d.H, 4) == std::vector<int64_t>{1, 2, 1, 1});
        CHECK(d.h == std::vector<int64_t>{1, 1, -1});
        CHECK(d.e == std::vector<int64_t>{1, -1});
        CHECK(d.e_ext(2) == -1); // C(2,2)*(-1)
    }
    SUBCASE("double line") {
        fixture fx({"x", "y"}, {"x^2"});
        auto d = compute_hilbert_data(fx.Fm, 4, 64);
        CHECK(d.h == std::vector<int64_t>{1, 1});
        CHECK(d.e == std::vector<int64_t>{2, 1});
        CHECK(d.e_ext(2) == 0);
    }
    SUBCASE("triple line") {
        fixture fx({"x", "y"}, {"x^3"});
        auto d = compute_hilbert_data(fx.Fm, 4, 64);
        CHECK(first(d.H, 5) == std::vector<int64_t>{1, 2, 3, 3, 3});
        CHECK(d.h == std::vector<int64_t>{1, 1, 1});
        CHECK(d.e == std::vector<int64_t>{3, 3});
        CHECK(d.e_ext(2) == 1);
        CHECK(d.e_ext(3) == 0);
    }
    SUBCASE("plane with an embedded line") {
        fixture fx({"x", "y", "z"}, {"x^2", "x*y"});
        auto d = compute_hilbert_data(fx.Fm, 4, 64);
        CHECK(d.dim == 2);
        CHECK(first(d.H, 5) == std::vector<int64_t>{1, 3, 4, 5, 6});
        CHECK(d.h == std::vector<int64_t>{1, 1, -1});
        CHECK(d.e == std::vector<int64_t>{1, -1, -1});
    }
}

TEST_CASE("the length polynomial matches the summed function past the numerator") {
    fixture fx({"x", "y", "z"}, {"x^2-y*z"});
    auto d = compute_hilbert_data(fx.Fm, 4, 64);
    CHECK(d.e == std::vector<int64_t>{2, 1, 0});
    int64_t acc = 0;
    for (int64_t j = 0; j <= 8; ++j) {
        acc += hilbert_function(fx.Fm, size_t(j));
        if (j >= int64_t(d.h.size()) - 1) CHECK(hilbert_polynomial1(d, j) == acc);
    }
}

TEST_CASE("certification failures are reported, not guessed") {
    fixture fx({"x", "y"}, {"x^2", "x*y"});
    CHECK(thrown_code([&] { compute_hilbert_data(fx.Fm, 4, 5); }) == "truncation");
    CHECK(thrown_code([&] {
              compute_hilbert_data(fx.Fm, 4, 64, std::nullopt, int64_t(7));
          }) == "e0_mismatch");
}

TEST_CASE("reduction index") {
    SUBCASE("frozen values") {
        fixture r1({"x", "y"}, {"x^2", "x*y"});
        CHECK(find_reduction_index(r1.Fm, I(r1.S, pl(r1.S, {"y"})), 64) == 1);
        fixture r3({"x", "y"}, {"x^3"});
        CHECK(find_reduction_index(r3.Fm, I(r3.S, pl(r3.S, {"y"})), 64) == 2);
        // the whole of q is a reduction of itself from the start
        CHECK(find_reduction_index(r3.Fm, maximal_ideal<fp_scalar>(r3.S), 64) == 0);
    }
    SUBCASE("no reduction ever") {
        fixture r2({"x", "y"}, {"x^2"});
        CHECK(thrown_code([&] {
                  find_reduction_index(r2.Fm, I(r2.S, pl(r2.S, {"x"})), 24);
              }) == "no_reduction");
    }
}

TEST_CASE("v and u values") {
    fixture r1({"x", "y"}, {"x^2", "x*y"});
    I J1(r1.S, pl(r1.S, {"y"}));
    CHECK(v_values(r1.Fm, J1, 5) == std::vector<int64_t>{1, 0, 0, 0, 0, 0});
    auto d1 = compute_hilbert_data(r1.Fm, 4, 64);
    CHECK(first(u_values(d1), 4) == std::vector<int64_t>{0, -1, 0, 0});

    fixture r3({"x", "y"}, {"x^3"});
    I J3(r3.S, pl(r3.S, {"y"}));
    CHECK(v_values(r3.Fm, J3, 5) == std::vector<int64_t>{2, 1, 0, 0, 0, 0});
    auto d3 = compute_hilbert_data(r3.Fm, 4, 64);
    CHECK(first(u_values(d3), 4) == std::vector<int64_t>{2, 1, 0, 0});

    fixture r4({"x", "y", "z"}, {"x^2", "x*y"});
    auto d4 = compute_hilbert_data(r4.Fm, 4, 64);
    CHECK(thrown_code([&] { u_values(d4); }) == "wrong_dimension");
}

TEST_CASE("derived filtrations") {
    fixture r3({"x", "y"}, {"x^3"});
    I J(r3.S, pl(r3.S, {"y"}));

    SUBCASE("J-adic control") {
        auto N = derived_N(r3.Fm, J);
        CHECK(N.is_adic());
        auto dN = compute_hilbert_data(N, 4, 64);
        CHECK(dN.h == std::vector<int64_t>{3});
        CHECK(dN.e == std::vector<int64_t>{3, 0});
    }
    SUBCASE("first-term blowup keeps T1 and continues by J") {
        auto E = derived_E(r3.Fm, J);
        CHECK(E.head_len() == 1);
        CHECK(E.term(1) == r3.Fm.term(1));
        CHECK(E.term(2) == I(r3.S, pl(r3.S, {"x*y", "y^2", "x^3"})));
        auto dE = compute_hilbert_data(E, 4, 64);
        CHECK(dE.h == std::vector<int64_t>{1, 2});
        CHECK(dE.e == std::vector<int64_t>{3, 2});
    }
    SUBCASE("saturation replaces the module") {
        fixture r1({"x", "y"}, {"x^2", "x*y"});
        auto sd = h0_and_saturate(r1.M);
        REQUIRE(sd.w_length == 1);
        auto Fs = saturated_filtration(r1.Fm, sd);
        auto ds = compute_hilbert_data(Fs, 4, 64);
        CHECK(ds.h == std::vector<int64_t>{1});
        CHECK(ds.e == std::vector<int64_t>{1, 0});
    }
    SUBCASE("quotient by an element") {
        fixture r1({"x", "y"}, {"x^2", "x*y"});
        auto Q = quotient_filtration(r1.Fm, p(r1.S, "y"));
        CHECK(Q.dim() == 0);
        auto dq = compute_hilbert_data(Q, 4, 64);
        CHECK(first(dq.H, 3) == std::vector<int64_t>{1, 1, 0});
        CHECK(dq.e == std::vector<int64_t>{2});
        CHECK(thrown_code([&] {
                  quotient_filtration(r1.Fm, p(r1.S, "1"));
              }) == "unit_ideal");
    }
}

TEST_CASE("superficial elements: definition window") {
    fixture r1({"x", "y"}, {"x^2", "x*y"});
    CHECK(detail::stabilization_index(r1.Fm) == 0);

    std::vector<definition_check> log;
    // x is killed by m in degree 5 of the window: (T_6 : x) swallows all of T_4
    CHECK(!detail::superficial_definition(r1.Fm, p(r1.S, "x"), 4, log));
    REQUIRE(log.size() >= 2);
    CHECK(log[0].j == 4);
    CHECK(log[0].pass);
    CHECK(log[1].j == 5);
    CHECK(!log[1].pass);

    log.clear();
    CHECK(detail::superficial_definition(r1.Fm, p(r1.S, "y"), 4, log));
    CHECK(log.size() == 5); // window + 1 checks, j = 4..8
    for (const auto& c : log) CHECK(c.pass);
}

TEST_CASE("superficial search honors the candidate order and reports the winner") {
    fixture r1({"x", "y"}, {"x^2", "x*y"});
    auto w = find_superficial<fp_scalar>({r1.Fm}, 42, 4);
    CHECK(w.element == p(r1.S, "y"));
    CHECK(w.cert.element == "y");
    CHECK(w.cert.attempt == 2); // x is tried first and fails
    CHECK(w.cert.c == 4);
    REQUIRE(w.cert.checks.size() == 1);
    CHECK(w.cert.checks[0].size() == 5);
}

TEST_CASE("superficial search across several filtrations uses the smallest q") {
    // one element must pass the definition window for every filtration at
    // once, drawn from the continuation ideal contained in all the others
    fixture r2({"x", "y"}, {"x^2"});
    F Fm = r2.Fm;
    F Fy = adic_filtration(r2.M, I(r2.S, pl(r2.S, {"y"})));
    auto w = find_superficial<fp_scalar>({Fm, Fy}, 42, 3);
    CHECK(w.element == p(r2.S, "y")); // the pool is (y) ⊆ m
    CHECK(w.cert.checks.size() == 2); // one log per filtration

    // incomparable continuation ideals have no common pool
    CHECK(thrown_code([&] {
              find_superficial<fp_scalar>(
                  {Fy, adic_filtration(r2.M, I(r2.S, pl(r2.S, {"x+y"})))}, 42, 3);
          }) == "incomparable_q");
}

TEST_CASE("superficial sequences walk down to dimension zero") {
    fixture r4({"x", "y", "z"}, {"x^2", "x*y"});
    auto seq = superficial_sequence(r4.Fm, 42, 4, 64);
    REQUIRE(seq.steps.size() == 2);
    CHECK(seq.stages.size() == 3);
    CHECK(seq.stages[0].dim() == 2);
    CHECK(seq.stages[1].dim() == 1);
    CHECK(seq.stages[2].dim() == 0);
    CHECK(seq.J.gens().size() == 2);
    CHECK(seq.reduction_index == 1);
    // first pick is z: x and y both die on the embedded line
    CHECK(seq.steps[0].element == p(r4.S, "z"));

    fixture r3({"x", "y"}, {"x^3"});
    auto seq3 = superficial_sequence(r3.Fm, 42, 4, 64);
    REQUIRE(seq3.steps.size() == 1);
    CHECK(seq3.steps[0].element == p(r3.S, "y"));
    CHECK(seq3.reduction_index == 2);
}

TEST_CASE("filtration terms are shared and memoized") {
    fixture r2({"x", "y"}, {"x^2"});
    F a = r2.Fm;
    F b = a; // same underlying state
    CHECK(a.term(6) == b.term(6));
    // computing through one handle is visible through the other
    CHECK(b.term(9) == ideal_sum(ideal_power(maximal_ideal<fp_scalar>(r2.S), 9), r2.M.rel));
}
