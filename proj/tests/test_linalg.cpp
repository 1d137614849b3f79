#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chern/hilbert_series.hpp"
#include "chern/linalg.hpp"
#include "chern/util.hpp"

using namespace chern;

TEST_CASE("rank of known matrices over GF(p)") {
    fp_matrix id = make_fp_matrix(4, 4, 32003);
    for (size_t i = 0; i < 4; ++i) id.at(i, i) = 1;
    CHECK(fp_rank_serial(id) == 4);

    fp_matrix zero = make_fp_matrix(3, 5, 32003);
    CHECK(fp_rank_serial(zero) == 0);

    // dependent rows: r2 = 2*r0 + r1
    fp_matrix dep = make_fp_matrix(3, 3, 32003);
    uint32_t rows[3][3] = {{1, 2, 3}, {4, 5, 6}, {6, 9, 12}};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) dep.at(i, j) = rows[i][j];
    CHECK(fp_rank_serial(dep) == 2);

    // rank can drop mod p: [[1,1],[1,1+p]] is singular mod p
    fp_matrix modp = make_fp_matrix(2, 2, 101);
    modp.at(0, 0) = 1;
    modp.at(0, 1) = 1;
    modp.at(1, 0) = 1;
    modp.at(1, 1) = (1 + 101) % 101;
    CHECK(fp_rank_serial(modp) == 1);
}

TEST_CASE("serial and parallel elimination agree") {
    rng r(mix_seed(3, "linalg-rank"));
    for (int round = 0; round < 20; ++round) {
        size_t rows = 1 + r.below(40), cols = 1 + r.below(40);
        fp_matrix m = make_fp_matrix(rows, cols, 32003);
        for (auto& x : m.a) x = uint32_t(r.below(7) == 0 ? 0 : r.below(32003));
        fp_matrix copy = m;
        CHECK(fp_rank_serial(std::move(m)) == fp_rank_omp(std::move(copy)));
    }
}

TEST_CASE("rational rank is exact") {
    // 4x4 Hilbert matrix: notoriously ill-conditioned in floating point,
    // trivially full-rank in exact arithmetic
    std::vector<std::vector<bigrat>> h(4, std::vector<bigrat>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h[size_t(i)][size_t(j)] = bigrat(1, i + j + 1);
    CHECK(rat_rank(h) == 4);

    std::vector<std::vector<bigrat>> dep = {{bigrat(1), bigrat(2)},
                                            {bigrat(1, 2), bigrat(1)}};
    CHECK(rat_rank(dep) == 1);
}

TEST_CASE("standard monomial counting: known values") {
    // lt ideal (x^2, xy) in k[x,y]: standard monomials 1; x,y; then y^t only
    std::vector<monomial> lts = {monomial({2, 0}), monomial({1, 1})};
    CHECK(count_standard(lts, 2, 0) == 1);
    CHECK(count_standard(lts, 2, 1) == 2);
    CHECK(count_standard(lts, 2, 2) == 1);
    CHECK(count_standard(lts, 2, 7) == 1);

    // no relations: full polynomial ring
    CHECK(count_standard({}, 3, 4) == binomial(6, 2));
}

TEST_CASE("standard monomial counting: serial and parallel kernels agree") {
    rng r(mix_seed(9, "linalg-count"));
    for (int round = 0; round < 15; ++round) {
        size_t n = 2 + r.below(2);
        std::vector<monomial> lts;
        size_t k = 1 + r.below(4);
        for (size_t i = 0; i < k; ++i) {
            std::vector<uint32_t> e(n, 0);
            for (size_t j = 0; j < n; ++j) e[j] = uint32_t(r.below(4));
            if (std::vector<uint32_t>(n, 0) == e) e[0] = 1;
            lts.push_back(monomial(e));
        }
        for (uint32_t t = 0; t <= 10; ++t)
            CHECK(count_standard_serial(lts, n, t) == count_standard_omp(lts, n, t));
    }
}

TEST_CASE("series utilities") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);

    // numerator of k[x,y]/(x^2, xy): 1 - 2z^2 + z^3
    zpoly num = hilbert_numerator({monomial({2, 0}), monomial({1, 1})}, 2);
    CHECK(num == zpoly({1, 0, -2, 1}));

    // dividing by (1-z)^2 leaves a remainder here, so one division works and
    // the second must fail: (1 - 2z^2 + z^3)/(1-z) = 1 + z - z^2
    auto q1 = zpoly_div_one_minus_z(num, 1);
    REQUIRE(q1.has_value());
    CHECK(*q1 == zpoly({1, 1, -1}));
    CHECK(!zpoly_div_one_minus_z(num, 2).has_value());
    CHECK(zpoly_eval1(*q1) == 1); // λ(k[x,y]/(x^2,xy)) along y is 1 per step eventually

    CHECK(zpoly_add({1, 2}, {0, 0, 3}) == zpoly({1, 2, 3}));
    CHECK(zpoly_eval1(zpoly_sub({1, 2}, {1, 2})) == 0);
}

TEST_CASE("artinian detection from leading terms") {
    CHECK(lt_artinian({monomial({2, 0}), monomial({0, 3})}, 2));
    CHECK(lt_artinian_length({monomial({2, 0}), monomial({0, 3})}, 2) == 6);
    CHECK(!lt_artinian({monomial({2, 0}), monomial({1, 1})}, 2));
    CHECK(krull_dim_lt({monomial({2, 0}), monomial({1, 1})}, 2) == 1);
    CHECK(krull_dim_lt({}, 3) == 3);
}
