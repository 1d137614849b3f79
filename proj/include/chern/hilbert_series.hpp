#ifndef CHERN_HILBERT_SERIES_HPP
#define CHERN_HILBERT_SERIES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "chern/monomial.hpp"

namespace chern {

// dense univariate polynomial over ZZ, coefficient of z^i at index i
using zpoly = std::vector<int64_t>;

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
int64_t binomial(int64_t n, int64_t k);

zpoly zpoly_add(const zpoly& a, const zpoly& b);
zpoly zpoly_sub(const zpoly& a, const zpoly& b);
// multiply by (1 - z^d)
zpoly zpoly_mul_one_minus_pow(const zpoly& a, uint32_t d);
int64_t zpoly_eval1(const zpoly& a);

// Numerator N(z) of the Hilbert series N(z)/(1-z)^n of S/I for a monomial
// ideal I, by the pivot recursion N(I) = N(I + (x_v)) + z·N(I : x_v).
zpoly hilbert_numerator(std::vector<monomial> gens, size_t nvars);

// divide by (1-z)^n; empty result means the division is inexact, i.e. the
// series does not terminate (infinite length)
std::optional<zpoly> zpoly_div_one_minus_z(const zpoly& a, size_t n);

// number of degree-t monomials in n variables outside the monomial ideal
int64_t count_standard_serial(const std::vector<monomial>& lts, size_t nvars, uint32_t t);
int64_t count_standard_omp(const std::vector<monomial>& lts, size_t nvars, uint32_t t);
int64_t count_standard(const std::vector<monomial>& lts, size_t nvars, uint32_t t);

// true iff every variable has a pure power among the leading terms, which is
// exactly when S/I has finite length
bool lt_artinian(const std::vector<monomial>& lts, size_t nvars);

// total number of standard monomials; caller guarantees lt_artinian
int64_t lt_artinian_length(const std::vector<monomial>& lts, size_t nvars);

// largest subset of variables supporting no leading monomial = dim S/I;
// returns -1 for the unit ideal
int krull_dim_lt(const std::vector<monomial>& lts, size_t nvars);

} // namespace chern

#endif
