#ifndef CHERN_LINALG_HPP
#define CHERN_LINALG_HPP

#include <cstdint>
#include <vector>

#include "chern/field.hpp"

namespace chern {

// Row-major dense matrix over GF(p).  The elimination kernels exist in a
// serial reference version and an OpenMP version that must agree exactly
// (same pivot walk; the parallel loop only spreads the row updates).
struct fp_matrix {
    size_t rows = 0, cols = 0;
    uint32_t p = 32003;
    std::vector<uint32_t> a; // rows*cols entries, canonical residues

    uint32_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    uint32_t at(size_t r, size_t c) const { return a[r * cols + c]; }
};

fp_matrix make_fp_matrix(size_t rows, size_t cols, uint32_t p);

size_t fp_rank_serial(fp_matrix m);
size_t fp_rank_omp(fp_matrix m);

// exact rank over the rationals (serial; the oracle's QQ path)
size_t rat_rank(std::vector<std::vector<bigrat>> m);

} // namespace chern

#endif
