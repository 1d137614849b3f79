#include "chern/linalg.hpp"

namespace chern {

fp_matrix make_fp_matrix(size_t rows, size_t cols, uint32_t p) {
    fp_matrix m;
    m.rows = rows;
    m.cols = cols;
    m.p = p;
    m.a.assign(rows * cols, 0);
    return m;
}

namespace {

uint32_t fp_inv(uint32_t v, uint32_t p) {
    int64_t a = v, b = p, x0 = 1, x1 = 0;
    while (b != 0) {
        int64_t q = a / b;
        int64_t t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    int64_t r = x0 % int64_t(p);
    if (r < 0) r += p;
    return uint32_t(r);
}

// eliminate column `col` from row r using the (already scaled) pivot row
inline void eliminate_row(fp_matrix& m, size_t r, size_t piv, size_t col) {
    uint64_t f = m.at(r, col);
    if (f == 0) return;
    uint64_t p = m.p;
    uint64_t neg = p - f;
    for (size_t c = col; c < m.cols; ++c) {
        uint64_t v = m.at(r, c) + (neg * m.at(piv, c)) % p;
        m.at(r, c) = uint32_t(v % p);
    }
}

template <bool Parallel>
size_t fp_rank_impl(fp_matrix m) {
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (size_t c = col; c < m.cols; ++c)
                std::swap(m.at(piv, c), m.at(rank, c));
        uint64_t inv = fp_inv(m.at(rank, col), m.p);
        for (size_t c = col; c < m.cols; ++c)
            m.at(rank, c) = uint32_t(m.at(rank, c) * inv % m.p);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
            for (size_t r = rank + 1; r < m.rows; ++r) eliminate_row(m, r, rank, col);
        } else {
            for (size_t r = rank + 1; r < m.rows; ++r) eliminate_row(m, r, rank, col);
        }
        ++rank;
    }
    return rank;
}

} // namespace

size_t fp_rank_serial(fp_matrix m) { return fp_rank_impl<false>(std::move(m)); }
size_t fp_rank_omp(fp_matrix m) { return fp_rank_impl<true>(std::move(m)); }

size_t rat_rank(std::vector<std::vector<bigrat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        bigrat d = m[rank][col];
        for (size_t c = col; c < cols; ++c) m[rank][c] /= d;
        for (size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            bigrat f = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace chern
