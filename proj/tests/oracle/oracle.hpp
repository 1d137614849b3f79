#ifndef CHERN_TEST_ORACLE_HPP
#define CHERN_TEST_ORACLE_HPP

// Reference answers computed by plain degreewise linear algebra on the raw
// generators: no division, no basis completion, nothing shared with the
// engine's normal-form machinery.  Deliberately slow and simple.

#include <map>
#include <optional>

#include "chern/linalg.hpp"
#include "chern/polynomial.hpp"

namespace chern::oracle {

// all exponent vectors of total degree t in n variables, lexicographic
std::vector<std::vector<uint32_t>> exponents_of_degree(size_t n, uint32_t t);

namespace detail {

inline int64_t rank_of(const ring_ptr& R, std::vector<std::vector<fp_scalar>> rows,
                       size_t cols) {
    fp_matrix m = make_fp_matrix(rows.size(), cols, R->field.p);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c].value();
    return int64_t(fp_rank_serial(m));
}

inline int64_t rank_of(const ring_ptr&, std::vector<std::vector<rat_scalar>> rows,
                       size_t cols) {
    std::vector<std::vector<bigrat>> m;
    for (auto& r : rows) {
        std::vector<bigrat> row(cols);
        for (size_t c = 0; c < cols; ++c) row[c] = r[c].value();
        m.push_back(std::move(row));
    }
    return int64_t(rat_rank(m));
}

// rows spanning the degree-t piece of the ideal, over the monomial basis
template <class K>
std::vector<std::vector<K>> span_rows(const ring_ptr& R, const std::vector<poly<K>>& gens,
                                      uint32_t t,
                                      const std::map<std::vector<uint32_t>, size_t>& index) {
    std::vector<std::vector<K>> rows;
    for (const poly<K>& g : gens) {
        if (g.is_zero()) continue;
        uint32_t d = uint32_t(g.degree());
        if (d > t) continue;
        for (const auto& shift : exponents_of_degree(R->nvars(), t - d)) {
            monomial m(shift);
            std::vector<K> row(index.size(), K::zero(R->field));
            for (const auto& term : g.terms()) {
                monomial prod = term.m * m;
                row[index.at(prod.exps())] = term.c;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

template <class K>
std::map<std::vector<uint32_t>, size_t> basis_index(const ring_ptr& R, uint32_t t) {
    std::map<std::vector<uint32_t>, size_t> index;
    for (auto& e : exponents_of_degree(R->nvars(), t)) index.emplace(std::move(e), index.size());
    return index;
}

} // namespace detail

// dim_k of (S/I)_t for homogeneous generators
template <class K>
int64_t piece_dim(const ring_ptr& R, const std::vector<poly<K>>& gens, uint32_t t) {
    auto index = detail::basis_index<K>(R, t);
    auto rows = detail::span_rows(R, gens, t, index);
    return int64_t(index.size()) - detail::rank_of(R, std::move(rows), index.size());
}

// homogeneous membership: f ∈ (gens) iff adding f to the span changes nothing
template <class K>
bool member_homogeneous(const ring_ptr& R, const std::vector<poly<K>>& gens,
                        const poly<K>& f) {
    if (f.is_zero()) return true;
    uint32_t t = uint32_t(f.degree());
    auto index = detail::basis_index<K>(R, t);
    auto rows = detail::span_rows(R, gens, t, index);
    int64_t base = detail::rank_of(R, rows, index.size());
    std::vector<K> row(index.size(), K::zero(R->field));
    for (const auto& term : f.terms()) row[index.at(term.m.exps())] = term.c;
    rows.push_back(std::move(row));
    return detail::rank_of(R, std::move(rows), index.size()) == base;
}

// any polynomial: split into homogeneous slices first
template <class K>
bool member(const ring_ptr& R, const std::vector<poly<K>>& gens, const poly<K>& f) {
    std::map<uint32_t, poly<K>> slices;
    for (const auto& term : f.terms()) {
        auto it = slices.try_emplace(term.m.deg(), poly<K>::zero(R)).first;
        it->second = it->second + poly<K>::from_monomial(R, term.m) *
                                      poly<K>::constant(R, term.c);
    }
    for (const auto& [deg, slice] : slices)
        if (!member_homogeneous(R, gens, slice)) return false;
    return true;
}

// total length of S/I when the piece dimensions hit zero by tmax
template <class K>
std::optional<int64_t> length_upto(const ring_ptr& R, const std::vector<poly<K>>& gens,
                                   uint32_t tmax) {
    int64_t total = 0;
    for (uint32_t t = 0; t <= tmax; ++t) {
        int64_t d = piece_dim(R, gens, t);
        if (t == tmax && d != 0) return std::nullopt;
        total += d;
    }
    return total;
}

} // namespace chern::oracle

#endif
