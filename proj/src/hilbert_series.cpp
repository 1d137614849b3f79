#include "chern/hilbert_series.hpp"

#include <algorithm>

#include "chern/error.hpp"

namespace chern {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) internal_error("integer overflow (add)");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) internal_error("integer overflow (mul)");
    return r;
}

int64_t binomial(int64_t n, int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    int64_t r = 1;
    for (int64_t i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i; // exact: r is binomial(n-k+i, i) after each step
    }
    return r;
}

zpoly zpoly_add(const zpoly& a, const zpoly& b) {
    zpoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
    return r;
}

zpoly zpoly_sub(const zpoly& a, const zpoly& b) {
    zpoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], -b[i]);
    return r;
}

zpoly zpoly_mul_one_minus_pow(const zpoly& a, uint32_t d) {
    zpoly r(a.size() + d, 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < a.size(); ++i) r[i + d] = checked_add(r[i + d], -a[i]);
    return r;
}

int64_t zpoly_eval1(const zpoly& a) {
    int64_t s = 0;
    for (int64_t c : a) s = checked_add(s, c);
    return s;
}

std::optional<zpoly> zpoly_div_one_minus_z(const zpoly& a, size_t n) {
    zpoly cur = a;
    for (size_t step = 0; step < n; ++step) {
        if (zpoly_eval1(cur) != 0) return std::nullopt;
        // c = (1-z)·q  ⟺  q_i = c_0 + ... + c_i
        zpoly q(cur.size() ? cur.size() - 1 : 0, 0);
        int64_t run = 0;
        for (size_t i = 0; i < q.size(); ++i) {
            run = checked_add(run, cur[i]);
            q[i] = run;
        }
        cur = std::move(q);
    }
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
    return cur;
}

namespace {

// keep only the minimal generators of the monomial ideal
void minimalize(std::vector<monomial>& g) {
    std::sort(g.begin(), g.end(), [](const monomial& a, const monomial& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.exps() < b.exps();
    });
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<monomial> out;
    for (const monomial& m : g) {
        bool redundant = false;
        for (const monomial& kept : out)
            if (kept.divides(m)) { redundant = true; break; }
        if (!redundant) out.push_back(m);
    }
    g = std::move(out);
}

bool pairwise_coprime(const std::vector<monomial>& g) {
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j)
            if (!monomial::coprime(g[i], g[j])) return false;
    return true;
}

zpoly hn_rec(std::vector<monomial> g, size_t nvars) {
    minimalize(g);
    if (!g.empty() && g[0].deg() == 0) return zpoly{}; // unit ideal: zero module
    if (g.empty()) return zpoly{1};
    if (pairwise_coprime(g)) {
        // complete intersection of monomials: product of (1 - z^deg)
        zpoly r{1};
        for (const monomial& m : g) r = zpoly_mul_one_minus_pow(r, m.deg());
        return r;
    }
    // pivot on the most shared variable
    std::vector<size_t> freq(nvars, 0);
    for (const monomial& m : g)
        for (size_t v = 0; v < nvars; ++v)
            if (m[v] > 0) ++freq[v];
    size_t pivot = size_t(std::max_element(freq.begin(), freq.end()) - freq.begin());

    std::vector<monomial> plus; // I + (x_pivot)
    plus.push_back(monomial::var(pivot, 1, nvars));
    for (const monomial& m : g)
        if (m[pivot] == 0) plus.push_back(m);

    std::vector<monomial> colon; // I : x_pivot
    for (const monomial& m : g) {
        if (m[pivot] == 0) {
            colon.push_back(m);
        } else {
            std::vector<uint32_t> e = m.exps();
            e[pivot] -= 1;
            colon.push_back(monomial(std::move(e)));
        }
    }

    zpoly a = hn_rec(std::move(plus), nvars);
    zpoly b = hn_rec(std::move(colon), nvars);
    // shift the colon branch by deg(x_pivot) = 1
    zpoly shifted(b.size() + 1, 0);
    for (size_t i = 0; i < b.size(); ++i) shifted[i + 1] = b[i];
    return zpoly_add(a, shifted);
}

bool divisible_by_any(const std::vector<monomial>& lts, const monomial& m) {
    for (const monomial& g : lts)
        if (g.divides(m)) return true;
    return false;
}

// walk all exponent vectors of total degree t, counting standard monomials
int64_t count_rec(const std::vector<monomial>& lts, std::vector<uint32_t>& e,
                  size_t pos, uint32_t remaining) {
    if (pos + 1 == e.size()) {
        e[pos] = remaining;
        int64_t hit = divisible_by_any(lts, monomial(e)) ? 0 : 1;
        e[pos] = 0;
        return hit;
    }
    int64_t total = 0;
    for (uint32_t k = 0; k <= remaining; ++k) {
        e[pos] = k;
        total += count_rec(lts, e, pos + 1, remaining - k);
    }
    e[pos] = 0;
    return total;
}

} // namespace

zpoly hilbert_numerator(std::vector<monomial> gens, size_t nvars) {
    return hn_rec(std::move(gens), nvars);
}

int64_t count_standard_serial(const std::vector<monomial>& lts, size_t nvars, uint32_t t) {
    std::vector<uint32_t> e(nvars, 0);
    return count_rec(lts, e, 0, t);
}

int64_t count_standard_omp(const std::vector<monomial>& lts, size_t nvars, uint32_t t) {
    if (nvars == 1) return count_standard_serial(lts, nvars, t);
    int64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (uint32_t k = 0; k <= t; ++k) {
        std::vector<uint32_t> e(nvars, 0);
        e[0] = k;
        total += count_rec(lts, e, 1, t - k);
    }
    return total;
}

int64_t count_standard(const std::vector<monomial>& lts, size_t nvars, uint32_t t) {
    // rough size of the search space decides whether threads pay off
    double space = 1;
    for (size_t i = 1; i < nvars; ++i) space *= double(t + i) / double(i);
    if (space * double(lts.size() + 1) > 1e6)
        return count_standard_omp(lts, nvars, t);
    return count_standard_serial(lts, nvars, t);
}

bool lt_artinian(const std::vector<monomial>& lts, size_t nvars) {
    for (size_t v = 0; v < nvars; ++v) {
        bool pure = false;
        for (const monomial& m : lts) {
            if (m[v] > 0 && m.deg() == m[v]) { pure = true; break; }
        }
        if (!pure) return false;
    }
    return true;
}

int64_t lt_artinian_length(const std::vector<monomial>& lts, size_t nvars) {
    std::vector<uint32_t> box(nvars, 0);
    for (size_t v = 0; v < nvars; ++v)
        for (const monomial& m : lts)
            if (m[v] > 0 && m.deg() == m[v]) {
                box[v] = box[v] ? std::min(box[v], m[v]) : m[v];
            }
    // every standard monomial lives strictly inside the pure-power box
    std::vector<uint32_t> e(nvars, 0);
    int64_t count = 0;
    while (true) {
        if (!divisible_by_any(lts, monomial(e))) ++count;
        size_t v = 0;
        while (v < nvars) {
            if (++e[v] < box[v]) break;
            e[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    return count;
}

int krull_dim_lt(const std::vector<monomial>& lts, size_t nvars) {
    for (const monomial& m : lts)
        if (m.deg() == 0) return -1; // unit ideal
    if (nvars > 24) internal_error("too many variables for subset walk");
    int best = -1;
    for (uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        bool independent = true;
        for (const monomial& m : lts) {
            bool inside = true;
            for (size_t v = 0; v < nvars && inside; ++v)
                if (m[v] > 0 && !(mask & (1u << v))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

} // namespace chern
