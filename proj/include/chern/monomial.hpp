#ifndef CHERN_MONOMIAL_HPP
#define CHERN_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "chern/error.hpp"

namespace chern {

// Exponent vectors are 32-bit; any operation that would overflow a single
// exponent or the total degree is a hard error, not a wrap.
class monomial {
public:
    monomial() = default;
    explicit monomial(size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit monomial(std::vector<uint32_t> e) : e_(std::move(e)) {
        uint64_t d = 0;
        for (uint32_t x : e_) d += x;
        check_degree(d);
        deg_ = uint32_t(d);
    }

    size_t nvars() const { return e_.size(); }
    uint32_t deg() const { return deg_; }
    uint32_t operator[](size_t i) const { return e_[i]; }
    const std::vector<uint32_t>& exps() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    bool operator==(const monomial& o) const { return e_ == o.e_; }
    bool operator!=(const monomial& o) const { return e_ != o.e_; }

    monomial operator*(const monomial& o) const {
        monomial r(*this);
        uint64_t d = uint64_t(deg_) + o.deg_;
        check_degree(d);
        for (size_t i = 0; i < e_.size(); ++i) {
            uint64_t s = uint64_t(e_[i]) + o.e_[i];
            if (s > 0xffffffffull) internal_error("exponent overflow");
            r.e_[i] = uint32_t(s);
        }
        r.deg_ = uint32_t(d);
        return r;
    }

    bool divides(const monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // exact quotient; caller guarantees divisibility
    monomial operator/(const monomial& o) const {
        monomial r(*this);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        r.deg_ = deg_ - o.deg_;
        return r;
    }

    static monomial lcm(const monomial& a, const monomial& b) {
        monomial r(a);
        uint64_t d = 0;
        for (size_t i = 0; i < a.e_.size(); ++i) {
            r.e_[i] = std::max(a.e_[i], b.e_[i]);
            d += r.e_[i];
        }
        check_degree(d);
        r.deg_ = uint32_t(d);
        return r;
    }

    static bool coprime(const monomial& a, const monomial& b) {
        for (size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    static monomial var(size_t i, uint32_t exp, size_t nvars) {
        monomial m(nvars);
        m.e_[i] = exp;
        m.deg_ = exp;
        return m;
    }

private:
    static void check_degree(uint64_t d) {
        if (d > 0x7fffffffull) internal_error("monomial degree overflow");
    }
    std::vector<uint32_t> e_;
    uint32_t deg_ = 0;
};

// Degree-reverse-lexicographic order with x1 > x2 > ... > xn:
// higher total degree wins; on a tie the *last* variable where the exponents
// differ decides, and the monomial with the *smaller* exponent there is larger.
inline int cmp_grevlex(const monomial& a, const monomial& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

enum class order_kind {
    grevlex,
    // two-block order eliminating variable 0: compare the exponent of the
    // first variable, then grevlex on the remaining block
    elim_first,
};

inline int cmp_mono(order_kind ord, const monomial& a, const monomial& b) {
    if (ord == order_kind::grevlex) return cmp_grevlex(a, b);
    if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
    uint32_t da = a.deg() - a[0], db = b.deg() - b[0];
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.nvars(); i-- > 1;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

} // namespace chern

#endif
