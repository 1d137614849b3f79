#ifndef CHERN_POLYNOMIAL_HPP
#define CHERN_POLYNOMIAL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chern/ring.hpp"

namespace chern {

// Sparse multivariate polynomial over the scalar K (fp_scalar or rat_scalar).
// Terms are kept sorted strictly descending in the ring's term order and never
// contain a zero coefficient; every constructor and operation restores that
// normal form, so equality is plain term-list equality.
template <class K>
class poly {
public:
    struct term {
        monomial m;
        K c;
    };

    poly() = default;
    explicit poly(ring_ptr r) : ring_(std::move(r)) {}
    poly(ring_ptr r, std::vector<term> ts, bool needs_normalize = true)
        : ring_(std::move(r)), t_(std::move(ts)) {
        if (needs_normalize) normalize();
    }

    static poly zero(const ring_ptr& r) { return poly(r); }
    static poly constant(const ring_ptr& r, K c) {
        poly f(r);
        if (!c.is_zero()) f.t_.push_back({monomial(r->nvars()), std::move(c)});
        return f;
    }
    static poly from_monomial(const ring_ptr& r, monomial m) {
        poly f(r);
        f.t_.push_back({std::move(m), K::one(r->field)});
        return f;
    }
    static poly variable(const ring_ptr& r, size_t i) {
        return from_monomial(r, monomial::var(i, 1, r->nvars()));
    }

    const ring_ptr& ring() const { return ring_; }
    const std::vector<term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    const monomial& lm() const { return t_.front().m; } // caller checks nonzero
    const K& lc() const { return t_.front().c; }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }

    int64_t degree() const {
        int64_t d = -1;
        for (const term& t : t_) d = std::max<int64_t>(d, t.m.deg());
        return d;
    }

    bool is_homogeneous() const {
        for (const term& t : t_)
            if (t.m.deg() != t_[0].m.deg()) return false;
        return true;
    }

    bool operator==(const poly& o) const {
        if (t_.size() != o.t_.size()) return false;
        for (size_t i = 0; i < t_.size(); ++i)
            if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
        return true;
    }
    bool operator!=(const poly& o) const { return !(*this == o); }

    poly operator-() const {
        poly r(*this);
        for (term& t : r.t_) t.c = -t.c;
        return r;
    }

    poly operator+(const poly& o) const {
        require_same_ring(ring_, o.ring_);
        poly r(ring_);
        r.t_.reserve(t_.size() + o.t_.size());
        size_t i = 0, j = 0;
        while (i < t_.size() && j < o.t_.size()) {
            int c = cmp_mono(ring_->order, t_[i].m, o.t_[j].m);
            if (c > 0) {
                r.t_.push_back(t_[i++]);
            } else if (c < 0) {
                r.t_.push_back(o.t_[j++]);
            } else {
                K s = t_[i].c + o.t_[j].c;
                if (!s.is_zero()) r.t_.push_back({t_[i].m, std::move(s)});
                ++i; ++j;
            }
        }
        for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
        for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
        return r;
    }

    poly operator-(const poly& o) const { return *this + (-o); }

    poly scaled(const K& c) const {
        if (c.is_zero()) return poly(ring_);
        poly r(*this);
        for (term& t : r.t_) t.c = t.c * c;
        return r;
    }

    // this * (c * m)
    poly term_mul(const K& c, const monomial& m) const {
        if (c.is_zero()) return poly(ring_);
        poly r(ring_);
        r.t_.reserve(t_.size());
        for (const term& t : t_) r.t_.push_back({t.m * m, t.c * c});
        return r;
    }

    poly operator*(const poly& o) const {
        require_same_ring(ring_, o.ring_);
        poly acc(ring_);
        for (const term& t : o.t_) acc = acc + term_mul(t.c, t.m);
        return acc;
    }

    // scale so the canonical representative is unique: monic over a prime
    // field; over the rationals clear denominators, divide out the content and
    // make the leading coefficient positive (primitive integer form)
    poly canonical_scaled() const;

    poly monic() const {
        if (is_zero()) return *this;
        return scaled(lc().inv());
    }

    std::string str() const;

private:
    void normalize() {
        std::sort(t_.begin(), t_.end(), [&](const term& a, const term& b) {
            return cmp_mono(ring_->order, a.m, b.m) > 0;
        });
        std::vector<term> out;
        out.reserve(t_.size());
        for (term& t : t_) {
            if (!out.empty() && out.back().m == t.m) {
                out.back().c = out.back().c + t.c;
                if (out.back().c.is_zero()) out.pop_back();
            } else if (!t.c.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        t_ = std::move(out);
    }

    ring_ptr ring_;
    std::vector<term> t_;
};

template <>
inline poly<fp_scalar> poly<fp_scalar>::canonical_scaled() const {
    return monic();
}

template <>
inline poly<rat_scalar> poly<rat_scalar>::canonical_scaled() const {
    if (is_zero()) return *this;
    bigint num_gcd = 0, den_lcm = 1;
    for (const term& t : t_) {
        const bigrat& q = t.c.value();
        num_gcd = boost::multiprecision::gcd(num_gcd, bigint(boost::multiprecision::numerator(q)));
        den_lcm = boost::multiprecision::lcm(den_lcm, bigint(boost::multiprecision::denominator(q)));
    }
    bigrat content(num_gcd, den_lcm);
    if (t_[0].c.value() < 0) content = -content;
    return scaled(rat_scalar(content).inv());
}

template <class K>
std::string poly<K>::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < t_.size(); ++i) {
        const term& t = t_[i];
        bool neg = t.c.print_negative();
        if (i == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string cs = t.c.abs_str();
        bool coeff_one = (cs == "1");
        bool printed = false;
        if (!coeff_one || t.m.is_one()) {
            out += cs;
            printed = true;
        }
        for (size_t v = 0; v < t.m.nvars(); ++v) {
            if (t.m[v] == 0) continue;
            if (printed) out += "*";
            out += ring_->vars[v];
            if (t.m[v] > 1) out += "^" + std::to_string(t.m[v]);
            printed = true;
        }
    }
    return out;
}

} // namespace chern

#endif
