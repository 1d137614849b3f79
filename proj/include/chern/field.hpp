#ifndef CHERN_FIELD_HPP
#define CHERN_FIELD_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "chern/error.hpp"

namespace chern {

using bigint   = boost::multiprecision::cpp_int;
using bigrat   = boost::multiprecision::cpp_rational;

enum class field_kind { prime, rationals };

struct field_spec {
    field_kind kind = field_kind::prime;
    uint32_t p = 32003; // ignored for rationals

    bool operator==(const field_spec&) const = default;

    std::string str() const {
        if (kind == field_kind::rationals) return "QQ";
        return "GF(" + std::to_string(p) + ")";
    }
};

inline void validate_field(const field_spec& f) {
    if (f.kind == field_kind::rationals) return;
    uint64_t p = f.p;
    if (p < 3 || p >= (uint64_t(1) << 31) || p % 2 == 0)
        input_error("bad_characteristic", "characteristic must be an odd prime below 2^31");
    for (uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            input_error("bad_characteristic", "characteristic " + std::to_string(p) + " is not prime");
}

// ---------------------------------------------------------------------------
// prime field element; the modulus rides along so values are self-contained
// ---------------------------------------------------------------------------
class fp_scalar {
public:
    fp_scalar() : v_(0), p_(32003) {}
    fp_scalar(int64_t v, uint32_t p) : p_(p) {
        int64_t r = v % int64_t(p);
        if (r < 0) r += p;
        v_ = uint32_t(r);
    }

    static fp_scalar zero(const field_spec& f) { return fp_scalar(0, f.p); }
    static fp_scalar one(const field_spec& f) { return fp_scalar(1, f.p); }
    static fp_scalar from_int(int64_t v, const field_spec& f) { return fp_scalar(v, f.p); }
    static fp_scalar from_ratio(int64_t num, int64_t den, const field_spec& f) {
        fp_scalar d(den, f.p);
        if (d.is_zero())
            input_error("bad_coefficient", "denominator is divisible by the characteristic");
        return fp_scalar(num, f.p) * d.inv();
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    uint32_t value() const { return v_; }
    uint32_t modulus() const { return p_; }

    fp_scalar operator+(const fp_scalar& o) const {
        uint64_t s = uint64_t(v_) + o.v_;
        if (s >= p_) s -= p_;
        return raw(uint32_t(s), p_);
    }
    fp_scalar operator-(const fp_scalar& o) const {
        uint64_t s = uint64_t(v_) + p_ - o.v_;
        if (s >= p_) s -= p_;
        return raw(uint32_t(s), p_);
    }
    fp_scalar operator*(const fp_scalar& o) const {
        return raw(uint32_t((uint64_t(v_) * o.v_) % p_), p_);
    }
    fp_scalar operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    fp_scalar inv() const {
        if (v_ == 0) internal_error("inverse of zero");
        // extended euclid on (v, p)
        int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            int64_t q = a / b;
            int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return fp_scalar(x0, p_);
    }
    fp_scalar operator/(const fp_scalar& o) const { return *this * o.inv(); }

    bool operator==(const fp_scalar& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const fp_scalar& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }
    // canonical text never uses a sign over a prime field
    bool print_negative() const { return false; }
    std::string abs_str() const { return str(); }

private:
    static fp_scalar raw(uint32_t v, uint32_t p) { fp_scalar s; s.v_ = v; s.p_ = p; return s; }
    uint32_t v_;
    uint32_t p_;
};

// ---------------------------------------------------------------------------
// exact rational element (arbitrary precision)
// ---------------------------------------------------------------------------
class rat_scalar {
public:
    rat_scalar() : v_(0) {}
    explicit rat_scalar(bigrat v) : v_(std::move(v)) {}

    static rat_scalar zero(const field_spec&) { return rat_scalar(bigrat(0)); }
    static rat_scalar one(const field_spec&) { return rat_scalar(bigrat(1)); }
    static rat_scalar from_int(int64_t v, const field_spec&) { return rat_scalar(bigrat(v)); }
    static rat_scalar from_ratio(int64_t num, int64_t den, const field_spec&) {
        if (den == 0)
            input_error("bad_coefficient", "zero denominator");
        return rat_scalar(bigrat(bigint(num), bigint(den)));
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    const bigrat& value() const { return v_; }

    rat_scalar operator+(const rat_scalar& o) const { return rat_scalar(v_ + o.v_); }
    rat_scalar operator-(const rat_scalar& o) const { return rat_scalar(v_ - o.v_); }
    rat_scalar operator*(const rat_scalar& o) const { return rat_scalar(v_ * o.v_); }
    rat_scalar operator-() const { return rat_scalar(-v_); }
    rat_scalar inv() const {
        if (is_zero()) internal_error("inverse of zero");
        return rat_scalar(1 / v_);
    }
    rat_scalar operator/(const rat_scalar& o) const { return *this * o.inv(); }

    bool operator==(const rat_scalar& o) const { return v_ == o.v_; }
    bool operator!=(const rat_scalar& o) const { return v_ != o.v_; }

    std::string str() const { return v_.str(); }
    bool print_negative() const { return v_ < 0; }
    std::string abs_str() const { return v_ < 0 ? bigrat(-v_).str() : v_.str(); }

private:
    bigrat v_;
};

} // namespace chern

#endif
