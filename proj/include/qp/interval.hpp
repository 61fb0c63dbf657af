#pragma once

#include "qp/numeric.hpp"

#include <optional>
#include <string>

namespace qp {

// Closed rational interval [lo, hi]. All operations are conservative: the
// exact value of an expression over points of the inputs is always contained
// in the result. Endpoint arithmetic is exact, so binary ops introduce no
// rounding at all; round_out exists to keep endpoint sizes bounded in long
// computations.
struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    explicit RatInterval(const Rational& point) : lo(point), hi(point) {}
    RatInterval(Rational l, Rational h);

    static RatInterval hull(const Rational& a, const Rational& b);

    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    bool contains(const RatInterval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }
    bool strictly_contains(const RatInterval& other) const {
        return lo < other.lo && other.hi < hi;
    }
    bool intersects(const RatInterval& other) const {
        return !(hi < other.lo || other.hi < lo);
    }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }

    // Sign of every point in the interval: +1, -1, or 0 when the interval
    // straddles (or touches) zero.
    int definite_sign() const {
        if (sign(lo) > 0) return 1;
        if (sign(hi) < 0) return -1;
        return 0;
    }

    RatInterval operator-() const { return {-hi, -lo}; }
    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator/(const RatInterval& o) const;  // throws if o contains 0

    RatInterval operator+(const Rational& c) const { return {lo + c, hi + c}; }
    RatInterval operator-(const Rational& c) const { return {lo - c, hi - c}; }
    RatInterval operator*(const Rational& c) const;

    // Enclosure of the square root (requires lo >= 0), to ~bits of precision.
    RatInterval sqrt_enclosure(unsigned bits) const;

    // Widen endpoints outward to dyadics with denominator 2^bits.
    RatInterval round_out(unsigned bits) const {
        return {dyadic_round_down(lo, bits), dyadic_round_up(hi, bits)};
    }

    std::string str() const;
};

RatInterval intersect(const RatInterval& a, const RatInterval& b);  // throws if empty
std::optional<RatInterval> try_intersect(const RatInterval& a, const RatInterval& b);
RatInterval hull(const RatInterval& a, const RatInterval& b);

// Enclosure of pi, accurate to at least `bits` bits.
RatInterval pi_enclosure(unsigned bits);

}  // namespace qp
