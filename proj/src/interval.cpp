#include "qp/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace qp {

RatInterval::RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
}

RatInterval RatInterval::hull(const Rational& a, const Rational& b) {
    return a <= b ? RatInterval{a, b} : RatInterval{b, a};
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rational p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
    Rational mn = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational mx = std::max(std::max(p1, p2), std::max(p3, p4));
    return {mn, mx};
}

RatInterval RatInterval::operator*(const Rational& c) const {
    if (sign(c) >= 0) return {lo * c, hi * c};
    return {hi * c, lo * c};
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
    if (o.contains_zero()) throw std::domain_error("RatInterval: division by interval containing 0");
    Rational i1 = 1 / o.lo, i2 = 1 / o.hi;
    return *this * RatInterval::hull(i1, i2);
}

RatInterval RatInterval::sqrt_enclosure(unsigned bits) const {
    if (sign(lo) < 0) throw std::domain_error("sqrt_enclosure: negative interval");
    auto root_down = [bits](const Rational& r) {
        // floor(sqrt(r * 4^bits)) / 2^bits, computed on integers
        BigInt scaled = (r.get_num() << (2 * bits)) / r.get_den();
        return make_rational(isqrt(scaled), BigInt(1) << bits);
    };
    auto root_up = [bits](const Rational& r) {
        BigInt scaled;
        BigInt num = r.get_num() << (2 * bits);
        mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
        BigInt s = isqrt(scaled);
        if (s * s < scaled) s += 1;
        return make_rational(s, BigInt(1) << bits);
    };
    return {root_down(lo), root_up(hi)};
}

std::string RatInterval::str() const {
    return "[" + to_string(lo) + ", " + to_string(hi) + "]";
}

RatInterval intersect(const RatInterval& a, const RatInterval& b) {
    auto r = try_intersect(a, b);
    if (!r) throw std::domain_error("intersect: empty intersection");
    return *r;
}

std::optional<RatInterval> try_intersect(const RatInterval& a, const RatInterval& b) {
    Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return RatInterval{lo, hi};
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RatInterval pi_enclosure(unsigned bits) {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239), partial sums with the
    // alternating-series remainder giving the enclosure.
    unsigned work = bits + 16;
    auto atan_inv = [work](unsigned long u) {
        // atan(1/u) = sum (-1)^k / ((2k+1) u^(2k+1)), alternating
        Rational lo(0), hi(0), sum(0);
        Rational term;
        BigInt upow(u);
        BigInt usq = BigInt(u) * BigInt(u);
        unsigned long k = 0;
        while (true) {
            term = make_rational(BigInt(1), (2 * k + 1) * upow);
            if (k % 2 == 0) sum += term; else sum -= term;
            // after adding term k, the true value lies between sum and sum -/+ next term
            Rational next = make_rational(BigInt(1), (2 * k + 3) * upow * usq);
            if (k % 2 == 0) { hi = sum; lo = sum - next; }
            else { lo = sum; hi = sum + next; }
            if (next < make_rational(BigInt(1), BigInt(1) << work)) break;
            upow *= usq;
            ++k;
        }
        return RatInterval{lo, hi};
    };
    RatInterval a5 = atan_inv(5), a239 = atan_inv(239);
    RatInterval pi = a5 * Rational(16) - a239 * Rational(4);
    return pi.round_out(bits + 8);
}

}  // namespace qp
