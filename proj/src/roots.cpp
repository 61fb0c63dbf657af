#include "qp/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace qp {

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
    ZPoly p(std::vector<BigInt>{-r.get_num(), r.get_den()});
    return {p, RatInterval(r)};
}

AlgebraicNumber AlgebraicNumber::make(const ZPoly& p, const RatInterval& isolator) {
    auto roots = isolate_real_roots(p, isolator);
    if (roots.size() != 1)
        throw std::invalid_argument("AlgebraicNumber: isolator contains " +
                                    std::to_string(roots.size()) + " roots, expected 1");
    return {p, isolator};
}

AlgebraicNumber AlgebraicNumber::make_unchecked(ZPoly p, RatInterval isolator) {
    return {std::move(p), std::move(isolator)};
}

double AlgebraicNumber::approx() const { return to_double(isolator.mid()); }

Rational root_bound(const ZPoly& p) {
    if (p.degree() < 1) return Rational(0);
    // 1 + max |c_i| / |lc|
    BigInt m(0);
    for (size_t i = 0; i + 1 < p.c.size(); ++i) {
        BigInt a = abs(p.c[i]);
        if (a > m) m = a;
    }
    return Rational(1) + make_rational(m, abs(p.lc()));
}

namespace {

int sign_variations(const ZPoly& p) {
    int v = 0, last = 0;
    for (const auto& x : p.c) {
        int s = sign(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Descartes bound for the number of roots of q in the open interval (0,1):
// sign variations of (1+x)^n q(1/(1+x)).
int variation_bound_01(const ZPoly& q) {
    return sign_variations(taylor_shift_1(reverse_poly(q)));
}

struct Vca {
    // q0 is square-free with no roots at 0 or 1; intervals reported in t-space within (0,1).
    std::vector<RatInterval> out;
    std::vector<Rational> exact;  // exact dyadic roots found at split points

    void run(const ZPoly& q, const Rational& a, const Rational& b) {
        int v = variation_bound_01(q);
        if (v == 0) return;
        if (v == 1) {
            out.push_back(RatInterval{a, b});
            return;
        }
        Rational m = (a + b) / 2;
        ZPoly left = primitive_part(scale_pow2(q, -1));  // 2^n q(x/2)
        ZPoly right = taylor_shift_1(left);              // maps (1/2,1) to (0,1)
        if (right.coeff(0) == 0) {
            exact.push_back(m);
            right = divexact(right, ZPoly(std::vector<BigInt>{BigInt(0), BigInt(1)}));
            left = divexact(left, ZPoly(std::vector<BigInt>{BigInt(-1), BigInt(1)}));
        }
        run(left, a, m);
        run(primitive_part(right), m, b);
    }
};

}  // namespace

std::vector<RatInterval> isolate_real_roots_unchecked(const ZPoly& p, const RatInterval& range) {
    std::vector<RatInterval> result;
    if (p.degree() < 1) return result;
    Rational lo = range.lo, hi = range.hi;
    if (lo > hi) return result;

    std::vector<Rational> endpoint_roots;
    if (sign_at(p, lo) == 0) endpoint_roots.push_back(lo);
    if (hi != lo && sign_at(p, hi) == 0) endpoint_roots.push_back(hi);
    if (lo == hi) {
        for (const auto& r : endpoint_roots) result.push_back(RatInterval(r));
        return result;
    }

    // map [lo,hi] to [0,1] and strip endpoint roots
    ZPoly q = compose_affine(p, lo, hi - lo);
    while (q.coeff(0) == 0) q = divexact(q, ZPoly(std::vector<BigInt>{BigInt(0), BigInt(1)}));
    {
        ZPoly at1(std::vector<BigInt>{BigInt(-1), BigInt(1)});
        ZPoly qq;
        while (try_divexact(q, at1, qq)) q = qq;
    }

    Vca vca;
    vca.run(primitive_part(q), Rational(0), Rational(1));

    // collect: exact roots (endpoints + split points) and isolating intervals, in t-space
    std::vector<std::pair<Rational, Rational>> intervals;  // (lo, hi), points have lo==hi
    for (const auto& t : vca.exact) intervals.push_back({t, t});
    for (const auto& iv : vca.out) intervals.push_back({iv.lo, iv.hi});
    std::sort(intervals.begin(), intervals.end());

    Rational span = hi - lo;
    std::vector<RatInterval> mapped;
    for (const auto& [tl, th] : intervals)
        mapped.push_back(RatInterval{lo + tl * span, lo + th * span});
    for (const auto& r : endpoint_roots) {
        RatInterval pt(r);
        auto it = std::lower_bound(mapped.begin(), mapped.end(), r,
                                   [](const RatInterval& iv, const Rational& v) { return iv.lo < v; });
        mapped.insert(it, pt);
    }
    return mapped;
}

std::vector<RatInterval> isolate_real_roots(const ZPoly& p, const RatInterval& range) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    ZPoly g = gcd_poly(p, derivative(p));
    if (g.degree() > 0)
        throw std::invalid_argument("isolate_real_roots: input not square-free, repeated-root witness gcd(p,p') = " +
                                    poly_str(g));
    return isolate_real_roots_unchecked(p, range);
}

RatInterval refine_root(const AlgebraicNumber& a, unsigned bits) {
    RatInterval iv = a.isolator;
    Rational target = make_rational(BigInt(1), BigInt(1) << bits);
    if (iv.is_point()) return iv;
    const ZPoly& p = a.defining_poly;
    int slo = sign_at(p, iv.lo);
    int shi = sign_at(p, iv.hi);
    if (slo == 0) return RatInterval(iv.lo);
    if (shi == 0) return RatInterval(iv.hi);
    if (slo == shi)
        throw std::logic_error("refine_root: endpoints have equal sign; invalid isolator");
    while (iv.width() > target) {
        Rational m = iv.mid();
        int sm = sign_at(p, m);
        if (sm == 0) return RatInterval(m);
        if (sm == slo) iv = RatInterval{m, iv.hi};
        else iv = RatInterval{iv.lo, m};
    }
    return iv;
}

RatInterval eval_poly_interval(const ZPoly& p, const RatInterval& x) {
    return eval_interval(p, x);
}

}  // namespace qp
