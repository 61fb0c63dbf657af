#pragma once

#include "qp/interval.hpp"
#include "qp/unipoly.hpp"

#include <string>
#include <vector>

namespace qp {

// A real algebraic number: square-free integer polynomial plus an isolating
// interval containing exactly one of its real roots. Immutable.
struct AlgebraicNumber {
    ZPoly defining_poly;
    RatInterval isolator;

    static AlgebraicNumber from_rational(const Rational& r);
    // Validates: square-free, exactly one root inside.
    static AlgebraicNumber make(const ZPoly& p, const RatInterval& isolator);
    // Trusted constructor for internal pipelines that have already certified
    // the isolation.
    static AlgebraicNumber make_unchecked(ZPoly p, RatInterval isolator);

    double approx() const;
};

// Isolating intervals for all real roots of square-free p inside [range],
// pairwise disjoint, ascending; exact rational roots come back as point
// intervals. Throws if p is not square-free (the message carries the
// repeated-root witness gcd(p, p')).
std::vector<RatInterval> isolate_real_roots(const ZPoly& p, const RatInterval& range);

// As above but with the square-freeness already established by the caller.
std::vector<RatInterval> isolate_real_roots_unchecked(const ZPoly& p, const RatInterval& range);

// Shrink the isolator until its width is <= 2^-bits.
RatInterval refine_root(const AlgebraicNumber& a, unsigned bits);

// Enclosure of {p(t) : t in x}.
RatInterval eval_poly_interval(const ZPoly& p, const RatInterval& x);

// Cauchy bound: all real roots of p lie in [-B, B].
Rational root_bound(const ZPoly& p);

}  // namespace qp
