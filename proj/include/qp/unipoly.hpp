#pragma once

#include "qp/interval.hpp"
#include "qp/numeric.hpp"

#include <vector>

namespace qp {

// Dense univariate polynomial, coefficient of x^i at c[i]. Zero polynomial
// has empty coefficient vector; otherwise the top coefficient is nonzero.
template <typename C>
struct Poly {
    std::vector<C> c;

    Poly() = default;
    explicit Poly(std::vector<C> coeffs) : c(std::move(coeffs)) { normalize(); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const C& lc() const { return c.back(); }
    C coeff(size_t i) const { return i < c.size() ? c[i] : C(0); }

    bool operator==(const Poly& o) const { return c == o.c; }
};

using ZPoly = Poly<BigInt>;
using QPoly = Poly<Rational>;

template <typename C>
Poly<C> operator+(const Poly<C>& a, const Poly<C>& b) {
    std::vector<C> r(std::max(a.c.size(), b.c.size()), C(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return Poly<C>(std::move(r));
}

template <typename C>
Poly<C> operator-(const Poly<C>& a, const Poly<C>& b) {
    std::vector<C> r(std::max(a.c.size(), b.c.size()), C(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return Poly<C>(std::move(r));
}

template <typename C>
Poly<C> operator-(const Poly<C>& a) {
    std::vector<C> r = a.c;
    for (auto& x : r) x = -x;
    Poly<C> p;
    p.c = std::move(r);
    return p;
}

template <typename C>
Poly<C> operator*(const Poly<C>& a, const C& s) {
    if (s == 0) return Poly<C>{};
    std::vector<C> r = a.c;
    for (auto& x : r) x *= s;
    return Poly<C>(std::move(r));
}

// Naive convolution; ZPoly multiplication below switches to Kronecker
// packing when the operands are large.
template <typename C>
Poly<C> mul_naive(const Poly<C>& a, const Poly<C>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<C>{};
    std::vector<C> r(a.c.size() + b.c.size() - 1, C(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return Poly<C>(std::move(r));
}

ZPoly kronecker_mul(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);

template <typename C>
Poly<C> shift_up(const Poly<C>& a, size_t k) {  // multiply by x^k
    if (a.is_zero()) return a;
    std::vector<C> r(a.c.size() + k, C(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i + k] = a.c[i];
    return Poly<C>(std::move(r));
}

template <typename C>
Poly<C> derivative(const Poly<C>& a) {
    if (a.c.size() <= 1) return Poly<C>{};
    std::vector<C> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * C(static_cast<long>(i));
    return Poly<C>(std::move(r));
}

template <typename C, typename V>
V eval_horner(const Poly<C>& a, const V& x) {
    V acc(0);
    for (size_t i = a.c.size(); i-- > 0;) acc = acc * x + V(a.c[i]);
    return acc;
}

// p(num/den) * den^deg(p): integer Horner, exact; sign equals sign of p at
// the rational point when den > 0.
BigInt eval_homogeneous(const ZPoly& p, const BigInt& num, const BigInt& den);
int sign_at(const ZPoly& p, const Rational& x);
Rational eval_at(const ZPoly& p, const Rational& x);

// Conservative enclosure of p over the interval, Horner on interval ops.
RatInterval eval_interval(const ZPoly& p, const RatInterval& x);
RatInterval eval_interval_rounded(const ZPoly& p, const RatInterval& x, unsigned bits);

// --- Z[x]-specific exact arithmetic ---

BigInt content(const ZPoly& p);                       // gcd of coefficients, >= 0
ZPoly primitive_part(const ZPoly& p);                 // p / content, lc sign preserved
ZPoly divexact(const ZPoly& a, const BigInt& s);
ZPoly divexact(const ZPoly& a, const ZPoly& b);       // throws on nonzero remainder
bool try_divexact(const ZPoly& a, const ZPoly& b, ZPoly& q);
// prem(a, b): lc(b)^(dega-degb+1) * a mod b; also returns the pseudo-quotient degree bookkeeping.
ZPoly prem(const ZPoly& a, const ZPoly& b);

ZPoly gcd_poly(const ZPoly& a, const ZPoly& b);       // primitive, positive lc
ZPoly squarefree_part(const ZPoly& p);                // primitive, positive lc
BigInt resultant_z(const ZPoly& a, const ZPoly& b);   // det of the Sylvester matrix, a-rows first
ZPoly discriminant_z(const ZPoly& p);                 // Res(p, p') / lc(p)

// Coefficient-wise max bit size.
size_t max_coeff_bits(const ZPoly& p);

// p(x + 1), p(c * x), p(x/2)*2^deg, x^deg * p(1/x) — used by root isolation.
ZPoly taylor_shift_1(const ZPoly& p);
ZPoly scale_pow2(const ZPoly& p, long k);  // p(2^k x), k may be negative: clears with 2^(-k deg)
ZPoly reverse_poly(const ZPoly& p);
ZPoly compose_affine(const ZPoly& p, const Rational& a, const Rational& b);  // ~ p(a + b x), cleared to Z

// --- Q[x] ---

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly to_qpoly(const ZPoly& p);
// Clears denominators: returns primitive ZPoly equal to p up to a positive
// rational factor.
ZPoly clear_denominators(const QPoly& p);

std::string poly_str(const ZPoly& p, const std::string& var = "x");

}  // namespace qp
