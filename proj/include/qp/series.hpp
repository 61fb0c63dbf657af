#pragma once

#include "qp/multipoly.hpp"
#include "qp/unipoly.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qp {

// Rational function in one symbol over Q; denominator monic. Coefficient
// field for series solved with a polynomial parameter left symbolic.
struct RatFunc {
    QPoly num, den;  // den monic, gcd(num, den) = 1

    RatFunc() : den(std::vector<Rational>{Rational(1)}) {}
    RatFunc(const Rational& r) : den(std::vector<Rational>{Rational(1)}) {
        if (r != 0) num = QPoly(std::vector<Rational>{r});
    }
    RatFunc(long v) : RatFunc(Rational(v)) {}
    RatFunc(const BigInt& v) : RatFunc(Rational(v)) {}
    RatFunc(QPoly n, QPoly d);  // reduces and normalizes

    static RatFunc generator();  // the symbol itself

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
};

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const RatFunc& c) { return c.is_zero(); }

// Power series truncated at order N: coefficients c_0..c_{N-1}. Arithmetic
// never extends the order silently; binary ops truncate to the shorter
// operand.
template <typename K>
struct TSeries {
    std::vector<K> c;

    TSeries() = default;
    explicit TSeries(int order) : c(static_cast<size_t>(order), K(0)) {}
    TSeries(std::vector<K> coeffs) : c(std::move(coeffs)) {}

    int order() const { return static_cast<int>(c.size()); }
    const K& operator[](size_t i) const { return c[i]; }
    K& operator[](size_t i) { return c[i]; }

    static TSeries constant(const K& v, int order) {
        TSeries s(order);
        if (order > 0) s.c[0] = v;
        return s;
    }
    static TSeries identity(int order) {  // the expansion variable itself
        TSeries s(order);
        if (order > 1) s.c[1] = K(1);
        return s;
    }

    // order of the first nonzero coefficient; order() when none.
    int valuation() const {
        for (int i = 0; i < order(); ++i)
            if (!coeff_is_zero(c[i])) return i;
        return order();
    }

    TSeries truncated(int n) const {
        TSeries s = *this;
        if (n < s.order()) s.c.resize(n);
        return s;
    }

    bool operator==(const TSeries& o) const { return c == o.c; }
};

template <typename K>
TSeries<K> operator+(const TSeries<K>& a, const TSeries<K>& b) {
    int n = std::min(a.order(), b.order());
    TSeries<K> r(n);
    for (int i = 0; i < n; ++i) r[i] = a[i] + b[i];
    return r;
}

template <typename K>
TSeries<K> operator-(const TSeries<K>& a, const TSeries<K>& b) {
    int n = std::min(a.order(), b.order());
    TSeries<K> r(n);
    for (int i = 0; i < n; ++i) r[i] = a[i] - b[i];
    return r;
}

template <typename K>
TSeries<K> operator-(const TSeries<K>& a) {
    TSeries<K> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <typename K>
TSeries<K> operator*(const TSeries<K>& a, const TSeries<K>& b) {
    int n = std::min(a.order(), b.order());
    TSeries<K> r(n);
    for (int i = 0; i < n; ++i) {
        if (coeff_is_zero(a[i])) continue;
        for (int j = 0; i + j < n; ++j) {
            if (coeff_is_zero(b[j])) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

template <typename K>
TSeries<K> operator*(const TSeries<K>& a, const K& s) {
    TSeries<K> r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

// a / b with valuation matching: val(b) must be <= val(a) and b nonzero.
template <typename K>
TSeries<K> divide(const TSeries<K>& a, const TSeries<K>& b) {
    int vb = b.valuation();
    if (vb >= b.order()) throw std::domain_error("series divide: zero divisor");
    if (a.valuation() < vb)
        throw std::domain_error("series divide: divisor valuation exceeds dividend valuation");
    int n = std::min(a.order(), b.order()) - vb;
    TSeries<K> r(n);
    // long division after shifting both by x^vb
    std::vector<K> rem(a.c.begin() + vb, a.c.begin() + vb + n);
    for (int i = 0; i < n; ++i) {
        K q = rem[i] / b[vb];
        r[i] = q;
        if (!coeff_is_zero(q))
            for (int j = 1; i + j < n; ++j) rem[i + j] -= q * b[vb + j];
    }
    return r;
}

template <typename K>
TSeries<K> shift_up(const TSeries<K>& a, int k) {  // multiply by x^k, same order
    TSeries<K> r(a.order());
    for (int i = 0; i + k < a.order(); ++i) r[i + k] = a[i];
    return r;
}

// divide by x^k; requires valuation >= k. Order shrinks by k.
template <typename K>
TSeries<K> shift_down(const TSeries<K>& a, int k) {
    if (a.valuation() < k) throw std::domain_error("series shift_down: valuation too small");
    int n = std::max(a.order() - k, 0);
    TSeries<K> r(n);
    for (int i = 0; i < n; ++i) r[i] = a[i + k];
    return r;
}

template <typename K>
TSeries<K> exp_series(const TSeries<K>& f) {
    if (f.order() > 0 && !coeff_is_zero(f[0]))
        throw std::domain_error("series exp: nonzero constant term");
    int n = f.order();
    TSeries<K> g(n);
    if (n == 0) return g;
    g[0] = K(1);
    for (int m = 1; m < n; ++m) {
        K acc(0);
        for (int k = 1; k <= m; ++k) {
            if (coeff_is_zero(f[k])) continue;
            acc += f[k] * K(static_cast<long>(k)) * g[m - k];
        }
        g[m] = acc / K(static_cast<long>(m));
    }
    return g;
}

template <typename K>
TSeries<K> log_series(const TSeries<K>& f) {
    if (f.order() == 0 || f[0] != K(1))
        throw std::domain_error("series log: constant term must be 1");
    // h' = f'/f
    int n = f.order();
    TSeries<K> fp(n);
    for (int i = 1; i < n; ++i) fp[i - 1] = f[i] * K(static_cast<long>(i));
    TSeries<K> q = divide(fp, f);
    TSeries<K> h(n);
    for (int i = 1; i < n; ++i) h[i] = q[i - 1] / K(static_cast<long>(i));
    return h;
}

template <typename K>
TSeries<K> integrate(const TSeries<K>& f, const K& constant) {
    TSeries<K> r(f.order());
    if (f.order() > 0) r[0] = constant;
    for (int i = 1; i < f.order(); ++i) r[i] = f[i - 1] / K(static_cast<long>(i));
    return r;
}

// x * d/dx
template <typename K>
TSeries<K> point_series(const TSeries<K>& f) {
    TSeries<K> r(f.order());
    for (int i = 1; i < f.order(); ++i) r[i] = f[i] * K(static_cast<long>(i));
    return r;
}

using SeriesQ = TSeries<Rational>;
using SeriesF = TSeries<RatFunc>;

// Counting coefficients: labelled returns n! * c_n (requires integrality),
// unlabelled returns c_n (requires integrality). Throws naming the first bad
// index.
std::vector<BigInt> counts_from_series(const SeriesQ& f, bool labelled);

// Valuation of P(f, x) computed to `order` terms, where P uses exactly two
// variables: series_var (substituted by f) and expansion_var. Returns
// `order` when the residual vanishes entirely.
int residual_valuation(const MultiPoly& P, std::span<const Rational> f, int series_var,
                       int expansion_var, int order);

// Newton lifting of the branch of P(y, x) = 0 through the given seed
// coefficients. Staged order-by-order start handles multiple-root seeds;
// switches to quadratic lifting once the branch separates.
SeriesQ algebraic_series_from_minpoly(const MultiPoly& P, int y_var, int x_var,
                                      const std::vector<Rational>& seed, int order);

}  // namespace qp
