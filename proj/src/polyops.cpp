#include "qp/polyops.hpp"

#include "qp/resultant.hpp"

#include <stdexcept>

namespace qp {

MultiPoly normalize_poly(const MultiPoly& p) {
    if (p.is_zero()) return p;
    MultiPoly r = p.primitive_int();
    if (sign(r.terms.begin()->second) < 0) r = -r;
    return r;
}

namespace {

int first_used_var(const MultiPoly& p, const MultiPoly& q) {
    for (size_t i = 0; i < p.vars.size(); ++i)
        if (p.degree(static_cast<int>(i)) > 0 || q.degree(static_cast<int>(i)) > 0)
            return static_cast<int>(i);
    return -1;
}

// prem along var with MultiPoly coefficients
MultiPoly prem_along(const MultiPoly& a, const MultiPoly& b, int var) {
    int da = a.degree(var), db = b.degree(var);
    if (db < 0) throw std::invalid_argument("prem_along: zero divisor");
    if (da < db) return a;
    auto A = a.coeffs_along(var);
    auto B = b.coeffs_along(var);
    const MultiPoly& blc = B[db];
    for (int k = da - db; k >= 0; --k) {
        MultiPoly top = A[k + db];
        for (int j = 0; j < k + db; ++j) {
            A[j] = A[j] * blc;
            if (j >= k) A[j] = A[j] - top * B[j - k];
        }
        A[k + db] = MultiPoly(a.vars);
    }
    A.resize(db > 0 ? db : 0);
    return MultiPoly::assemble_along(var, A, a.vars);
}

}  // namespace

MultiPoly content_along(const MultiPoly& p, int var) {
    MultiPoly g(p.vars);
    for (const auto& c : p.coeffs_along(var)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd_poly(g, c);
        if (g.is_constant()) break;
    }
    if (g.is_zero()) return g;
    return normalize_poly(g);
}

MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b) {
    int v = first_used_var(a, b);
    if (v < 0) {
        // both constant
        BigInt g = gcd_int(a.constant_value(), b.constant_value());
        return MultiPoly::constant(a.vars, g);
    }
    return gcd_poly(a, b, v);
}

MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b, int var) {
    if (a.vars != b.vars) throw std::invalid_argument("gcd_poly: variable lists differ");
    if (a.is_zero()) return normalize_poly(b);
    if (b.is_zero()) return normalize_poly(a);
    if (a.is_constant() || b.is_constant()) {
        BigInt g = gcd_int(a.int_content(), b.int_content());
        return MultiPoly::constant(a.vars, g);
    }
    if (a.degree(var) == 0 && b.degree(var) == 0) {
        int v = first_used_var(a, b);
        if (v == var || v < 0) throw std::logic_error("gcd_poly: no usable main variable");
        return gcd_poly(a, b, v);
    }

    MultiPoly ca = content_along(a, var), cb = content_along(b, var);
    MultiPoly A = exact_divide(a, ca), B = exact_divide(b, cb);
    if (A.degree(var) < B.degree(var)) std::swap(A, B);
    while (B.degree(var) >= 0 && !B.is_zero()) {
        if (B.degree(var) == 0) {
            // common part has degree 0 in var
            A = B;
            break;
        }
        MultiPoly R = prem_along(A, B, var);
        A = std::move(B);
        if (R.is_zero()) { B = R; break; }
        MultiPoly cr = content_along(R, var);
        B = exact_divide(R, cr);
    }
    MultiPoly gc = gcd_poly(ca, cb);
    MultiPoly g;
    if (B.is_zero()) {
        // A (primitive along var) is the gcd of the primitive parts
        g = A;
    } else {
        // remainder sequence ended at nonzero degree-0: primitive parts coprime in var
        g = MultiPoly::constant(a.vars, BigInt(1));
    }
    MultiPoly result = normalize_poly(g) * gc;
    // verify divisibility; the primitive PRS can otherwise silently go wrong
    MultiPoly q;
    if (!try_exact_divide(a, result, q) || !try_exact_divide(b, result, q))
        throw std::logic_error("gcd_poly: candidate does not divide inputs");
    return normalize_poly(result);
}

MultiPoly squarefree_part(const MultiPoly& p, int var) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (p.degree(var) <= 0) return normalize_poly(p);
    MultiPoly g = gcd_poly(p, p.derivative(var), var);
    MultiPoly q = exact_divide(normalize_poly(p), g);
    return normalize_poly(q);
}

std::vector<std::pair<ZPoly, int>> yun_squarefree(const ZPoly& p) {
    std::vector<std::pair<ZPoly, int>> out;
    if (p.degree() <= 0) return out;
    ZPoly pp = primitive_part(p);
    ZPoly d = derivative(pp);
    ZPoly a = gcd_poly(pp, d);
    ZPoly b = divexact(pp, a);
    ZPoly c = divexact(d, a);
    int k = 1;
    while (true) {
        ZPoly z = c - derivative(b);
        if (z.is_zero()) {
            if (b.degree() > 0) out.push_back({b, k});
            break;
        }
        ZPoly g = gcd_poly(b, z);
        if (g.degree() > 0) out.push_back({g, k});
        b = divexact(b, g);
        c = divexact(z, g);
        ++k;
        if (b.degree() == 0) break;
    }
    return out;
}

MultiPoly discriminant(const MultiPoly& p, int var) {
    int d = p.degree(var);
    if (d < 1) throw std::invalid_argument("discriminant: degree in variable < 1");
    MultiPoly res = resultant_prs(p, p.derivative(var), var);
    MultiPoly lc = p.coeffs_along(var)[d];
    MultiPoly disc = exact_divide(res, lc);
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1) disc = -disc;
    return disc;
}

// --- PolyFraction ---

PolyFraction::PolyFraction(MultiPoly n, MultiPoly d) {
    if (d.is_zero()) throw std::invalid_argument("PolyFraction: zero denominator");
    if (n.is_zero()) {
        num = std::move(n);
        den = MultiPoly::constant(d.vars, BigInt(1));
        return;
    }
    MultiPoly g = gcd_poly(n, d);
    if (!(g.is_constant() && g.constant_value() == 1)) {
        n = exact_divide(n, g);
        d = exact_divide(d, g);
    }
    if (sign(d.terms.begin()->second) < 0) {
        n = -n;
        d = -d;
    }
    num = std::move(n);
    den = std::move(d);
}

PolyFraction PolyFraction::from_poly(MultiPoly p) {
    PolyFraction f;
    f.den = MultiPoly::constant(p.vars, BigInt(1));
    f.num = std::move(p);
    return f;
}

PolyFraction PolyFraction::operator+(const PolyFraction& o) const {
    return PolyFraction(num * o.den + o.num * den, den * o.den);
}
PolyFraction PolyFraction::operator-(const PolyFraction& o) const {
    return PolyFraction(num * o.den - o.num * den, den * o.den);
}
PolyFraction PolyFraction::operator*(const PolyFraction& o) const {
    return PolyFraction(num * o.num, den * o.den);
}
PolyFraction PolyFraction::operator/(const PolyFraction& o) const {
    if (o.num.is_zero()) throw std::domain_error("PolyFraction: division by zero");
    return PolyFraction(num * o.den, den * o.num);
}
PolyFraction PolyFraction::operator-() const {
    PolyFraction f;
    f.num = -num;
    f.den = den;
    return f;
}

ClearedConstraint clear_denominators(const PolyFraction& pf) {
    ClearedConstraint out;
    out.poly = normalize_poly(pf.num);
    out.multiplier = pf.den;
    return out;
}

PolyFraction substitute(const MultiPoly& p, int var, const PolyFraction& value) {
    // Horner along var with fraction arithmetic
    auto coeffs = p.coeffs_along(var);
    PolyFraction acc = PolyFraction::from_poly(MultiPoly(p.vars));
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * value + PolyFraction::from_poly(coeffs[i]);
    }
    if (coeffs.empty()) acc = PolyFraction::from_poly(MultiPoly(p.vars));
    return acc;
}

}  // namespace qp
