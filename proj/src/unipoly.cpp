#include "qp/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qp {

size_t max_coeff_bits(const ZPoly& p) {
    size_t m = 0;
    for (const auto& x : p.c) m = std::max(m, mpz_sizeinbase(x.get_mpz_t(), 2));
    return m;
}

ZPoly kronecker_mul(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly{};
    size_t bits_a = max_coeff_bits(a), bits_b = max_coeff_bits(b);
    size_t n = std::min(a.c.size(), b.c.size());
    size_t slot = bits_a + bits_b + 64 - __builtin_clzll(n) + 2;  // headroom for carries and sign

    auto pack = [slot](const ZPoly& p) {
        BigInt acc(0);
        for (size_t i = p.c.size(); i-- > 0;) {
            acc <<= slot;
            acc += p.c[i];
        }
        return acc;
    };
    BigInt prod = pack(a) * pack(b);

    size_t terms = a.c.size() + b.c.size() - 1;
    std::vector<BigInt> out(terms);
    BigInt half = BigInt(1) << (slot - 1);
    BigInt mask_mod = BigInt(1) << slot;
    for (size_t i = 0; i < terms; ++i) {
        BigInt limb;
        mpz_fdiv_r_2exp(limb.get_mpz_t(), prod.get_mpz_t(), slot);
        if (limb >= half) limb -= mask_mod;  // centered digit: coefficients may be negative
        out[i] = limb;
        prod -= limb;
        mpz_fdiv_q_2exp(prod.get_mpz_t(), prod.get_mpz_t(), slot);
    }
    if (prod != 0) throw std::logic_error("kronecker_mul: nonzero residue after unpack");
    return ZPoly(std::move(out));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly{};
    size_t na = a.c.size(), nb = b.c.size();
    if (std::min(na, nb) >= 12 && na * nb >= 4096) return kronecker_mul(a, b);
    return mul_naive(a, b);
}

QPoly operator*(const QPoly& a, const QPoly& b) { return mul_naive(a, b); }

BigInt eval_homogeneous(const ZPoly& p, const BigInt& num, const BigInt& den) {
    if (p.is_zero()) return BigInt(0);
    BigInt acc = p.c.back();
    BigInt dpow(1);
    for (size_t i = p.c.size() - 1; i-- > 0;) {
        dpow *= den;
        acc = acc * num + p.c[i] * dpow;
    }
    return acc;
}

int sign_at(const ZPoly& p, const Rational& x) {
    BigInt v = eval_homogeneous(p, x.get_num(), x.get_den());
    return sign(v);
}

Rational eval_at(const ZPoly& p, const Rational& x) {
    BigInt v = eval_homogeneous(p, x.get_num(), x.get_den());
    return make_rational(v, pow_int(x.get_den(), static_cast<unsigned long>(std::max(p.degree(), 0))));
}

RatInterval eval_interval(const ZPoly& p, const RatInterval& x) {
    RatInterval acc{Rational(0)};
    for (size_t i = p.c.size(); i-- > 0;) {
        acc = acc * x + Rational(p.c[i]);
    }
    return acc;
}

RatInterval eval_interval_rounded(const ZPoly& p, const RatInterval& x, unsigned bits) {
    RatInterval acc{Rational(0)};
    for (size_t i = p.c.size(); i-- > 0;) {
        acc = (acc * x + Rational(p.c[i])).round_out(bits);
    }
    return acc;
}

BigInt content(const ZPoly& p) {
    BigInt g(0);
    for (const auto& x : p.c) {
        g = gcd_int(g, x);
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (g == 1) return p;
    return divexact(p, g);
}

ZPoly divexact(const ZPoly& a, const BigInt& s) {
    std::vector<BigInt> r(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = exact_div(a.c[i], s);
    return ZPoly(std::move(r));
}

bool try_divexact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.is_zero()) return false;
    if (a.is_zero()) { q = ZPoly{}; return true; }
    if (a.degree() < b.degree()) return false;
    std::vector<BigInt> rem = a.c;
    std::vector<BigInt> quo(a.degree() - b.degree() + 1, BigInt(0));
    const BigInt& blc = b.lc();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt top = rem[k + b.degree()];
        if (top == 0) continue;
        if (!divides(blc, top)) return false;
        BigInt qk = exact_div(top, blc);
        quo[k] = qk;
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= qk * b.c[j];
    }
    for (const auto& x : rem)
        if (x != 0) return false;
    q = ZPoly(std::move(quo));
    return true;
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
    ZPoly q;
    if (!try_divexact(a, b, q)) throw std::domain_error("divexact: inexact polynomial division");
    return q;
}

ZPoly prem(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("prem: zero divisor");
    int da = a.degree(), db = b.degree();
    if (da < db) return a;
    std::vector<BigInt> r = a.c;
    const BigInt& blc = b.lc();
    for (int k = da - db; k >= 0; --k) {
        BigInt top = r[k + db];
        // r = blc * r - top * x^k * b   (only indices <= k+db change; top slot becomes 0)
        for (int j = 0; j < k + db; ++j) {
            r[j] *= blc;
            if (j >= k) r[j] -= top * b.c[j - k];
        }
        r[k + db] = 0;
    }
    r.resize(db);
    return ZPoly(std::move(r));
}

// Heuristic gcd by packed-integer evaluation, verified by trial division;
// falls back to a primitive Euclidean remainder sequence.
static ZPoly gcd_prs(ZPoly a, ZPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = prem(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    if (!a.is_zero() && sign(a.lc()) < 0) a = -a;
    return a;
}

ZPoly gcd_poly(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) {
        ZPoly r = primitive_part(b);
        if (!r.is_zero() && sign(r.lc()) < 0) r = -r;
        return r;
    }
    if (b.is_zero()) return gcd_poly(b, a);
    ZPoly pa = primitive_part(a), pb = primitive_part(b);
    // evaluation point large enough that the gcd's coefficients unpack uniquely
    size_t bits = std::max(max_coeff_bits(pa), max_coeff_bits(pb)) + 32;
    for (int attempt = 0; attempt < 4; ++attempt, bits += bits / 2) {
        BigInt xi = BigInt(1) << bits;
        BigInt ga = eval_homogeneous(pa, xi, BigInt(1));
        BigInt gb = eval_homogeneous(pb, xi, BigInt(1));
        BigInt g = gcd_int(ga, gb);
        // unpack g in base xi with centered digits
        std::vector<BigInt> digits;
        BigInt half = xi >> 1;
        BigInt cur = g;
        while (cur != 0 && digits.size() <= static_cast<size_t>(std::min(pa.degree(), pb.degree())) + 1) {
            BigInt limb;
            mpz_fdiv_r_2exp(limb.get_mpz_t(), cur.get_mpz_t(), bits);
            if (limb >= half) limb -= xi;
            digits.push_back(limb);
            cur -= limb;
            mpz_fdiv_q_2exp(cur.get_mpz_t(), cur.get_mpz_t(), bits);
        }
        if (cur != 0) continue;  // candidate longer than possible: bad point
        ZPoly cand = primitive_part(ZPoly(std::move(digits)));
        if (cand.is_zero()) continue;
        if (sign(cand.lc()) < 0) cand = -cand;
        ZPoly q;
        if (try_divexact(pa, cand, q) && try_divexact(pb, cand, q)) return cand;
    }
    return gcd_prs(pa, pb);
}

ZPoly squarefree_part(const ZPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (p.degree() == 0) return ZPoly({BigInt(1)});
    ZPoly g = gcd_poly(p, derivative(p));
    ZPoly q = divexact(primitive_part(p), g);
    q = primitive_part(q);
    if (sign(q.lc()) < 0) q = -q;
    return q;
}

// Subresultant PRS resultant over Z (Cohen, Algorithm 3.3.7).
BigInt resultant_z(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return BigInt(0);
    if (a.degree() == 0) return pow_int(a.lc(), static_cast<unsigned long>(b.degree()));
    if (b.degree() == 0) return pow_int(b.lc(), static_cast<unsigned long>(a.degree()));
    ZPoly A = a, B = b;
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    BigInt g(1), h(1);
    while (true) {
        int da = A.degree(), db = B.degree();
        unsigned long delta = static_cast<unsigned long>(da - db);
        if ((da & 1) && (db & 1)) s = -s;
        ZPoly R = prem(A, B);
        A = std::move(B);
        BigInt denom = g * pow_int(h, delta);
        B = divexact(R, denom);
        g = A.lc();
        if (delta == 0) {
            // h unchanged
        } else {
            h = exact_div(pow_int(g, delta), pow_int(h, delta - 1));
        }
        if (B.is_zero()) return BigInt(0);
        if (B.degree() == 0) {
            unsigned long dA = static_cast<unsigned long>(A.degree());
            BigInt num = pow_int(B.lc(), dA);
            BigInt res = dA <= 1 ? num : exact_div(num, pow_int(h, dA - 1));
            return s < 0 ? -res : res;
        }
    }
}

ZPoly discriminant_z(const ZPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("discriminant: degree < 1");
    BigInt res = resultant_z(p, derivative(p));
    BigInt d = exact_div(res, p.lc());
    return ZPoly({d});
}

ZPoly taylor_shift_1(const ZPoly& p) {
    std::vector<BigInt> c = p.c;
    size_t n = c.size();
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j-- > i;) c[j] += c[j + 1];
    return ZPoly(std::move(c));
}

ZPoly scale_pow2(const ZPoly& p, long k) {
    std::vector<BigInt> c = p.c;
    if (k >= 0) {
        for (size_t i = 0; i < c.size(); ++i) c[i] <<= static_cast<unsigned long>(k) * i;
    } else {
        size_t n = c.size();
        for (size_t i = 0; i < n; ++i) c[i] <<= static_cast<unsigned long>(-k) * (n - 1 - i);
    }
    return ZPoly(std::move(c));
}

ZPoly reverse_poly(const ZPoly& p) {
    std::vector<BigInt> c(p.c.rbegin(), p.c.rend());
    return ZPoly(std::move(c));
}

ZPoly compose_affine(const ZPoly& p, const Rational& a, const Rational& b) {
    // exact: q(t) = p(a + b t) computed over Q, then cleared
    QPoly acc;
    QPoly lin(std::vector<Rational>{a, b});
    for (size_t i = p.c.size(); i-- > 0;) {
        acc = acc * lin;
        if (acc.c.empty()) acc.c.push_back(Rational(p.c[i]));
        else acc.c[0] += Rational(p.c[i]);
        acc.normalize();
    }
    return clear_denominators(acc);
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("divmod: zero divisor");
    r = a;
    if (a.degree() < b.degree()) { q = QPoly{}; return; }
    std::vector<Rational> quo(a.degree() - b.degree() + 1, Rational(0));
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational top = r.coeff(k + b.degree());
        if (top == 0) continue;
        Rational qk = top / b.lc();
        quo[k] = qk;
        for (int j = 0; j <= b.degree(); ++j) {
            size_t idx = k + j;
            if (idx >= r.c.size()) break;
            r.c[idx] -= qk * b.c[j];
        }
    }
    r.normalize();
    q = QPoly(std::move(quo));
}

QPoly to_qpoly(const ZPoly& p) {
    std::vector<Rational> c(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) c[i] = Rational(p.c[i]);
    return QPoly(std::move(c));
}

ZPoly clear_denominators(const QPoly& p) {
    BigInt l(1);
    for (const auto& x : p.c) l = lcm_int(l, x.get_den());
    std::vector<BigInt> c(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) {
        Rational v = p.c[i] * Rational(l);
        c[i] = v.get_num();  // denominator is 1 by construction
    }
    return primitive_part(ZPoly(std::move(c)));
}

std::string poly_str(const ZPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.c.size(); i-- > 0;) {
        if (p.c[i] == 0) continue;
        if (!first) os << (sign(p.c[i]) < 0 ? " - " : " + ");
        else if (sign(p.c[i]) < 0) os << "-";
        BigInt a = abs(p.c[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace qp
