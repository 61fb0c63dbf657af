#include "qp/series.hpp"

#include <algorithm>

namespace qp {

namespace {
QPoly qgcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    ZPoly g = gcd_poly(clear_denominators(a), clear_denominators(b));
    return to_qpoly(g);
}
}  // namespace

RatFunc::RatFunc(QPoly n, QPoly d) {
    if (d.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    if (n.is_zero()) {
        den = QPoly(std::vector<Rational>{Rational(1)});
        return;
    }
    QPoly g = qgcd(n, d);
    if (g.degree() > 0) {
        QPoly q, r;
        divmod(n, g, q, r);
        n = q;
        divmod(d, g, q, r);
        d = q;
    }
    Rational lc = d.lc();
    if (lc != 1) {
        for (auto& x : n.c) x /= lc;
        for (auto& x : d.c) x /= lc;
    }
    num = std::move(n);
    den = std::move(d);
}

RatFunc RatFunc::generator() {
    RatFunc f;
    f.num = QPoly(std::vector<Rational>{Rational(0), Rational(1)});
    return f;
}

RatFunc RatFunc::operator-() const {
    RatFunc f;
    f.num = -num;
    f.den = den;
    return f;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num * o.den + o.num * den, den * o.den);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num * o.den - o.num * den, den * o.den);
}
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num * o.num, den * o.den); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num * o.den, den * o.num);
}

std::vector<BigInt> counts_from_series(const SeriesQ& f, bool labelled) {
    std::vector<BigInt> out;
    out.reserve(f.order());
    BigInt fact(1);
    for (int n = 0; n < f.order(); ++n) {
        if (n > 0) fact *= n;
        Rational v = labelled ? f[n] * Rational(fact) : f[n];
        if (v.get_den() != 1)
            throw std::domain_error("counts_from_series: non-integral count at index " +
                                    std::to_string(n));
        out.push_back(v.get_num());
    }
    return out;
}

int residual_valuation(const MultiPoly& P, std::span<const Rational> f, int series_var,
                       int expansion_var, int order) {
    for (size_t i = 0; i < P.vars.size(); ++i)
        if (static_cast<int>(i) != series_var && static_cast<int>(i) != expansion_var &&
            P.degree(static_cast<int>(i)) > 0)
            throw std::invalid_argument("residual_valuation: extra variable " + P.vars[i]);

    int n = std::min<int>(order, static_cast<int>(f.size()));
    SeriesQ s(n);
    for (int i = 0; i < n; ++i) s[i] = f[i];

    // Horner along series_var; coefficients are univariate in expansion_var.
    auto coeffs = P.coeffs_along(series_var);
    SeriesQ acc(n);
    for (size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * s;
        ZPoly cz = to_zpoly(coeffs[k], expansion_var);
        for (int i = 0; i < n && i < static_cast<int>(cz.c.size()); ++i)
            acc[i] += Rational(cz.c[i]);
    }
    return acc.valuation();
}

SeriesQ algebraic_series_from_minpoly(const MultiPoly& P, int y_var, int x_var,
                                      const std::vector<Rational>& seed, int order) {
    if (seed.empty()) throw std::invalid_argument("algebraic_series: empty seed");
    auto coeffs = P.coeffs_along(y_var);  // univariate in x_var
    std::vector<ZPoly> cz(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) cz[i] = to_zpoly(coeffs[i], x_var);

    auto eval_P = [&](const SeriesQ& y, int n) {
        SeriesQ acc(n);
        for (size_t k = cz.size(); k-- > 0;) {
            acc = acc * y.truncated(n);
            for (int i = 0; i < n && i < static_cast<int>(cz[k].c.size()); ++i)
                acc[i] += Rational(cz[k].c[i]);
        }
        return acc;
    };
    std::vector<ZPoly> dz(cz.size() > 1 ? cz.size() - 1 : 0);
    for (size_t k = 1; k < cz.size(); ++k) {
        dz[k - 1] = cz[k] * BigInt(static_cast<long>(k));
    }
    auto eval_Py = [&](const SeriesQ& y, int n) {
        SeriesQ acc(n);
        for (size_t k = dz.size(); k-- > 0;) {
            acc = acc * y.truncated(n);
            for (int i = 0; i < n && i < static_cast<int>(dz[k].c.size()); ++i)
                acc[i] += Rational(dz[k].c[i]);
        }
        return acc;
    };

    // check the seed's constant term is a root of P(., 0)
    {
        std::vector<BigInt> col;
        for (const auto& p : cz) col.push_back(p.coeff(0));
        ZPoly p0(std::move(col));
        if (!p0.is_zero() && sign_at(p0, seed[0]) != 0)
            throw std::invalid_argument("algebraic_series: seed constant term is not a root of P(.,0)");
    }

    int n0 = static_cast<int>(seed.size());
    SeriesQ y(std::max(order, n0));
    for (int i = 0; i < n0 && i < y.order(); ++i) y[i] = seed[i];

    // Correct coefficients are 0..known-1. Stage 1 fixes one coefficient at a
    // time until the branch separates (derivative valuation below `known`);
    // from there quadratic Newton lifting takes over.
    int known = std::max(n0, 1);
    while (known < order) {
        int w = std::min(order, 2 * known + 8);
        SeriesQ prefix = y.truncated(known);
        prefix.c.resize(w, Rational(0));
        SeriesQ Py_pref = eval_Py(prefix, w);
        int om = Py_pref.valuation();
        if (om >= w)
            throw std::domain_error("algebraic_series: derivative vanishes to working order " +
                                    std::to_string(w));
        if (om < known) {
            // separated: Newton on the full current series
            SeriesQ yw = y.truncated(w);
            SeriesQ Py = eval_Py(yw, w);
            SeriesQ Pv = eval_P(yw, w);
            if (Pv.valuation() < Py.valuation())
                throw std::domain_error("algebraic_series: inconsistent branch at order " +
                                        std::to_string(Pv.valuation()));
            SeriesQ delta = divide(Pv, Py);
            for (int i = 0; i < delta.order() && i < y.order(); ++i) y[i] -= delta[i];
            known = std::min(std::max(known + 1, 2 * known - om), w - om);
        } else {
            // solve the next coefficient from the residual at order known+om
            int k = known;
            SeriesQ Pv = eval_P(prefix, std::min(w, k + om + 1));
            if (Pv.valuation() < k + om && Pv.valuation() < Pv.order())
                throw std::domain_error("algebraic_series: no solution at order " +
                                        std::to_string(Pv.valuation() - om));
            Rational resid = Pv.order() > k + om ? Pv[k + om] : Rational(0);
            Rational slope = Py_pref[om];
            Rational delta = -resid / slope;
            y[k] = delta;
            // verify the update really raised the residual valuation (guards
            // against higher-order interference at deeply tangent branches)
            SeriesQ check = y.truncated(k + 1);
            check.c.resize(std::min(w, k + om + 2), Rational(0));
            SeriesQ Pc = eval_P(check, check.order());
            if (Pc.valuation() <= k + om)
                throw std::domain_error(
                    "algebraic_series: branch ambiguity at order " + std::to_string(k) +
                    "; a longer seed is required to identify the branch");
            known = k + 1;
        }
    }
    return y.truncated(order);
}

}  // namespace qp
