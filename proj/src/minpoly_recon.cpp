#include "qp/minpoly_recon.hpp"

#include <algorithm>
#include <stdexcept>

namespace qp {

namespace {

struct BasisVec {
    std::vector<QPoly> comp;        // one polynomial per column
    std::vector<Rational> resid;    // residual series, index = order
    int shift = 0;                  // residual is known zero below this order
    int degree() const {
        int d = -1;
        for (const auto& p : comp) d = std::max(d, p.degree());
        return d;
    }
    void normalize() {
        BigInt den(1), num(0);
        for (const auto& p : comp)
            for (const auto& c : p.c) den = lcm_int(den, c.get_den());
        for (const auto& p : comp)
            for (const auto& c : p.c) num = gcd_int(num, c.get_num() * exact_div(den, c.get_den()));
        if (num == 0) return;
        Rational scale = make_rational(den, num);
        if (scale == 1) return;
        for (auto& p : comp)
            for (auto& c : p.c) c *= scale;
        for (auto& r : resid) r *= scale;
    }
};

}  // namespace

std::optional<MultiPoly> minpoly_from_series(const std::vector<Rational>& f, int deg_y_bound,
                                             int deg_x_bound, const std::string& y_name,
                                             const std::string& x_name) {
    int K = static_cast<int>(f.size());
    int m = deg_y_bound + 1;
    if (K < 4 || m < 2) return std::nullopt;

    // powers of f
    std::vector<std::vector<Rational>> F(m, std::vector<Rational>(K, Rational(0)));
    F[0][0] = 1;
    for (int i = 1; i < m; ++i)
        for (int a = 0; a < K; ++a) {
            if (F[i - 1][a] == 0) continue;
            for (int b = 0; a + b < K; ++b) {
                if (f[b] == 0) continue;
                F[i][a + b] += F[i - 1][a] * f[b];
            }
        }

    std::vector<BasisVec> basis(m);
    for (int j = 0; j < m; ++j) {
        basis[j].comp.assign(m, QPoly{});
        basis[j].comp[j] = QPoly(std::vector<Rational>{Rational(1)});
        basis[j].resid = F[j];
    }

    for (int sigma = 0; sigma < K; ++sigma) {
        int pivot = -1, pivot_deg = 0;
        for (int j = 0; j < m; ++j) {
            if (sigma < basis[j].shift) continue;
            if (basis[j].resid[sigma] == 0) continue;
            int d = basis[j].degree();
            if (pivot < 0 || d < pivot_deg) { pivot = j; pivot_deg = d; }
        }
        if (pivot < 0) continue;
        const Rational rp = basis[pivot].resid[sigma];
        for (int j = 0; j < m; ++j) {
            if (j == pivot || sigma < basis[j].shift) continue;
            if (basis[j].resid[sigma] == 0) continue;
            Rational c = basis[j].resid[sigma] / rp;
            for (int t = 0; t < m; ++t) {
                QPoly scaled = basis[pivot].comp[t] * c;
                basis[j].comp[t] = basis[j].comp[t] - scaled;
            }
            for (int s = sigma; s < K; ++s) basis[j].resid[s] -= c * basis[pivot].resid[s];
        }
        // pivot column multiplied by x: residual shifts up one order
        for (auto& p : basis[pivot].comp) p = shift_up(p, 1);
        std::vector<Rational> shifted(K, Rational(0));
        for (int s = sigma; s + 1 < K; ++s) shifted[s + 1] = basis[pivot].resid[s];
        basis[pivot].resid = std::move(shifted);
        basis[pivot].shift = sigma + 1;
        if (sigma % 24 == 23)
            for (auto& b : basis) b.normalize();
    }

    // candidates: fully vanishing residual within the degree budget
    int best = -1, best_deg = 0;
    for (int j = 0; j < m; ++j) {
        bool zero = true;
        for (int s = basis[j].shift; s < K; ++s)
            if (basis[j].resid[s] != 0) { zero = false; break; }
        if (!zero) continue;
        int d = basis[j].degree();
        if (d > deg_x_bound) continue;
        bool trivial = true;
        for (int t = 1; t < m && trivial; ++t) trivial = basis[j].comp[t].is_zero();
        if (trivial) continue;  // relation must involve y
        if (best < 0 || d < best_deg) { best = j; best_deg = d; }
    }
    if (best < 0) return std::nullopt;

    MultiPoly out({y_name, x_name});
    BigInt den(1);
    for (const auto& p : basis[best].comp)
        for (const auto& c : p.c) den = lcm_int(den, c.get_den());
    for (int t = 0; t < m; ++t)
        for (size_t j = 0; j < basis[best].comp[t].c.size(); ++j) {
            Rational v = basis[best].comp[t].c[j] * Rational(den);
            if (v == 0) continue;
            ExpVec e(2, 0);
            e[0] = static_cast<unsigned>(t);
            e[1] = static_cast<unsigned>(j);
            out.add_term(e, v.get_num());
        }
    out = out.primitive_int();
    if (!out.terms.empty() && sign(out.terms.begin()->second) < 0) out = -out;
    return out;
}

std::optional<std::vector<BigInt>> constant_relation(const std::vector<std::vector<Rational>>& columns) {
    size_t m = columns.size();
    if (m == 0) return std::nullopt;
    size_t K = columns[0].size();
    for (const auto& c : columns)
        if (c.size() != K) throw std::invalid_argument("constant_relation: ragged columns");

    // Gaussian elimination on the K x m matrix, tracking the combination.
    std::vector<std::vector<Rational>> mat(K, std::vector<Rational>(m));
    for (size_t r = 0; r < K; ++r)
        for (size_t c = 0; c < m; ++c) mat[r][c] = columns[c][r];

    std::vector<int> pivot_of_col(m, -1);
    size_t row = 0;
    for (size_t col = 0; col < m && row < K; ++col) {
        size_t sel = row;
        while (sel < K && mat[sel][col] == 0) ++sel;
        if (sel == K) continue;
        std::swap(mat[row], mat[sel]);
        Rational inv = 1 / mat[row][col];
        for (size_t c = col; c < m; ++c) mat[row][c] *= inv;
        for (size_t r = 0; r < K; ++r) {
            if (r == row || mat[r][col] == 0) continue;
            Rational factor = mat[r][col];
            for (size_t c = col; c < m; ++c) mat[r][c] -= factor * mat[row][c];
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    int free_col = -1;
    for (size_t c = 0; c < m; ++c)
        if (pivot_of_col[c] < 0) { free_col = static_cast<int>(c); break; }
    if (free_col < 0) return std::nullopt;

    std::vector<Rational> sol(m, Rational(0));
    sol[free_col] = 1;
    for (size_t c = 0; c < m; ++c) {
        if (pivot_of_col[c] < 0) continue;
        sol[c] = -mat[pivot_of_col[c]][free_col];
    }
    BigInt den(1);
    for (const auto& v : sol) den = lcm_int(den, v.get_den());
    std::vector<BigInt> out(m);
    BigInt g(0);
    for (size_t c = 0; c < m; ++c) {
        Rational v = sol[c] * Rational(den);
        out[c] = v.get_num();
        g = gcd_int(g, out[c]);
    }
    if (g > 1)
        for (auto& v : out) v = exact_div(v, g);
    return out;
}

}  // namespace qp
