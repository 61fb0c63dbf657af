#pragma once

#include "qp/multipoly.hpp"
#include "qp/unipoly.hpp"

#include <random>

namespace qptest {

using namespace qp;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline long rand_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

inline ZPoly random_zpoly(int max_deg, long coeff_bound, bool monic = false) {
    int d = static_cast<int>(rand_int(0, max_deg));
    std::vector<BigInt> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = BigInt(rand_int(-coeff_bound, coeff_bound));
    if (monic || c[d] == 0) c[d] = BigInt(rand_int(1, coeff_bound));
    return ZPoly(std::move(c));
}

inline MultiPoly random_multipoly(const std::vector<std::string>& vars, int max_deg_per_var,
                                  int terms, long coeff_bound) {
    MultiPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(vars.size());
        for (auto& x : e) x = static_cast<unsigned>(rand_int(0, max_deg_per_var));
        p.add_term(e, BigInt(rand_int(-coeff_bound, coeff_bound)));
    }
    return p;
}

// Sturm-sequence root count on (a, b]; oracle for the isolation routines.
inline int sturm_count(const ZPoly& p, const Rational& a, const Rational& b) {
    std::vector<QPoly> seq;
    seq.push_back(to_qpoly(p));
    seq.push_back(to_qpoly(derivative(p)));
    while (!seq.back().is_zero()) {
        QPoly q, r;
        divmod(seq[seq.size() - 2], seq.back(), q, r);
        seq.push_back(-r);
    }
    seq.pop_back();
    auto variations = [&](const Rational& x) {
        int v = 0, last = 0;
        for (const auto& f : seq) {
            Rational val = eval_horner<Rational, Rational>(f, x);
            int s = sign(val);
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    };
    return variations(a) - variations(b);
}

}  // namespace qptest
