#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qp/interval.hpp"
#include "qp/roots.hpp"
#include "qp/unipoly.hpp"

#include "testutil.hpp"

using namespace qp;
using namespace qptest;

TEST_CASE("rational round trips") {
    for (int i = 0; i < 1000; ++i) {
        Rational a = make_rational(rand_int(-1000, 1000), rand_int(1, 1000));
        Rational c = make_rational(rand_int(-1000, 1000), rand_int(1, 1000));
        CHECK((a + c) - c == a);
        CHECK(denominator(a) > 0);
        CHECK(gcd_int(numerator(a), denominator(a)) == 1);
    }
}

TEST_CASE("interval arithmetic is conservative") {
    RatInterval a = RatInterval::hull(make_rational(1, 4), make_rational(1, 3));
    RatInterval b = RatInterval::hull(make_rational(-2, 1), make_rational(3, 1));
    RatInterval p = a * b;
    CHECK(p.contains(make_rational(1, 4) * make_rational(-2, 1)));
    CHECK(p.contains(make_rational(1, 3) * make_rational(3, 1)));
    RatInterval s = a.sqrt_enclosure(64);
    CHECK(s.lo * s.lo <= make_rational(1, 4));
    CHECK(s.hi * s.hi >= make_rational(1, 3));
    RatInterval two(Rational(2));
    RatInterval r2 = two.sqrt_enclosure(64);
    CHECK(r2.width() < make_rational(1, 1000000));
    CHECK(r2.lo * r2.lo <= 2);
    CHECK(r2.hi * r2.hi >= 2);
}

TEST_CASE("pi enclosure") {
    RatInterval pi = pi_enclosure(128);
    CHECK(pi.lo > make_rational(314159265, 100000000));
    CHECK(pi.hi < make_rational(314159266, 100000000));
    CHECK(pi.width() < make_rational(BigInt(1), BigInt(1) << 120));
}

TEST_CASE("kronecker multiplication matches naive") {
    for (int i = 0; i < 50; ++i) {
        ZPoly a = random_zpoly(30, 1000000);
        ZPoly b = random_zpoly(30, 1000000);
        CHECK(kronecker_mul(a, b) == mul_naive(a, b));
    }
}

TEST_CASE("zpoly gcd and squarefree") {
    for (int i = 0; i < 30; ++i) {
        ZPoly f = random_zpoly(4, 20), g = random_zpoly(4, 20), h = random_zpoly(4, 20);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        ZPoly gh = gcd_poly(f * h, g * h);
        ZPoly expect = gcd_poly(f, g) * primitive_part(h);
        if (sign(expect.lc()) < 0) expect = -expect;
        CHECK(gh == primitive_part(expect));
    }
    // squarefree_part(f g^2 h^3) = f g h for coprime square-free f, g, h
    ZPoly f(std::vector<BigInt>{BigInt(1), BigInt(1)});               // x + 1
    ZPoly g(std::vector<BigInt>{BigInt(-2), BigInt(1)});              // x - 2
    ZPoly h(std::vector<BigInt>{BigInt(3), BigInt(1)});               // x + 3
    ZPoly p = f * g * g * h * h * h;
    CHECK(squarefree_part(p) == primitive_part(f * g * h));
}

TEST_CASE("isolate_real_roots basic examples") {
    // x^2 + 1 on (-10, 10): no roots
    ZPoly p1(std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(1)});
    CHECK(isolate_real_roots(p1, RatInterval::hull(Rational(-10), Rational(10))).empty());

    // x^2 - 2 on (0, 10): one interval containing sqrt(2)
    ZPoly p2(std::vector<BigInt>{BigInt(-2), BigInt(0), BigInt(1)});
    auto roots = isolate_real_roots(p2, RatInterval::hull(Rational(0), Rational(10)));
    REQUIRE(roots.size() == 1);
    // bisection oracle to 1e-6
    Rational lo(1), hi(2);
    for (int i = 0; i < 40; ++i) {
        Rational m = (lo + hi) / 2;
        if (sign_at(p2, m) < 0) lo = m;
        else hi = m;
    }
    CHECK(roots[0].intersects(RatInterval::hull(lo, hi)));

    // non-square-free input errors with witness
    ZPoly sq = p2 * p2;
    CHECK_THROWS_AS(isolate_real_roots(sq, RatInterval::hull(Rational(-3), Rational(3))),
                    std::invalid_argument);
}

TEST_CASE("isolation agrees with a Sturm oracle on random polynomials") {
    int tested = 0;
    while (tested < 50) {
        ZPoly p = random_zpoly(12, 30);
        if (p.degree() < 1) continue;
        p = squarefree_part(p);
        if (p.degree() < 1) continue;
        Rational a(-rand_int(1, 8)), b(rand_int(1, 8));
        if (sign_at(p, a) == 0 || sign_at(p, b) == 0) continue;
        auto roots = isolate_real_roots(p, RatInterval::hull(a, b));
        CHECK(static_cast<int>(roots.size()) == sturm_count(p, a, b));
        for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
        ++tested;
    }
}

TEST_CASE("refine_root") {
    // smallest root of 3645x^2 - 4752x + 944 = (88 - 12 sqrt(21))/135 ~ 0.244513
    ZPoly tau(std::vector<BigInt>{BigInt(944), BigInt(-4752), BigInt(3645)});
    auto roots = isolate_real_roots(tau, RatInterval::hull(Rational(0), Rational(1)));
    REQUIRE(roots.size() == 1);
    AlgebraicNumber a = AlgebraicNumber::make(tau, roots[0]);
    RatInterval iv = refine_root(a, 64);
    CHECK(iv.width() <= make_rational(BigInt(1), BigInt(1) << 64));
    CHECK(a.isolator.contains(iv.lo));
    CHECK(a.isolator.contains(iv.hi));
    CHECK(iv.contains(make_rational(2445129, 10000000)) == false);  // 0.2445129 lies above the root
    CHECK(to_double(iv.mid()) == doctest::Approx(0.2445117901).epsilon(1e-8));

    // exact rational root: 2x - 1
    ZPoly half(std::vector<BigInt>{BigInt(-1), BigInt(2)});
    AlgebraicNumber r =
        AlgebraicNumber::make(half, RatInterval::hull(Rational(0), Rational(1)));
    RatInterval got = refine_root(r, 10);
    CHECK(got.is_point());
    CHECK(got.lo == make_rational(1, 2));

    // halving per step: width shrinks at least geometrically
    RatInterval w128 = refine_root(a, 128);
    CHECK(w128.width() <= make_rational(BigInt(1), BigInt(1) << 128));
}

TEST_CASE("eval_poly_interval") {
    ZPoly ident(std::vector<BigInt>{BigInt(0), BigInt(1)});
    RatInterval x = RatInterval::hull(make_rational(1, 4), make_rational(1, 3));
    RatInterval r = eval_poly_interval(ident, x);
    CHECK(r.lo == make_rational(1, 4));
    CHECK(r.hi == make_rational(1, 3));

    ZPoly p2(std::vector<BigInt>{BigInt(-2), BigInt(0), BigInt(1)});
    RatInterval sc = eval_poly_interval(p2, RatInterval::hull(Rational(1), Rational(2)));
    CHECK(sc.contains_zero());
}

TEST_CASE("dyadic rounding brackets the value") {
    Rational v = make_rational(22, 7);
    CHECK(dyadic_round_down(v, 20) <= v);
    CHECK(dyadic_round_up(v, 20) >= v);
    CHECK(dyadic_round_up(v, 20) - dyadic_round_down(v, 20) <= make_rational(BigInt(2), BigInt(1) << 20));
}
