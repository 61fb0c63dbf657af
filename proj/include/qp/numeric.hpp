#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qp {

// Arbitrary-precision integers and rationals, backed by GMP. mpz_class is
// always canonical (no leading zero limbs, sign carried separately);
// mpq_class results of arithmetic are kept reduced with positive
// denominator. Construction from a raw num/den pair must go through
// make_rational so the invariant holds from the start.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt bigint_from_string(const std::string& s) { return BigInt(s, 10); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline const BigInt& numerator(const Rational& r) { return r.get_num(); }
inline const BigInt& denominator(const Rational& r) { return r.get_den(); }

inline int sign(const BigInt& a) { return sgn(a); }
inline int sign(const Rational& a) { return sgn(a); }

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rat(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // powers of a canonical rational stay canonical
}

inline BigInt gcd_int(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm_int(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Exact integer division; throws if the division leaves a remainder.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::invalid_argument("exact_div: zero divisor");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("exact_div: inexact integer division");
    return q;
}

inline bool divides(const BigInt& b, const BigInt& a) {
    return b != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

// Largest dyadic k/2^bits <= r (round_down) or smallest >= r (round_up).
// Used to keep interval endpoints at bounded size during long runs.
Rational dyadic_round_down(const Rational& r, unsigned bits);
Rational dyadic_round_up(const Rational& r, unsigned bits);

// floor(sqrt(a)) for a >= 0.
inline BigInt isqrt(const BigInt& a) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

std::string to_string(const BigInt& a);
std::string to_string(const Rational& r);

}  // namespace qp
