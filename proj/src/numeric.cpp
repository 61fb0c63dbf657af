#include "qp/numeric.hpp"

namespace qp {

Rational dyadic_round_down(const Rational& r, unsigned bits) {
    BigInt scaled;
    // floor(r * 2^bits)
    BigInt num = r.get_num() << bits;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
    return make_rational(scaled, BigInt(1) << bits);
}

Rational dyadic_round_up(const Rational& r, unsigned bits) {
    BigInt scaled;
    BigInt num = r.get_num() << bits;
    mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
    return make_rational(scaled, BigInt(1) << bits);
}

std::string to_string(const BigInt& a) { return a.get_str(); }

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace qp
