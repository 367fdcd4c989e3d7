#include "pp/rational.hpp"

#include <stdexcept>

namespace pp {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

BigInt to_integer(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("to_integer: not an integer");
    return r.get_num();
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    const BigInt& num = r.get_num();
    const BigInt& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    BigInt sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return make_rational(sn, sd);
}

bool is_canonical(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_num() == r.get_num() && c.get_den() == r.get_den();
}

}  // namespace pp
