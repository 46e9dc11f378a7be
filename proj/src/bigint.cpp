#include "mdscode/bigint.hpp"

#include <stdexcept>

namespace mdscode {

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt int_pow(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

bool divides(const BigInt& divisor, const BigInt& value) {
    if (divisor == 0) return value == 0;
    return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

} // namespace mdscode
