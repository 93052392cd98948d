#include "hurwitz/binomial.hpp"

namespace hurwitz {

Rational binomial(long n, long k) {
    if (k < 0)
        return Rational(0);
    if (n >= 0 && k > n)
        return Rational(0);
    // Falling factorial over k!, accumulated as an integer: each prefix
    // product n(n-1)...(n-j+1) is divisible by j!.
    mpz_class acc = 1;
    for (long j = 0; j < k; ++j) {
        acc *= n - j;
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(j + 1));
    }
    return Rational(acc);
}

} // namespace hurwitz
