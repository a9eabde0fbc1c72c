#include "padiclab/uint128.hpp"

#include <algorithm>

#include "padiclab/errors.hpp"

namespace padiclab {

std::string to_string(u128 x) {
    if (x == 0)
        return "0";
    std::string s;
    while (x != 0) {
        s.push_back(char('0' + int(x % 10)));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 powmod(u128 base, u128 exp, u128 m) {
    u128 r = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u128 powmod(u128 base, const mpz_class& exp, u128 m) {
    if (exp < 0)
        throw DomainError("powmod: negative exponent");
    u128 r = 1 % m;
    base %= m;
    for (std::size_t i = mpz_sizeinbase(exp.get_mpz_t(), 2); i-- > 0;) {
        r = mulmod(r, r, m);
        if (mpz_tstbit(exp.get_mpz_t(), i))
            r = mulmod(r, base, m);
    }
    return r;
}

u128 inverse_mod_prime_power(u128 a, std::uint64_t p, u128 m) {
    a %= m;
    if (a % p == 0)
        throw NotInvertible("inverse of a multiple of p modulo p^K");
    // Inverse mod p by Fermat, then Newton steps x <- x(2 - ax) double
    // the number of correct p-adic digits per round.
    u128 x = powmod(a % p, u128(p - 2), u128(p));
    while (mulmod(a, x, m) != 1) {
        u128 t = submod(2 % m, mulmod(a, x, m), m);
        x = mulmod(x, t, m);
    }
    return x;
}

u128 checked_pow_u128(std::uint64_t p, int k) {
    const u128 limit = u128(1) << 127;
    u128 r = 1;
    for (int i = 0; i < k; ++i) {
        if (r >= limit / p)
            throw DomainError("p^K does not fit in 127 bits");
        r *= p;
    }
    return r;
}

mpz_class u128_to_mpz(u128 x) {
    mpz_class hi(std::uint64_t(x >> 64));
    mpz_class r = hi << 64;
    r += mpz_class(std::uint64_t(x));
    return r;
}

u128 mpz_to_u128(const mpz_class& z) {
    mpz_class lo = z & mpz_class(std::uint64_t(~std::uint64_t(0)));
    mpz_class hi = z >> 64;
    return (u128(hi.get_ui()) << 64) | u128(lo.get_ui());
}

} // namespace padiclab
