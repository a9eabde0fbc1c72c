#ifndef PADICLAB_UINT128_HPP
#define PADICLAB_UINT128_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace padiclab {

using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string(u128 x);

inline u128 addmod(u128 a, u128 b, u128 m) {
    // a, b < m < 2^127, so a + b cannot wrap.
    u128 s = a + b;
    return s >= m ? s - m : s;
}

inline u128 submod(u128 a, u128 b, u128 m) {
    return a >= b ? a - b : a + (m - b);
}

inline u128 mulmod(u128 a, u128 b, u128 m) {
    if (m <= UINT64_MAX)
        return (a % m) * (b % m) % m;
    // Shift-and-add over the bits of the smaller operand; all operands
    // stay below 2^127 so addmod never overflows.
    if (a < b) {
        u128 t = a;
        a = b;
        b = t;
    }
    u128 r = 0;
    a %= m;
    while (b != 0) {
        if (b & 1)
            r = addmod(r, a, m);
        a = addmod(a, a, m);
        b >>= 1;
    }
    return r;
}

u128 powmod(u128 base, u128 exp, u128 m);
u128 powmod(u128 base, const mpz_class& exp, u128 m);

/// Multiplicative inverse of a modulo a prime power m = p^K with p odd.
/// Lifts the inverse mod p to mod p^K by Newton iteration.
/// Throws NotInvertible when p divides a.
u128 inverse_mod_prime_power(u128 a, std::uint64_t p, u128 m);

/// p^k as u128; throws DomainError when the result would not fit in 127 bits.
u128 checked_pow_u128(std::uint64_t p, int k);

mpz_class u128_to_mpz(u128 x);

/// Low 128 bits of |z|; callers must ensure 0 <= z < 2^128.
u128 mpz_to_u128(const mpz_class& z);

} // namespace padiclab

#endif
