#ifndef PADICLAB_BERNOULLI_HPP
#define PADICLAB_BERNOULLI_HPP

#include "padiclab/padic.hpp"

namespace padiclab {

inline constexpr long kBernoulliExactCap = 64;

/// Exact B_n by the defining recurrence sum_{j<=n} C(n+1,j) B_j = 0,
/// B_0 = 1 (so B_1 = -1/2). Table cached up to the cap.
Rational bernoulli_exact(long n, long cap = kBernoulliExactCap);

/// Product of primes q with (q-1) | n; by von Staudt-Clausen this is the
/// exact denominator of B_n for even n. Throws for odd n.
mpz_class von_staudt_denominator(long n);

/// B_m modulo p^{K_b} for even m with (p-1) not dividing m, recovered from
/// the power sum S(m) = sum k^m by the truncated Faulhaber expansion
///   S(m) = p B_m + [m(m-1)/6] p^3 B_{m-2}
///        + [m(m-1)(m-2)(m-3)/120] p^5 B_{m-4} + ...  (mod p^{K_b+1}),
/// recursing on the correction terms at reduced precision. Requires
/// ctx.precision() >= K_b + 1. Throws IrregularIndex when (p-1) divides m
/// or any positive correction index m-2j used at this precision.
u128 bernoulli_mod(long m, const ModContext& ctx, int K_b);

/// (B_m / d) modulo p^{K_b} as a p-adic value; requires p not dividing d.
PadicNumber bernoulli_quotient_mod(long m, const mpz_class& d,
                                   ModContextPtr ctx, int K_b);

/// Like bernoulli_quotient_mod but degrades the precision target past a
/// von Staudt pole in the correction terms instead of failing: the result
/// carries the largest K_b <= max_digits whose Faulhaber truncation only
/// touches regular indices. Still throws when (p-1) | m itself.
PadicNumber bernoulli_quotient_padic(long m, const mpz_class& d,
                                     ModContextPtr ctx, int max_digits);

/// B_m/m modulo p by Voronoi's congruence with base a (a^m != 1 mod p
/// required; a primitive root always works). Independent of bernoulli_mod.
u128 bernoulli_quotient_voronoi(long m, long a, long p);

/// Kummer congruence B_{m1}/m1 == B_{m2}/m2 (mod p) for
/// m1 == m2 (mod p-1), both even, (p-1) not dividing m1.
bool kummer_check(long m1, long m2, ModContextPtr ctx);

} // namespace padiclab

#endif
