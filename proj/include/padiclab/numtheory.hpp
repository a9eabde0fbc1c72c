#ifndef PADICLAB_NUMTHEORY_HPP
#define PADICLAB_NUMTHEORY_HPP

#include <cstdint>
#include <utility>

#include "padiclab/padic.hpp"

namespace padiclab {

/// Legendre symbol (a/p) via the Euler criterion; p an odd prime.
int legendre_symbol(const mpz_class& a, std::int64_t p);

/// Fermat quotient q_p(a) = (a^{p-1} - 1)/p modulo p^K; requires p ∤ a.
/// a^{p-1} is taken modulo p^{K+1} internally, so the full K digits of the
/// quotient are exact.
PadicNumber fermat_quotient(const mpz_class& a, ModContextPtr ctx);

/// Exact Fermat quotient as a rational integer.
Rational fermat_quotient_exact(const mpz_class& a, std::int64_t p);

/// n-th terms (u_n(x), v_n(x)) of the Lucas sequences with
/// u_0=0, u_1=1, v_0=2, v_1=x and t_{n+1} = x t_n - t_{n-1}.
/// Exact big-integer mode, fast doubling.
std::pair<mpz_class, mpz_class> lucas_uv(const mpz_class& n,
                                         const mpz_class& x);

/// Same pair modulo p^K, O(log n) modular operations.
std::pair<PadicNumber, PadicNumber> lucas_uv(const mpz_class& n,
                                             const mpz_class& x,
                                             ModContextPtr ctx);

/// (F_n, L_n): Fibonacci and Lucas numbers by fast doubling.
std::pair<mpz_class, mpz_class> fib_pair(const mpz_class& n);
std::pair<PadicNumber, PadicNumber> fib_pair(const mpz_class& n,
                                             ModContextPtr ctx);

/// Generalized binomial coefficient as an (integer-valued) rational:
/// C(n,k) by falling factorial for any integer n, k >= 0; zero when
/// 0 <= n < k. Throws DomainError for k < 0.
Rational binomial_exact(const mpz_class& n, long k);

/// k-th Catalan number C(2k,k)/(k+1).
Rational catalan_exact(long k);

/// Exact binomial reduced into the p-adic world (valuation made explicit).
PadicNumber binomial_reduced(const mpz_class& n, long k, ModContextPtr ctx);

} // namespace padiclab

#endif
