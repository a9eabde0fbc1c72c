#include "padiclab/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "padiclab/errors.hpp"
#include "padiclab/harmonic.hpp"
#include "padiclab/numtheory.hpp"
#include "padiclab/primes.hpp"

namespace padiclab {

namespace {

std::mutex table_mutex;
std::vector<Rational> bernoulli_table; // guarded by table_mutex

void grow_table(long n) {
    if (bernoulli_table.empty())
        bernoulli_table.push_back(Rational(1));
    for (long i = long(bernoulli_table.size()); i <= n; ++i) {
        Rational sum(0);
        for (long j = 0; j < i; ++j)
            sum += binomial_exact(mpz_class(i + 1), j) * bernoulli_table[std::size_t(j)];
        bernoulli_table.push_back(-sum / Rational(i + 1));
    }
}

} // namespace

Rational bernoulli_exact(long n, long cap) {
    if (n < 0)
        throw DomainError("Bernoulli number with negative index");
    if (n > cap)
        throw DomainError("bernoulli_exact index " + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));
    std::lock_guard<std::mutex> lock(table_mutex);
    grow_table(n);
    return bernoulli_table[std::size_t(n)];
}

mpz_class von_staudt_denominator(long n) {
    if (n < 2 || n % 2 != 0)
        throw DomainError("von Staudt-Clausen denominator needs even n >= 2");
    mpz_class d(1);
    for (long q = 2; q - 1 <= n; ++q) {
        if (n % (q - 1) == 0 && is_prime(q))
            d *= q;
    }
    return d;
}

u128 bernoulli_mod(long m, const ModContext& ctx, int K_b) {
    if (m == 0)
        return 1 % ctx.pow_p(K_b);
    if (m < 0 || m % 2 != 0)
        throw DomainError("bernoulli_mod needs even m >= 0");
    if (K_b < 1 || K_b + 1 > ctx.precision())
        throw DomainError("bernoulli_mod needs 1 <= K_b <= ctx.precision()-1");
    const long p = ctx.p();
    if (m % (p - 1) == 0)
        throw IrregularIndex("B_" + std::to_string(m) + " has a von Staudt pole at p=" +
                             std::to_string(p) + " ((p-1) | m)");

    const u128 mod1 = ctx.pow_p(K_b + 1); // p^{K_b+1}
    u128 rhs = power_sum_mod(m, ctx) % mod1;

    // Subtract the correction terms c_j p^{2j+1} B_{m-2j} with
    // c_j = m(m-1)...(m-2j+1)/(2j+1)!.
    mpz_class falling(1), odd_fact(1);
    for (int j = 1; 2 * j + 1 <= K_b && 2 * j <= m; ++j) {
        falling *= mpz_class(m - 2 * j + 2) * mpz_class(m - 2 * j + 1);
        odd_fact *= mpz_class(2 * j) * mpz_class(2 * j + 1);
        const long idx = m - 2 * j;
        u128 b;
        if (idx == 0) {
            b = 1;
        } else {
            if (idx % (p - 1) == 0)
                throw IrregularIndex("correction index B_" + std::to_string(idx) +
                                     " has a von Staudt pole at p=" +
                                     std::to_string(p));
            b = bernoulli_mod(idx, ctx, K_b - 2 * j);
        }
        if (mpz_divisible_ui_p(odd_fact.get_mpz_t(), static_cast<unsigned long>(p)))
            throw DomainError("Faulhaber coefficient (2j+1)! not invertible at p=" +
                              std::to_string(p));
        u128 coeff = mulmod(mpz_to_u128(mpz_class(falling % u128_to_mpz(mod1))),
                            inverse_mod_prime_power(
                                mpz_to_u128(mpz_class(odd_fact % u128_to_mpz(mod1))),
                                std::uint64_t(p), mod1),
                            mod1);
        u128 term = mulmod(coeff, mulmod(ctx.pow_p(2 * j + 1) % mod1, b, mod1), mod1);
        rhs = submod(rhs, term, mod1);
    }

    // rhs == p * B_m (mod p^{K_b+1}); the division is exact.
    if (rhs % u128(p) != 0)
        throw Error("Faulhaber inversion: sum not divisible by p (internal)");
    return (rhs / u128(p)) % ctx.pow_p(K_b);
}

PadicNumber bernoulli_quotient_mod(long m, const mpz_class& d,
                                   ModContextPtr ctx, int K_b) {
    if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(ctx->p())))
        throw NotInvertible("Bernoulli quotient divisor divisible by p");
    const u128 mod = ctx->pow_p(K_b);
    u128 b = bernoulli_mod(m, *ctx, K_b);
    mpz_class dr;
    mpz_fdiv_r(dr.get_mpz_t(), d.get_mpz_t(), u128_to_mpz(mod).get_mpz_t());
    u128 q = mulmod(b, inverse_mod_prime_power(mpz_to_u128(dr),
                                               std::uint64_t(ctx->p()), mod),
                    mod);
    return padic_from_residue(q, std::move(ctx), K_b);
}

PadicNumber bernoulli_quotient_padic(long m, const mpz_class& d,
                                     ModContextPtr ctx, int max_digits) {
    int K_b = std::min<long>(max_digits, ctx->precision() - 1);
    const long p = ctx->p();
    // Largest truncation depth whose correction indices are all regular.
    for (int j = 1; 2 * j + 1 <= K_b && 2 * j <= m; ++j) {
        const long idx = m - 2 * j;
        if (idx > 0 && idx % (p - 1) == 0) {
            K_b = 2 * j;
            break;
        }
        if (p <= 2 * j + 1) {
            K_b = 2 * j;
            break;
        }
    }
    if (K_b < 1)
        throw InsufficientPrecision("no regular Faulhaber truncation for B_" +
                                    std::to_string(m) + " at p=" +
                                    std::to_string(p));
    return bernoulli_quotient_mod(m, d, std::move(ctx), K_b);
}

namespace {

long primitive_root(long p) {
    std::vector<long> qs;
    long n = p - 1;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            qs.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        qs.push_back(n);
    for (long g = 2;; ++g) {
        bool ok = true;
        for (long q : qs) {
            if (powmod(u128(g), u128((p - 1) / q), u128(p)) == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return g;
    }
}

} // namespace

u128 bernoulli_quotient_voronoi(long m, long a, long p) {
    // (a^m - 1) B_m/m == a^{m-1} sum_{j<p} j^{m-1} floor(ja/p)  (mod p);
    // solvable for B_m/m whenever a^m != 1, e.g. a a primitive root.
    const u128 pm = u128(p);
    u128 s = 0;
    for (long j = 1; j < p; ++j) {
        u128 t = powmod(u128(j), u128(m - 1), pm);
        s = addmod(s, mulmod(t, u128((j * a / p) % p), pm), pm);
    }
    u128 coeff = submod(powmod(u128(a), u128(m), pm), 1, pm);
    if (coeff == 0)
        throw DomainError("Voronoi base a with a^m == 1 (mod p)");
    u128 rhs = mulmod(powmod(u128(a), u128(m - 1), pm), s, pm);
    return mulmod(rhs, powmod(coeff, pm - 2, pm), pm);
}

bool kummer_check(long m1, long m2, ModContextPtr ctx) {
    const long p = ctx->p();
    if (m1 % 2 != 0 || m2 % 2 != 0 || m1 <= 0 || m2 <= 0)
        throw DomainError("kummer_check needs positive even indices");
    if ((m1 - m2) % (p - 1) != 0)
        throw DomainError("kummer_check needs m1 == m2 (mod p-1)");
    if (m1 % (p - 1) == 0)
        throw IrregularIndex("kummer_check: (p-1) divides the index");

    // B_m/m mod p through Voronoi's congruence: independent of the
    // Faulhaber inversion, and total even when p divides m.
    const long g = primitive_root(p);
    return bernoulli_quotient_voronoi(m1, g, p) ==
           bernoulli_quotient_voronoi(m2, g, p);
}

} // namespace padiclab
