#include "padiclab/modcontext.hpp"

#include "padiclab/errors.hpp"
#include "padiclab/primes.hpp"

namespace padiclab {

std::shared_ptr<const ModContext> ModContext::create(std::int64_t p, int K) {
    if (p < 3 || !is_prime(p))
        throw DomainError("ModContext requires an odd prime p >= 3, got " +
                          std::to_string(p));
    if (K < 1)
        throw DomainError("ModContext requires K >= 1");

    auto ctx = std::shared_ptr<ModContext>(new ModContext());
    ctx->p_ = p;
    ctx->K_ = K;
    ctx->pw_.resize(std::size_t(K) + 1);
    ctx->pw_[0] = 1;
    for (int j = 1; j <= K; ++j)
        ctx->pw_[std::size_t(j)] = checked_pow_u128(std::uint64_t(p), j);

    // Batch inversion of 1..p-1: one real inverse plus O(p) multiplications.
    const u128 m = ctx->modulus();
    std::vector<u128> prefix(static_cast<std::size_t>(p)); // prefix[k] = k! mod p^K
    prefix[0] = 1;
    for (std::int64_t k = 1; k < p; ++k)
        prefix[std::size_t(k)] = mulmod(prefix[std::size_t(k - 1)], u128(k), m);
    u128 run = inverse_mod_prime_power(prefix[std::size_t(p - 1)],
                                       std::uint64_t(p), m);
    ctx->inv_.resize(std::size_t(p));
    for (std::int64_t k = p - 1; k >= 1; --k) {
        ctx->inv_[std::size_t(k)] = mulmod(run, prefix[std::size_t(k - 1)], m);
        run = mulmod(run, u128(k), m);
    }
    return ctx;
}

u128 ModContext::inverse(u128 a) const {
    a %= modulus();
    if (a < std::uint64_t(p_) && a > 0)
        return inv_[std::size_t(a)];
    return inverse_mod_prime_power(a, std::uint64_t(p_), modulus());
}

u128 ModContext::reduce_int(const mpz_class& z) const {
    mpz_class m = u128_to_mpz(modulus());
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
    return mpz_to_u128(r);
}

u128 ModContext::reduce_int(std::int64_t z) const {
    if (z >= 0)
        return u128(z) % modulus();
    u128 r = u128(-(z + 1)) + 1; // |z| without overflow at INT64_MIN
    r %= modulus();
    return r == 0 ? 0 : modulus() - r;
}

u128 mod_inverse(const mpz_class& a, const ModContext& ctx) {
    return ctx.inverse(ctx.reduce_int(a));
}

} // namespace padiclab
