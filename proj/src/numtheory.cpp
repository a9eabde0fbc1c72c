#include "padiclab/numtheory.hpp"

#include "padiclab/errors.hpp"

namespace padiclab {

int legendre_symbol(const mpz_class& a, std::int64_t p) {
    if (p < 3 || p % 2 == 0)
        throw DomainError("Legendre symbol needs an odd prime modulus");
    mpz_class pp(static_cast<long>(p)), r;
    mpz_class e = (pp - 1) / 2;
    mpz_powm(r.get_mpz_t(), mpz_class(a % pp).get_mpz_t(), e.get_mpz_t(),
             pp.get_mpz_t());
    if (r == 0)
        return 0;
    return r == 1 ? 1 : -1;
}

PadicNumber fermat_quotient(const mpz_class& a, ModContextPtr ctx) {
    const mpz_class p(static_cast<long>(ctx->p()));
    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()))
        throw NotInvertible("Fermat quotient of a multiple of p");
    // One digit beyond the context: q_p(a) mod p^K needs a^{p-1} mod p^{K+1}.
    mpz_class mod1;
    mpz_pow_ui(mod1.get_mpz_t(), p.get_mpz_t(),
               static_cast<unsigned long>(ctx->precision()) + 1);
    mpz_class r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), mpz_class(p - 1).get_mpz_t(),
             mod1.get_mpz_t());
    mpz_class q = (r - 1) / p; // exact: a^{p-1} == 1 (mod p)
    return reduce_mod(Rational(q), std::move(ctx));
}

Rational fermat_quotient_exact(const mpz_class& a, std::int64_t p) {
    const mpz_class pp(static_cast<long>(p));
    if (mpz_divisible_p(a.get_mpz_t(), pp.get_mpz_t()))
        throw NotInvertible("Fermat quotient of a multiple of p");
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(),
               static_cast<unsigned long>(p - 1));
    return Rational(mpz_class((r - 1) / pp));
}

namespace {

// One doubling step on the pair (u_n, v_n):
//   u_{2n} = u_n v_n,     v_{2n} = v_n^2 - 2,
//   u_{n+1} = (x u_n + v_n)/2,  v_{n+1} = (D u_n + x v_n)/2,  D = x^2 - 4.
template <typename Num, typename Ops>
std::pair<Num, Num> lucas_doubling(const mpz_class& n, const Num& x,
                                   const Ops& ops) {
    Num u = ops.from_int(0), v = ops.from_int(2);
    Num disc = ops.sub(ops.mul(x, x), ops.from_int(4));
    for (std::size_t i = mpz_sizeinbase(n.get_mpz_t(), 2); i-- > 0;) {
        Num u2 = ops.mul(u, v);
        Num v2 = ops.sub(ops.mul(v, v), ops.from_int(2));
        if (mpz_tstbit(n.get_mpz_t(), i)) {
            u = ops.halve(ops.add(ops.mul(x, u2), v2));
            v = ops.halve(ops.add(ops.mul(disc, u2), ops.mul(x, v2)));
        } else {
            u = u2;
            v = v2;
        }
    }
    return {u, v};
}

struct ExactOps {
    mpz_class from_int(long v) const { return mpz_class(v); }
    mpz_class add(const mpz_class& a, const mpz_class& b) const { return a + b; }
    mpz_class sub(const mpz_class& a, const mpz_class& b) const { return a - b; }
    mpz_class mul(const mpz_class& a, const mpz_class& b) const { return a * b; }
    mpz_class halve(const mpz_class& a) const { return a / 2; } // always even
};

struct ModOps {
    const ModContext& ctx;
    u128 inv2;
    u128 from_int(long v) const { return ctx.reduce_int(std::int64_t(v)); }
    u128 add(u128 a, u128 b) const { return ctx.add(a, b); }
    u128 sub(u128 a, u128 b) const { return ctx.sub(a, b); }
    u128 mul(u128 a, u128 b) const { return ctx.mul(a, b); }
    u128 halve(u128 a) const { return ctx.mul(a, inv2); }
};

} // namespace

std::pair<mpz_class, mpz_class> lucas_uv(const mpz_class& n,
                                         const mpz_class& x) {
    if (n < 0)
        throw DomainError("lucas_uv: negative index");
    if (n == 0)
        return {mpz_class(0), mpz_class(2)};
    return lucas_doubling<mpz_class>(n, x, ExactOps{});
}

std::pair<PadicNumber, PadicNumber> lucas_uv(const mpz_class& n,
                                             const mpz_class& x,
                                             ModContextPtr ctx) {
    if (n < 0)
        throw DomainError("lucas_uv: negative index");
    ModOps ops{*ctx, ctx->inverse(2)};
    auto [u, v] = lucas_doubling<u128>(n, ctx->reduce_int(x), ops);
    const int K = ctx->precision();
    return {padic_from_residue(u, ctx, K), padic_from_residue(v, ctx, K)};
}

std::pair<mpz_class, mpz_class> fib_pair(const mpz_class& n) {
    if (n < 0)
        throw DomainError("fib_pair: negative index");
    // (F_{2n}, L_{2n}) = (F_n L_n, L_n^2 - 2(-1)^n);
    // (F_{n+1}, L_{n+1}) = ((F_n + L_n)/2, (5 F_n + L_n)/2).
    mpz_class f = 0, l = 2;
    int sign = 1; // (-1)^n for the current index
    for (std::size_t i = mpz_sizeinbase(n.get_mpz_t(), 2); i-- > 0;) {
        mpz_class f2 = f * l;
        mpz_class l2 = l * l - 2 * sign;
        sign = 1;
        if (mpz_tstbit(n.get_mpz_t(), i)) {
            f = (f2 + l2) / 2;
            l = (5 * f2 + l2) / 2;
            sign = -1;
        } else {
            f = f2;
            l = l2;
        }
    }
    if (n == 0)
        return {mpz_class(0), mpz_class(2)};
    return {f, l};
}

std::pair<PadicNumber, PadicNumber> fib_pair(const mpz_class& n,
                                             ModContextPtr ctx) {
    auto [f, l] = fib_pair(n);
    return {PadicNumber::from_int(ctx, f), PadicNumber::from_int(ctx, l)};
}

Rational binomial_exact(const mpz_class& n, long k) {
    if (k < 0)
        throw DomainError("binomial with negative k");
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational catalan_exact(long k) {
    if (k < 0)
        throw DomainError("Catalan number with negative index");
    return binomial_exact(mpz_class(2 * k), k) / Rational(k + 1);
}

PadicNumber binomial_reduced(const mpz_class& n, long k, ModContextPtr ctx) {
    return reduce_mod(binomial_exact(n, k), std::move(ctx));
}

} // namespace padiclab
