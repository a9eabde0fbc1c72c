#include "padiclab/harmonic.hpp"

#include <numeric>

#include "padiclab/errors.hpp"

namespace padiclab {

Composition::Composition(std::initializer_list<int> parts)
    : parts_(parts) {
    for (int a : parts_)
        if (a < 1)
            throw DomainError("composition parts must be >= 1");
    if (parts_.empty())
        throw DomainError("composition must have at least one part");
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int a : parts_)
        if (a < 1)
            throw DomainError("composition parts must be >= 1");
    if (parts_.empty())
        throw DomainError("composition must have at least one part");
}

Composition Composition::ones(int j) {
    if (j < 1)
        throw DomainError("ones(j) needs j >= 1");
    return Composition(std::vector<int>(std::size_t(j), 1));
}

int Composition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Rational h_exact(const Composition& c, long n) {
    if (n < 0)
        throw DomainError("harmonic sum with negative bound");
    if (n < c.depth())
        return Rational(0);
    // row[k] = H(prefix; k); the empty prefix is identically 1.
    std::vector<Rational> row(std::size_t(n) + 1, Rational(1));
    for (int a : c.parts()) {
        Rational acc(0);
        Rational prev_row_km1 = row[0];
        row[0] = Rational(0);
        for (long k = 1; k <= n; ++k) {
            acc += prev_row_km1 / Rational(mpz_class(k)).pow(a);
            prev_row_km1 = row[std::size_t(k)];
            row[std::size_t(k)] = acc;
        }
    }
    return row[std::size_t(n)];
}

namespace {

Rational h_enum_rec(const std::vector<int>& parts, std::size_t i, long min_k,
                    long n) {
    if (i == parts.size())
        return Rational(1);
    Rational sum(0);
    for (long k = min_k; k <= n; ++k) {
        Rational term = Rational(1) / Rational(mpz_class(k)).pow(parts[i]);
        sum += term * h_enum_rec(parts, i + 1, k + 1, n);
    }
    return sum;
}

} // namespace

Rational h_exact_enumerated(const Composition& c, long n) {
    if (n < 0)
        throw DomainError("harmonic sum with negative bound");
    return h_enum_rec(c.parts(), 0, 1, n);
}

PadicNumber h_mod(const Composition& c, long n, ModContextPtr ctx) {
    if (n < 0)
        throw DomainError("harmonic sum with negative bound");
    if (n >= ctx->p())
        throw DomainError("h_mod requires n < p (index " + std::to_string(n) +
                          " not invertible mod " + std::to_string(ctx->p()) +
                          ")");
    const int K = ctx->precision();
    if (n < c.depth())
        return PadicNumber::zero(std::move(ctx), K);
    const u128 m = ctx->modulus();
    std::vector<u128> row(std::size_t(n) + 1, 1);
    for (int a : c.parts()) {
        u128 acc = 0;
        u128 prev_row_km1 = row[0];
        row[0] = 0;
        for (long k = 1; k <= n; ++k) {
            u128 invk = ctx->inv_small(k);
            u128 w = invk;
            for (int e = 1; e < a; ++e)
                w = mulmod(w, invk, m);
            acc = addmod(acc, mulmod(prev_row_km1, w, m), m);
            prev_row_km1 = row[std::size_t(k)];
            row[std::size_t(k)] = acc;
        }
    }
    return padic_from_residue(row[std::size_t(n)], std::move(ctx), K);
}

u128 power_sum_mod(long m, const ModContext& ctx) {
    if (m < 0)
        throw DomainError("power sum with negative exponent");
    u128 acc = 0;
    const u128 mod = ctx.modulus();
    for (std::int64_t k = 1; k < ctx.p(); ++k)
        acc = addmod(acc, powmod(u128(k), u128(m), mod), mod);
    return acc;
}

namespace {

template <typename V, typename Field>
V ones_from_powers(int j, const V* P, const Field& f) {
    switch (j) {
    case 1:
        return P[1];
    case 2:
        return f.div_int(f.sub(f.mul(P[1], P[1]), P[2]), 2);
    case 3: {
        V t = f.mul(f.mul(P[1], P[1]), P[1]);
        t = f.sub(t, f.mul_int(f.mul(P[1], P[2]), 3));
        t = f.add(t, f.mul_int(P[3], 2));
        return f.div_int(t, 6);
    }
    case 4: {
        V p1sq = f.mul(P[1], P[1]);
        V t = f.mul(p1sq, p1sq);
        t = f.sub(t, f.mul_int(f.mul(p1sq, P[2]), 6));
        t = f.add(t, f.mul_int(f.mul(P[1], P[3]), 8));
        t = f.add(t, f.mul_int(f.mul(P[2], P[2]), 3));
        t = f.sub(t, f.mul_int(P[4], 6));
        return f.div_int(t, 24);
    }
    default:
        throw DomainError("h_ones supports j in 1..4");
    }
}

struct RationalField {
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational mul_int(const Rational& a, long c) const { return a * Rational(c); }
    Rational div_int(const Rational& a, long c) const { return a / Rational(c); }
};

struct PadicField {
    PadicNumber add(const PadicNumber& a, const PadicNumber& b) const {
        return a + b;
    }
    PadicNumber sub(const PadicNumber& a, const PadicNumber& b) const {
        return a - b;
    }
    PadicNumber mul(const PadicNumber& a, const PadicNumber& b) const {
        return a * b;
    }
    PadicNumber mul_int(const PadicNumber& a, long c) const {
        return a * PadicNumber::from_int(a.context(), c);
    }
    PadicNumber div_int(const PadicNumber& a, long c) const {
        return a / PadicNumber::from_int(a.context(), c);
    }
};

} // namespace

Rational h_ones(int j, long n) {
    if (j < 1 || j > 4)
        throw DomainError("h_ones supports j in 1..4");
    Rational P[5];
    for (int r = 1; r <= j; ++r)
        P[r] = h_exact(Composition{r}, n);
    return ones_from_powers<Rational>(j, P, RationalField{});
}

PadicNumber h_ones_mod(int j, long n, ModContextPtr ctx) {
    if (j < 1 || j > 4)
        throw DomainError("h_ones supports j in 1..4");
    if (j >= 2 && ctx->p() == 3)
        throw DomainError("h_ones_mod needs p >= 5 for j >= 2");
    PadicNumber P[5] = {PadicNumber::one(ctx), PadicNumber::one(ctx),
                        PadicNumber::one(ctx), PadicNumber::one(ctx),
                        PadicNumber::one(ctx)};
    for (int r = 1; r <= j; ++r)
        P[r] = h_mod(Composition{r}, n, ctx);
    return ones_from_powers<PadicNumber>(j, P, PadicField{});
}

Rational expand_binomial_via_h(long n, long k, BinomialVariant variant) {
    if (k < 1 || k > n - 1)
        throw DomainError("expand_binomial_via_h needs 1 <= k <= n-1");
    // e[j] = H({1}^j; m), grown with the Pascal-type recurrence
    // H({1}^j; m) = H({1}^j; m-1) + H({1}^{j-1}; m-1)/m up to m = k-1.
    std::vector<Rational> e(std::size_t(k), Rational(0));
    e[0] = Rational(1);
    for (long m = 1; m <= k - 1; ++m) {
        for (long j = std::min<long>(m, k - 1); j >= 1; --j)
            e[std::size_t(j)] += e[std::size_t(j - 1)] / Rational(m);
    }
    Rational nn{mpz_class(n)};
    Rational sum(0), power(1);
    const Rational base = variant == BinomialVariant::falling ? -nn : nn;
    for (long j = 0; j <= k - 1; ++j) {
        sum += power * e[std::size_t(j)];
        power *= base;
    }
    Rational result = nn / Rational(mpz_class(k)) * sum;
    if (variant == BinomialVariant::falling && k % 2 == 0)
        result = -result;
    return result;
}

} // namespace padiclab
