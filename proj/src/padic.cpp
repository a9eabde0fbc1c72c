#include "padiclab/padic.hpp"

#include "padiclab/errors.hpp"

namespace padiclab {

namespace {

void require_same_prime(const PadicNumber& a, const PadicNumber& b) {
    if (a.context()->p() != b.context()->p())
        throw DomainError("p-adic operands over different primes");
}

// Context of the operand with the larger precision table; unit arithmetic
// below always stays within min(uprec) digits, which both tables cover.
const ModContextPtr& wider_ctx(const PadicNumber& a, const PadicNumber& b) {
    return a.context()->precision() >= b.context()->precision() ? a.context()
                                                                : b.context();
}

} // namespace

PadicNumber PadicNumber::zero(ModContextPtr ctx, long absprec) {
    if (absprec <= 0)
        throw InsufficientPrecision(
            "p-adic zero with no certified digits (precision exhausted)");
    PadicNumber x;
    x.ctx_ = std::move(ctx);
    x.zero_ = true;
    x.absprec_ = absprec;
    return x;
}

PadicNumber PadicNumber::from_unit(ModContextPtr ctx, long val, u128 unit,
                                   int uprec) {
    if (uprec < 1 || uprec > ctx->precision())
        throw DomainError("unit precision out of range");
    unit %= ctx->pow_p(uprec);
    if (unit % u128(ctx->p()) == 0)
        throw DomainError("p-adic unit divisible by p");
    PadicNumber x;
    x.ctx_ = std::move(ctx);
    x.zero_ = false;
    x.val_ = val;
    x.uprec_ = uprec;
    x.unit_ = unit;
    x.absprec_ = val + uprec;
    return x;
}

PadicNumber PadicNumber::one(ModContextPtr ctx) {
    int k = ctx->precision();
    return from_unit(std::move(ctx), 0, 1, k);
}

PadicNumber PadicNumber::from_int(ModContextPtr ctx, const mpz_class& z) {
    return reduce_mod(Rational(z), std::move(ctx));
}

PadicNumber PadicNumber::from_int(ModContextPtr ctx, std::int64_t z) {
    return from_int(std::move(ctx), mpz_class(static_cast<long>(z)));
}

long PadicNumber::valuation() const {
    if (zero_)
        throw DomainError("valuation of certified zero (>= " +
                          std::to_string(absprec_) + ")");
    return val_;
}

u128 PadicNumber::unit() const {
    if (zero_)
        throw DomainError("unit of certified zero");
    return unit_;
}

int PadicNumber::unit_precision() const {
    if (zero_)
        throw DomainError("unit precision of certified zero");
    return uprec_;
}

PadicNumber PadicNumber::operator-() const {
    if (zero_)
        return *this;
    PadicNumber x = *this;
    x.unit_ = ctx_->pow_p(uprec_) - unit_;
    return x;
}

PadicNumber padic_add(const PadicNumber& x, const PadicNumber& y) {
    require_same_prime(x, y);
    const long A = std::min(x.abs_precision(), y.abs_precision());
    if (x.is_zero() && y.is_zero())
        return PadicNumber::zero(wider_ctx(x, y), A);
    if (x.is_zero())
        return y.truncate(A);
    if (y.is_zero())
        return x.truncate(A);

    const ModContextPtr& ctx = wider_ctx(x, y);
    const long v = std::min(x.valuation(), y.valuation());
    const long D = A - v; // digits of the sum known, counting from p^v
    // D >= 1 always: abs_precision > valuation for nonzero values.
    const u128 m = ctx->pow_p(int(D));
    auto shifted = [&](const PadicNumber& z) -> u128 {
        long sh = z.valuation() - v;
        if (sh >= D)
            return 0; // contributes nothing to the known window
        return mulmod(z.unit(), ctx->pow_p(int(sh)), m);
    };
    u128 s = addmod(shifted(x), shifted(y), m);
    if (s == 0)
        return PadicNumber::zero(ctx, A);
    long e = 0;
    while (s % u128(ctx->p()) == 0) {
        s /= u128(ctx->p());
        ++e;
    }
    return PadicNumber::from_unit(ctx, v + e, s, int(D - e));
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    return padic_add(a, b);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) {
    return padic_add(a, -b);
}

PadicNumber padic_mul(const PadicNumber& x, const PadicNumber& y) {
    require_same_prime(x, y);
    if (x.is_zero() || y.is_zero()) {
        long a = x.is_zero() ? x.abs_precision() : x.valuation();
        long b = y.is_zero() ? y.abs_precision() : y.valuation();
        return PadicNumber::zero(wider_ctx(x, y), a + b);
    }
    const ModContextPtr& ctx = wider_ctx(x, y);
    int n = std::min(x.unit_precision(), y.unit_precision());
    u128 u = mulmod(x.unit(), y.unit(), ctx->pow_p(n));
    return PadicNumber::from_unit(ctx, x.valuation() + y.valuation(), u, n);
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    return padic_mul(a, b);
}

PadicNumber PadicNumber::inverse() const {
    if (zero_)
        throw NotInvertible("inverse of a p-adic zero (to precision " +
                            std::to_string(absprec_) + ")");
    u128 m = ctx_->pow_p(uprec_);
    u128 u = inverse_mod_prime_power(unit_, std::uint64_t(ctx_->p()), m);
    return from_unit(ctx_, -val_, u, uprec_);
}

PadicNumber padic_inv(const PadicNumber& x) { return x.inverse(); }

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    return padic_mul(a, b.inverse());
}

PadicNumber PadicNumber::pow(const mpz_class& e) const {
    if (e < 0)
        return inverse().pow(-e);
    if (e == 0)
        return one(ctx_);
    if (zero_) {
        mpz_class cap = absprec_ * e;
        long a = cap.fits_slong_p() ? cap.get_si() : absprec_;
        return zero(ctx_, a);
    }
    mpz_class v = val_ * e;
    if (!v.fits_slong_p())
        throw DomainError("p-adic power: valuation overflow");
    u128 u = powmod(unit_, e, ctx_->pow_p(uprec_));
    return from_unit(ctx_, v.get_si(), u, uprec_);
}

PadicNumber PadicNumber::truncate(long absprec) const {
    if (absprec >= absprec_)
        return *this;
    if (zero_ || val_ >= absprec)
        return zero(ctx_, absprec);
    PadicNumber x = *this;
    x.uprec_ = int(absprec - val_);
    x.unit_ %= ctx_->pow_p(x.uprec_);
    x.absprec_ = absprec;
    return x;
}

std::pair<long, u128> PadicNumber::residue(int t) const {
    if (zero_ || val_ >= t) {
        if (absprec_ < t)
            throw InsufficientPrecision(
                "residue mod p^" + std::to_string(t) +
                " not certified (precision " + std::to_string(absprec_) + ")");
        return {t, 0};
    }
    if (absprec_ < t)
        throw InsufficientPrecision(
            "residue mod p^" + std::to_string(t) +
            " not certified (precision " + std::to_string(absprec_) + ")");
    return {val_, unit_ % ctx_->pow_p(int(t - val_))};
}

std::string PadicNumber::str() const {
    if (zero_)
        return "O(p^" + std::to_string(absprec_) + ")";
    std::string s = to_string(unit_);
    return (val_ == 0 ? s : "p^" + std::to_string(val_) + " * " + s) +
           " + O(p^" + std::to_string(absprec_) + ")";
}

PadicNumber padic_from_residue(u128 r, ModContextPtr ctx, int digits) {
    if (digits < 1 || digits > ctx->precision())
        throw DomainError("padic_from_residue: digit count out of range");
    r %= ctx->pow_p(digits);
    if (r == 0)
        return PadicNumber::zero(std::move(ctx), digits);
    long e = 0;
    while (r % u128(ctx->p()) == 0) {
        r /= u128(ctx->p());
        ++e;
    }
    return PadicNumber::from_unit(std::move(ctx), e, r, int(digits - e));
}

PadicNumber reduce_mod(const Rational& r, ModContextPtr ctx) {
    const int K = ctx->precision();
    if (r.is_zero())
        return PadicNumber::zero(std::move(ctx), K);
    const mpz_class p(static_cast<long>(ctx->p()));
    mpz_class num = r.numerator(), den = r.denominator(), tmp;
    long a = 0, b = 0;
    if (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
        a = long(mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
        num = tmp;
    }
    if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        b = long(mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
        den = tmp;
    }
    u128 u = ctx->mul(ctx->reduce_int(num), ctx->inverse(ctx->reduce_int(den)));
    return PadicNumber::from_unit(std::move(ctx), a - b, u, K);
}

bool padic_congruent(const PadicNumber& x, const PadicNumber& y, int t) {
    PadicNumber d = x - y;
    if (d.is_zero()) {
        if (d.abs_precision() >= t)
            return true;
        throw InsufficientPrecision(
            "congruence mod p^" + std::to_string(t) +
            " undecidable: difference is zero to precision " +
            std::to_string(d.abs_precision()));
    }
    return d.valuation() >= t;
}

} // namespace padiclab
