#ifndef PADICLAB_PADIC_HPP
#define PADICLAB_PADIC_HPP

#include <string>

#include "padiclab/modcontext.hpp"
#include "padiclab/rational.hpp"

namespace padiclab {

/// Fixed-precision p-adic value p^v * u with u a unit known modulo p^N.
/// A value is either nonzero -- valuation v, unit u in [0, p^N) coprime to
/// p, unit precision N >= 1 -- or certified zero modulo p^absprec. In both
/// cases the value is known exactly modulo p^absprec (absprec = v + N for
/// nonzero values). Arithmetic never reports more precision than the
/// propagation rules allow; a result that would carry no significant
/// digits raises InsufficientPrecision instead of going silently wrong.
class PadicNumber {
public:
    static PadicNumber zero(ModContextPtr ctx, long absprec);
    static PadicNumber from_unit(ModContextPtr ctx, long val, u128 unit,
                                 int uprec);
    static PadicNumber one(ModContextPtr ctx);
    static PadicNumber from_int(ModContextPtr ctx, const mpz_class& z);
    static PadicNumber from_int(ModContextPtr ctx, std::int64_t z);

    const ModContextPtr& context() const { return ctx_; }
    bool is_zero() const { return zero_; }

    /// Valuation of a nonzero value; throws DomainError on certified zero.
    long valuation() const;
    /// Unit part of a nonzero value, in [0, p^unit_precision()).
    u128 unit() const;
    int unit_precision() const;
    /// The value is known exactly modulo p^abs_precision().
    long abs_precision() const { return absprec_; }

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

    PadicNumber inverse() const;
    PadicNumber pow(const mpz_class& e) const;

    /// Forget digits beyond p^absprec.
    PadicNumber truncate(long absprec) const;

    /// Canonical residue modulo p^t: (min(v,t), unit mod p^{t-v}), with the
    /// convention (t, 0) when the value is divisible by p^t. Throws
    /// InsufficientPrecision when t digits are not certified.
    std::pair<long, u128> residue(int t) const;

    std::string str() const;

private:
    PadicNumber() = default;

    ModContextPtr ctx_;
    bool zero_ = true;
    long val_ = 0;   // nonzero only
    int uprec_ = 0;  // nonzero only
    long absprec_ = 0;
    u128 unit_ = 0;
};

PadicNumber padic_add(const PadicNumber& x, const PadicNumber& y);
PadicNumber padic_mul(const PadicNumber& x, const PadicNumber& y);
PadicNumber padic_inv(const PadicNumber& x);

/// Residue r known modulo p^digits -> p-adic value (valuation extracted).
PadicNumber padic_from_residue(u128 r, ModContextPtr ctx, int digits);

/// Exact rational -> p-adic at the context's full precision. Total on
/// rationals (any valuation); the zero rational maps to certified zero.
PadicNumber reduce_mod(const Rational& r, ModContextPtr ctx);

/// True iff val_p(x - y) >= t; throws InsufficientPrecision when the
/// difference is zero to available precision but that precision is < t.
bool padic_congruent(const PadicNumber& x, const PadicNumber& y, int t);

} // namespace padiclab

#endif
