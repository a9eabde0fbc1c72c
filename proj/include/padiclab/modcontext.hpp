#ifndef PADICLAB_MODCONTEXT_HPP
#define PADICLAB_MODCONTEXT_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "padiclab/uint128.hpp"

namespace padiclab {

/// A prime p, precision exponent K, the modulus p^K, and a table of the
/// inverses of 1..p-1 modulo p^K. Immutable once built; shared read-only
/// between workers. Construction fails unless p is an odd prime and p^K
/// fits in 127 bits.
class ModContext {
public:
    static std::shared_ptr<const ModContext> create(std::int64_t p, int K);

    std::int64_t p() const { return p_; }
    int precision() const { return K_; }
    u128 modulus() const { return pw_[K_]; }

    /// p^j for 0 <= j <= K.
    u128 pow_p(int j) const { return pw_[std::size_t(j)]; }

    /// Inverse of k modulo p^K for 1 <= k <= p-1.
    u128 inv_small(std::int64_t k) const { return inv_[std::size_t(k)]; }

    u128 add(u128 a, u128 b) const { return addmod(a, b, modulus()); }
    u128 sub(u128 a, u128 b) const { return submod(a, b, modulus()); }
    u128 mul(u128 a, u128 b) const { return mulmod(a, b, modulus()); }
    u128 pow(u128 a, u128 e) const { return powmod(a, e, modulus()); }
    u128 neg(u128 a) const { return a == 0 ? 0 : modulus() - a; }

    /// Inverse modulo p^K; throws NotInvertible when p | a.
    u128 inverse(u128 a) const;

    /// Canonical residue of z modulo p^K, in [0, p^K).
    u128 reduce_int(const mpz_class& z) const;
    u128 reduce_int(std::int64_t z) const;

private:
    ModContext() = default;

    std::int64_t p_ = 0;
    int K_ = 0;
    std::vector<u128> pw_;  // pw_[j] = p^j
    std::vector<u128> inv_; // inv_[k] for 1 <= k < p
};

using ModContextPtr = std::shared_ptr<const ModContext>;

/// a^{-1} mod p^K for any integer a coprime to p; throws NotInvertible
/// otherwise.
u128 mod_inverse(const mpz_class& a, const ModContext& ctx);

} // namespace padiclab

#endif
