#ifndef PADICLAB_HARMONIC_HPP
#define PADICLAB_HARMONIC_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "padiclab/padic.hpp"

namespace padiclab {

/// Exponent tuple (a_1,...,a_r) of a multiple harmonic sum
/// H(a_1,...,a_r; n) = sum over 1 <= k_1 < ... < k_r <= n of
/// 1/(k_1^{a_1} ... k_r^{a_r}). All parts >= 1.
class Composition {
public:
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    /// j parts equal to 1 ({1}^j); j = 0 is the empty composition.
    static Composition ones(int j);

    const std::vector<int>& parts() const { return parts_; }
    int depth() const { return int(parts_.size()); }
    int weight() const;
    std::string str() const;

private:
    std::vector<int> parts_;
};

/// Exact value by the prefix recursion
/// H(a_1..a_r; n) = sum_{k=r}^{n} H(a_1..a_{r-1}; k-1)/k^{a_r}, O(n r).
Rational h_exact(const Composition& c, long n);

/// Brute-force enumeration over all increasing index tuples; the test
/// oracle for h_exact (exponential, keep n small).
Rational h_exact_enumerated(const Composition& c, long n);

/// H(a_1..a_r; n) modulo p^K by the same prefix recursion over residues.
/// Rejects n >= p (indices would not all be invertible).
PadicNumber h_mod(const Composition& c, long n, ModContextPtr ctx);

/// S(m) = sum_{k=1}^{p-1} k^m modulo p^K.
u128 power_sum_mod(long m, const ModContext& ctx);

/// H({1}^j; n) for j in 1..4 from the power-style sums H(1;n)..H(4;n)
/// via the Newton-type formulas (e.g. 2 H({1}^2) = H(1)^2 - H(2)).
Rational h_ones(int j, long n);
PadicNumber h_ones_mod(int j, long n, ModContextPtr ctx);

enum class BinomialVariant { falling, rising };

/// Binomial coefficients through the harmonic-sum expansions
///   C(n,k)     = (n/k) (-1)^{k-1} sum_j (-n)^j H({1}^j; k-1)
///   C(n+k-1,k) = (n/k)           sum_j   n^j  H({1}^j; k-1)
/// for 1 <= k <= n-1; agrees with binomial_exact.
Rational expand_binomial_via_h(long n, long k, BinomialVariant variant);

} // namespace padiclab

#endif
