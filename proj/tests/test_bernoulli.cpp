#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padiclab/bernoulli.hpp"
#include "padiclab/errors.hpp"
#include "padiclab/primes.hpp"

using namespace padiclab;

namespace {

bool same_value(const PadicNumber& a, const PadicNumber& b) {
    long t = std::min(a.abs_precision(), b.abs_precision());
    return padic_congruent(a, b, int(t));
}

} // namespace

TEST_CASE("exact Bernoulli numbers") {
    CHECK(bernoulli_exact(0) == Rational(1));
    CHECK(bernoulli_exact(1) == Rational(-1, 2));
    CHECK(bernoulli_exact(4) == Rational(-1, 30));
    CHECK(bernoulli_exact(3) == Rational(0));
    CHECK(bernoulli_exact(12) == Rational(-691, 2730));
    CHECK(bernoulli_exact(64).is_zero() == false);
    CHECK_THROWS_AS(bernoulli_exact(65), DomainError);
    CHECK_THROWS_AS(bernoulli_exact(-1), DomainError);
    for (long n = 3; n <= 63; n += 2)
        CHECK(bernoulli_exact(n) == Rational(0));
}

TEST_CASE("von Staudt-Clausen denominators") {
    CHECK(von_staudt_denominator(4) == 30);
    CHECK(von_staudt_denominator(12) == 2730);
    CHECK(von_staudt_denominator(2) == 6);
    CHECK_THROWS_AS(von_staudt_denominator(3), DomainError);
    for (long n = 2; n <= 64; n += 2)
        CHECK(von_staudt_denominator(n) == bernoulli_exact(n).denominator());
}

TEST_CASE("bernoulli_mod fixed values") {
    auto c7 = ModContext::create(7, 3);
    CHECK(bernoulli_mod(4, *c7, 1) == 3); // B_4 = -1/30 == 3 (mod 7)
    CHECK_THROWS_AS(bernoulli_mod(5, *c7, 1), DomainError);
    CHECK_THROWS_AS(bernoulli_mod(12, *c7, 1), IrregularIndex); // 6 | 12

    auto c11 = ModContext::create(11, 3);
    // B_18 == 18 * (B_8/8) (mod 11) by Kummer; check against the exact B_18
    CHECK(bernoulli_mod(18, *c11, 1) ==
          reduce_mod(bernoulli_exact(18), c11).residue(1).second);
}

namespace {

// The Faulhaber truncation at K_b digits touches B_{m-2j} for
// 2j+1 <= K_b; a pole there violates bernoulli_mod's precondition.
bool faulhaber_indices_regular(long m, long p, int K_b) {
    for (int j = 1; 2 * j + 1 <= K_b && 2 * j <= m; ++j) {
        long idx = m - 2 * j;
        if (idx > 0 && idx % (p - 1) == 0)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("bernoulli_mod agrees with the exact path on the full grid") {
    int checked = 0, rejected = 0;
    for (long p : primes_in_range(3, 61)) {
        for (int K = 1; K <= 3; ++K) {
            auto ctx = ModContext::create(p, K + 1);
            for (long m = 2; m <= 64; m += 2) {
                if (m % (p - 1) == 0)
                    continue;
                if (!faulhaber_indices_regular(m, p, K)) {
                    CHECK_THROWS_AS(bernoulli_mod(m, *ctx, K), IrregularIndex);
                    ++rejected;
                    continue;
                }
                u128 got = bernoulli_mod(m, *ctx, K);
                auto want = reduce_mod(bernoulli_exact(m),
                                       ModContext::create(p, K));
                CHECK(same_value(padic_from_residue(got, ctx, K), want));
                ++checked;
            }
        }
    }
    CHECK(checked > 1000);
    CHECK(rejected > 0); // e.g. (p=5, m=6, K=3) needs the irregular B_4
}

TEST_CASE("bernoulli quotients") {
    auto c7 = ModContext::create(7, 3);
    auto q = bernoulli_quotient_mod(4, 4, c7, 1); // B_{p-3}/(p-3) at p=7
    CHECK(q.residue(1) == std::pair<long, u128>{0, 6});
    CHECK(same_value(q, reduce_mod(bernoulli_exact(4) / Rational(4),
                                   ModContext::create(7, 1))));

    auto c11 = ModContext::create(11, 3);
    auto q2 = bernoulli_quotient_mod(6, 6, c11, 2); // B_{p-5}/(p-5) at p=11
    CHECK(same_value(q2, reduce_mod(bernoulli_exact(6) / Rational(6),
                                    ModContext::create(11, 2))));

    CHECK_THROWS_AS(bernoulli_quotient_mod(4, 14, c7, 1), NotInvertible);
}

TEST_CASE("bernoulli_quotient_padic degrades past von Staudt poles") {
    // At p=7, B_16 at 6 digits would need B_12 (irregular, 6 | 12); the
    // best-effort variant falls back to 4 digits instead of failing.
    auto c7 = ModContext::create(7, 7);
    CHECK_THROWS_AS(bernoulli_quotient_mod(16, 16, c7, 6), IrregularIndex);
    auto q = bernoulli_quotient_padic(16, 16, c7, 6);
    CHECK(q.abs_precision() >= 1);
    auto want = reduce_mod(bernoulli_exact(16) / Rational(16),
                           ModContext::create(7, 4));
    CHECK(same_value(q, want));
    // still refuses the genuinely irregular main index
    CHECK_THROWS_AS(bernoulli_quotient_padic(12, 12, c7, 3), IrregularIndex);
}

TEST_CASE("Voronoi quotient matches the exact B_m/m") {
    for (long p : primes_in_range(3, 61)) {
        for (long m = 2; m <= 64; m += 2) {
            if (m % (p - 1) == 0)
                continue;
            // exact B_m/m is p-integral here (Adams); reduce and compare
            auto ctx = ModContext::create(p, 1);
            auto exact = reduce_mod(bernoulli_exact(m) / Rational(m), ctx);
            u128 want = exact.is_zero() ? 0 : exact.residue(1).second;
            for (long a : {2L, 3L}) {
                mpz_class am;
                mpz_powm_ui(am.get_mpz_t(), mpz_class(a).get_mpz_t(),
                            static_cast<unsigned long>(m),
                            mpz_class(p).get_mpz_t());
                if (am == 1)
                    continue; // Voronoi base unusable for this (a, m)
                CHECK(bernoulli_quotient_voronoi(m, a, p) == want);
            }
        }
    }
}

TEST_CASE("Kummer congruences") {
    auto c11 = ModContext::create(11, 2);
    CHECK(kummer_check(18, 8, c11));
    CHECK(kummer_check(8, 8, c11));
    auto c7 = ModContext::create(7, 2);
    CHECK(kummer_check(10, 4, c7));
    CHECK_THROWS_AS(kummer_check(12, 6, c7), IrregularIndex);
    CHECK_THROWS_AS(kummer_check(10, 8, c7), DomainError);

    for (long p : primes_in_range(3, 61)) {
        auto ctx = ModContext::create(p, 2);
        for (long m1 = 2; m1 <= 64; m1 += 2) {
            if (m1 % (p - 1) == 0)
                continue;
            for (long m2 = m1; m2 <= 64; m2 += 2) {
                if ((m2 - m1) % (p - 1) != 0)
                    continue;
                CHECK(kummer_check(m1, m2, ctx));
            }
        }
    }
}
