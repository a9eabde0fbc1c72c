#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "padiclab/errors.hpp"
#include "padiclab/harmonic.hpp"
#include "padiclab/numtheory.hpp"
#include "padiclab/primes.hpp"

using namespace padiclab;

namespace {

bool same_value(const PadicNumber& a, const PadicNumber& b) {
    long t = std::min(a.abs_precision(), b.abs_precision());
    return padic_congruent(a, b, int(t));
}

} // namespace

TEST_CASE("h_exact fixed values") {
    CHECK(h_exact(Composition{1}, 4) == Rational(25, 12));
    CHECK(h_exact(Composition{1, 2}, 3) == Rational(5, 12));
    CHECK(h_exact(Composition{1, 1}, 3) == Rational(1));
    CHECK(h_exact(Composition{2}, 0) == Rational(0));
    CHECK(h_exact(Composition{1, 2, 3}, 2) == Rational(0)); // n < depth

    // H(1; p-1) at p = 7
    CHECK(h_exact(Composition{1}, 6) == Rational(49, 20));
}

TEST_CASE("h_exact against brute-force enumeration") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + int(rng() % 3);
        std::vector<int> parts;
        for (int i = 0; i < r; ++i)
            parts.push_back(1 + int(rng() % 4));
        long n = long(rng() % 9);
        Composition c(parts);
        CHECK(h_exact(c, n) == h_exact_enumerated(c, n));
    }
    CHECK(h_exact(Composition{1, 2}, 3) ==
          h_exact_enumerated(Composition{1, 2}, 3));
}

TEST_CASE("h_mod fixed values and guards") {
    auto c5 = ModContext::create(5, 2);
    auto h1 = h_mod(Composition{1}, 4, c5); // 25/12: Wolstenholme at p=5
    CHECK(h1.is_zero());
    CHECK(h1.abs_precision() == 2);

    auto c5k1 = ModContext::create(5, 1);
    CHECK(h_mod(Composition{2}, 4, c5k1).is_zero());

    auto c7 = ModContext::create(7, 1);
    CHECK(same_value(h_mod(Composition{1, 2}, 6, c7),
                     reduce_mod(h_exact(Composition{1, 2}, 6), c7)));

    CHECK_THROWS_AS(h_mod(Composition{1}, 7, c7), DomainError);
    CHECK_THROWS_AS(h_mod(Composition{1}, 10, c7), DomainError);
}

TEST_CASE("h_mod equals reduce_mod(h_exact) on the suite compositions") {
    const std::vector<Composition> comps = {
        Composition{1},       Composition{2},    Composition{3},
        Composition{4},       Composition{5},    Composition{1, 2},
        Composition{2, 1},    Composition{1, 1}, Composition{1, 1, 2},
        Composition{2, 2},    Composition{1, 3}, Composition{4, 2},
        Composition{1, 1, 1, 1}};
    for (long p : primes_in_range(3, 23)) {
        for (int K = 1; K <= 5; ++K) {
            auto ctx = ModContext::create(p, K);
            for (const auto& c : comps) {
                for (long n : {p - 1, (p - 1) / 2}) {
                    CHECK(same_value(h_mod(c, n, ctx),
                                     reduce_mod(h_exact(c, n), ctx)));
                }
            }
        }
    }
}

TEST_CASE("power sums") {
    auto c5 = ModContext::create(5, 1);
    CHECK(power_sum_mod(2, *c5) == 0);
    CHECK(power_sum_mod(4, *c5) == 4); // == -1: (p-1) | 4
    auto c7 = ModContext::create(7, 1);
    CHECK(power_sum_mod(0, *c7) == 6);

    // S(m) == -1 (mod p) iff (p-1) | m, else 0
    for (long p : {5L, 7L, 11L, 13L}) {
        auto ctx = ModContext::create(p, 1);
        for (long m = 1; m <= 30; ++m) {
            u128 s = power_sum_mod(m, *ctx);
            if (m % (p - 1) == 0)
                CHECK(s == u128(p - 1));
            else
                CHECK(s == 0);
        }
    }

    // Odd-index sanity (matches B_m = 0 for odd m > 1).
    for (long p : primes_in_range(3, 100)) {
        auto ctx = ModContext::create(p, 1);
        for (long m = 3; m <= 200; m += 2)
            CHECK(power_sum_mod(m, *ctx) == 0);
    }
}

TEST_CASE("h_ones via Newton-type formulas") {
    CHECK(h_ones(2, 3) == Rational(1)); // (121/36 - 49/36)/2
    CHECK(h_ones(2, 3) == h_exact(Composition{1, 1}, 3));
    for (long n : {0L, 1L, 5L, 17L})
        CHECK(h_ones(1, n) == h_exact(Composition{1}, n));
    CHECK(h_ones(4, 5) == h_exact_enumerated(Composition{1, 1, 1, 1}, 5));
    CHECK_THROWS_AS(h_ones(5, 3), DomainError);
    CHECK_THROWS_AS(h_ones(0, 3), DomainError);

    for (int j = 1; j <= 4; ++j)
        for (long n = 0; n <= 25; ++n)
            CHECK(h_ones(j, n) == h_exact(Composition::ones(j), n));

    auto ctx = ModContext::create(13, 3);
    for (int j = 1; j <= 4; ++j)
        CHECK(same_value(h_ones_mod(j, 12, ctx),
                         h_mod(Composition::ones(j), 12, ctx)));
}

TEST_CASE("stuffle and Pascal-type relations") {
    Rational h1(0), h2(0), h11(0), h12(0), h21(0), h3(0);
    for (long n = 1; n <= 300; ++n) {
        Rational inv_n = Rational(1) / Rational(mpz_class(n));
        Rational inv_n2 = inv_n * inv_n;
        // extend all sums from n-1 to n
        h12 += h1 * inv_n2;
        h21 += h2 * inv_n;
        h11 += h1 * inv_n;
        h1 += inv_n;
        h2 += inv_n2;
        h3 += inv_n2 * inv_n;
        CHECK(h1 * h1 == Rational(2) * h11 + h2);
        CHECK(h1 * h2 == h12 + h21 + h3);
    }
    // the incremental sums above match the library evaluator
    CHECK(h12 == h_exact(Composition{1, 2}, 300));
    CHECK(h21 == h_exact(Composition{2, 1}, 300));
    CHECK(h11 == h_exact(Composition{1, 1}, 300));

    // H({1}^j; k) = H({1}^j; k-1) + H({1}^{j-1}; k-1)/k
    for (int j = 2; j <= 4; ++j) {
        for (long k = 1; k <= 40; ++k) {
            CHECK(h_exact(Composition::ones(j), k) ==
                  h_exact(Composition::ones(j), k - 1) +
                      h_exact(Composition::ones(j - 1), k - 1) /
                          Rational(mpz_class(k)));
        }
    }
}

TEST_CASE("binomial expansion through harmonic sums") {
    CHECK(expand_binomial_via_h(5, 2, BinomialVariant::falling) == Rational(10));
    CHECK(expand_binomial_via_h(5, 2, BinomialVariant::rising) == Rational(15));
    CHECK(expand_binomial_via_h(9, 1, BinomialVariant::falling) == Rational(9));
    CHECK(expand_binomial_via_h(9, 1, BinomialVariant::rising) == Rational(9));
    CHECK_THROWS_AS(expand_binomial_via_h(5, 0, BinomialVariant::falling),
                    DomainError);
    CHECK_THROWS_AS(expand_binomial_via_h(5, 5, BinomialVariant::falling),
                    DomainError);

    for (long n = 2; n <= 100; ++n) {
        for (long k = 1; k < n; ++k) {
            CHECK(expand_binomial_via_h(n, k, BinomialVariant::falling) ==
                  binomial_exact(n, k));
            CHECK(expand_binomial_via_h(n, k, BinomialVariant::rising) ==
                  binomial_exact(n + k - 1, k));
        }
    }
}
