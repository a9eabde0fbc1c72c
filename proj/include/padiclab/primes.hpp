#ifndef PADICLAB_PRIMES_HPP
#define PADICLAB_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace padiclab {

bool is_prime(std::int64_t n);

/// All primes in [lo, hi], ascending.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

} // namespace padiclab

#endif
