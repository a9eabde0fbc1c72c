#include "padiclab/primes.hpp"

namespace padiclab {

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    if (n % 3 == 0)
        return n == 3;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0)
            return false;
    }
    return true;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    if (hi < 2)
        return out;
    if (lo < 2)
        lo = 2;
    if (lo <= 2 && 2 <= hi)
        out.push_back(2);
    std::int64_t start = lo | 1; // first odd >= lo
    for (std::int64_t n = start; n <= hi; n += 2) {
        if (is_prime(n))
            out.push_back(n);
    }
    return out;
}

} // namespace padiclab
