#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace zetalab {

// Eratosthenes, odd-only wheel. Result is the sorted list of primes <= n.
std::vector<uint32_t> primes_up_to(uint32_t n);

// pi(n) via the same sieve.
uint64_t prime_count(uint64_t n);

// Process-wide cached prime list, grown on demand; the prime-sum routines
// hit the same cutoffs repeatedly. The returned snapshot covers at least
// [2, at_least_up_to] and stays valid after later growth.
std::shared_ptr<const std::vector<uint32_t>> cached_primes(uint32_t at_least_up_to);

}  // namespace zetalab
