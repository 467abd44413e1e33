#include "zetalab/primes.hpp"

#include <cmath>
#include <mutex>

namespace zetalab {

std::vector<uint32_t> primes_up_to(uint32_t n) {
  std::vector<uint32_t> out;
  if (n < 2) return out;
  out.push_back(2);
  if (n < 3) return out;
  // odd-only bitmap: bit i represents 2i+3
  const uint64_t m = (uint64_t(n) - 3) / 2 + 1;
  std::vector<uint64_t> composite((m + 63) / 64, 0);
  auto is_set = [&](uint64_t i) {
    return (composite[i >> 6] >> (i & 63)) & 1u;
  };
  auto set = [&](uint64_t i) { composite[i >> 6] |= uint64_t(1) << (i & 63); };
  const uint64_t root = uint64_t(std::sqrt(double(n)));
  for (uint64_t i = 0; 2 * i + 3 <= root; ++i) {
    if (is_set(i)) continue;
    const uint64_t p = 2 * i + 3;
    for (uint64_t j = (p * p - 3) / 2; j < m; j += p) set(j);
  }
  out.reserve(size_t(double(n) / std::log(double(n < 10 ? 10 : n)) * 1.2));
  for (uint64_t i = 0; i < m; ++i)
    if (!is_set(i)) out.push_back(uint32_t(2 * i + 3));
  return out;
}

uint64_t prime_count(uint64_t n) {
  return primes_up_to(uint32_t(n)).size();
}

std::shared_ptr<const std::vector<uint32_t>> cached_primes(
    uint32_t at_least_up_to) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<uint32_t>> cache;
  static uint32_t cached_limit = 0;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache || cached_limit < at_least_up_to) {
    cached_limit = std::max<uint32_t>(at_least_up_to, 1u << 16);
    cache = std::make_shared<const std::vector<uint32_t>>(
        primes_up_to(cached_limit));
  }
  return cache;
}

}  // namespace zetalab
