#pragma once

#include <cstdint>
#include <vector>

#include "practicum/bigint.hpp"

namespace practicum {

inline constexpr std::uint64_t kDefaultMemoryBudget = 1ull << 30;

// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Probable-prime test used internally by the factorizer; not a certificate.
bool is_probable_prime(const BigInt& n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Gap-free ascending stream 2, 3, 5, ... backed by a segmented sieve.
class PrimeStream {
 public:
  PrimeStream();

  std::uint64_t next();

  // Index (0-based) of the prime most recently returned by next().
  std::size_t index() const noexcept { return returned_ - 1; }

 private:
  void refill();

  std::vector<std::uint64_t> base_;
  std::vector<std::uint64_t> block_;
  std::size_t cursor_ = 0;
  std::size_t returned_ = 0;
  std::uint64_t low_ = 0;
};

// n-th prime, 1-based (nth_prime(1) == 2).
std::uint64_t nth_prime(std::size_t n);

// spf[n] = least prime dividing n for 2 <= n <= limit; spf[0] = spf[1] = 0.
// Throws Error(MemoryBudgetExceeded) if the table would exceed the budget.
std::vector<std::uint32_t> spf_sieve(std::uint64_t limit,
                                     std::uint64_t memory_budget = kDefaultMemoryBudget);

// Smallest prime factor for every n in [low, high), low >= 2, using base
// primes up to sqrt(high - 1), which base_primes must contain in full.
// Entry i corresponds to low + i.
std::vector<std::uint64_t> spf_segment(std::uint64_t low, std::uint64_t high,
                                       const std::vector<std::uint64_t>& base_primes);

}  // namespace practicum

namespace practicum {

// Cached primes below 2^16.
const std::vector<std::uint64_t>& small_prime_table();

}  // namespace practicum
