#include "practicum/primes.hpp"

#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

#include "practicum/arith.hpp"
#include "practicum/error.hpp"

namespace practicum {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are sufficient for every n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_probable_prime(const BigInt& n) {
  if (auto small = to_u64(n)) return is_prime(*small);
  if (n < 2) return false;
  std::mt19937_64 engine(0x5eed);
  return boost::multiprecision::miller_rabin_test(n, 32, engine);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<std::uint64_t>& small_prime_table() {
  static const std::vector<std::uint64_t> primes = primes_up_to(1u << 16);
  return primes;
}

namespace {
constexpr std::uint64_t kStreamBlock = 1u << 15;
}

PrimeStream::PrimeStream() { refill(); }

void PrimeStream::refill() {
  std::uint64_t high = low_ + kStreamBlock;
  std::uint64_t root = isqrt(high - 1);
  if (base_.empty() || base_.back() < root) base_ = primes_up_to(root + kStreamBlock);

  std::vector<bool> composite(kStreamBlock, false);
  for (std::uint64_t p : base_) {
    if (p * p >= high) break;
    std::uint64_t start = std::max(p * p, (low_ + p - 1) / p * p);
    for (std::uint64_t m = start; m < high; m += p) composite[m - low_] = true;
  }
  block_.clear();
  cursor_ = 0;
  for (std::uint64_t n = std::max<std::uint64_t>(low_, 2); n < high; ++n)
    if (!composite[n - low_]) block_.push_back(n);
  low_ = high;
}

std::uint64_t PrimeStream::next() {
  while (cursor_ == block_.size()) refill();
  ++returned_;
  return block_[cursor_++];
}

std::uint64_t nth_prime(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidInput, "prime indices are 1-based");
  PrimeStream stream;
  std::uint64_t p = 0;
  for (std::size_t i = 0; i < n; ++i) p = stream.next();
  return p;
}

std::vector<std::uint32_t> spf_sieve(std::uint64_t limit, std::uint64_t memory_budget) {
  if (limit > std::numeric_limits<std::uint32_t>::max())
    throw Error(Errc::MemoryBudgetExceeded, "spf table is limited to 32-bit entries; use spf_segment");
  if ((limit + 1) * sizeof(std::uint32_t) > memory_budget)
    throw Error(Errc::MemoryBudgetExceeded,
                "spf table for limit " + std::to_string(limit) + " exceeds the memory budget");
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    spf[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t j = i * i; j <= limit; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  }
  return spf;
}

std::vector<std::uint64_t> spf_segment(std::uint64_t low, std::uint64_t high,
                                       const std::vector<std::uint64_t>& base_primes) {
  if (low < 2 || high < low) throw Error(Errc::InvalidInput, "spf_segment needs 2 <= low <= high");
  std::vector<std::uint64_t> spf(high - low, 0);
  for (std::uint64_t p : base_primes) {
    if (static_cast<u128>(p) * p >= high) break;
    std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
    for (std::uint64_t m = start; m < high; m += p)
      if (spf[m - low] == 0) spf[m - low] = p;
  }
  for (std::uint64_t i = 0; i < spf.size(); ++i)
    if (spf[i] == 0) spf[i] = low + i;
  return spf;
}

}  // namespace practicum
