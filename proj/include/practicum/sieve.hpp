#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "practicum/primes.hpp"

namespace practicum {

// Bit (n - 1) is set iff n is practical, for 1 <= n <= limit.
class PracticalBitmap {
 public:
  PracticalBitmap() = default;
  explicit PracticalBitmap(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

  bool test(std::uint64_t n) const {
    std::uint64_t b = n - 1;
    return (words_[b / 64] >> (b % 64)) & 1;
  }
  void set(std::uint64_t n) {
    std::uint64_t b = n - 1;
    words_[b / 64] |= 1ull << (b % 64);
  }

  // Number of practical n <= x, x <= limit.
  std::uint64_t count(std::uint64_t x) const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::vector<std::uint64_t>& words() noexcept { return words_; }

  friend bool operator==(const PracticalBitmap&, const PracticalBitmap&) = default;

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> words_;
};

// Segmented sieve, segments distributed over OpenMP threads. Output is
// independent of the thread count.
PracticalBitmap sieve_practicals(std::uint64_t limit,
                                 std::uint64_t memory_budget = kDefaultMemoryBudget);

// Reference: whole-range SPF table, Stewart's test per n by SPF chasing.
PracticalBitmap sieve_practicals_serial(std::uint64_t limit,
                                        std::uint64_t memory_budget = kDefaultMemoryBudget);

std::uint64_t count_practicals(std::uint64_t x);

struct DensityRow {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  double ratio = 0;  // count * ln(x) / x
};

std::vector<DensityRow> density_report(const PracticalBitmap& bitmap,
                                       const std::vector<std::uint64_t>& checkpoints);

// File layout: "PRAC", u32 version, u64 limit (little-endian), then
// ceil(limit / 8) payload bytes, bit (n - 1) LSB-first within each byte.
inline constexpr std::uint32_t kBitmapVersion = 1;

void save_bitmap(const PracticalBitmap& bitmap, const std::filesystem::path& path);

// Throws Error(CacheInvalid) on bad magic, version, or truncated payload.
PracticalBitmap load_bitmap(const std::filesystem::path& path);

}  // namespace practicum
