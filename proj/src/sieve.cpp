#include "practicum/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>

#include "practicum/arith.hpp"
#include "practicum/error.hpp"

namespace practicum {

PracticalBitmap::PracticalBitmap(std::uint64_t limit)
    : limit_(limit), words_((limit + 63) / 64, 0) {}

std::uint64_t PracticalBitmap::count(std::uint64_t x) const {
  if (x > limit_) throw Error(Errc::InvalidInput, "count beyond sieve limit");
  if (x == 0) return 0;
  std::uint64_t full = x / 64, total = 0;
  for (std::uint64_t i = 0; i < full; ++i) total += std::popcount(words_[i]);
  if (x % 64) total += std::popcount(words_[full] & ((1ull << (x % 64)) - 1));
  return total;
}

namespace {

constexpr std::uint64_t kSegmentBits = 1u << 17;

void check_budget(std::uint64_t bytes, std::uint64_t budget, std::uint64_t limit) {
  if (bytes > budget)
    throw Error(Errc::MemoryBudgetExceeded,
                "sieve to " + std::to_string(limit) + " needs " + std::to_string(bytes) +
                    " bytes, budget is " + std::to_string(budget));
}

// Even n in (lo, hi]: cofactor still to factor, and sigma of the part
// already divided out. cofactor == 0 marks a settled entry.
struct Segment {
  std::vector<std::uint64_t> rest;
  std::vector<std::uint64_t> sig;
};

void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint64_t>& base,
                   PracticalBitmap& out, Segment& seg) {
  // Even numbers in [lo, hi], lo odd-aligned so that lo + 1 is the first even.
  const std::uint64_t first = lo % 2 == 0 ? lo : lo + 1;
  if (first > hi) return;
  const std::uint64_t count = (hi - first) / 2 + 1;
  seg.rest.assign(count, 0);
  seg.sig.assign(count, 0);

  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t n = first + 2 * i;
    unsigned e = static_cast<unsigned>(std::countr_zero(n));
    std::uint64_t rest = n >> e;
    std::uint64_t sig = (2ull << e) - 1;
    if (rest <= sig + 1) {
      out.set(n);
    } else {
      seg.rest[i] = rest;
      seg.sig[i] = sig;
    }
  }

  for (std::size_t k = 1; k < base.size(); ++k) {
    const std::uint64_t p = base[k];
    if (p * p > hi) break;
    // Even multiples of p are the multiples of 2p.
    const std::uint64_t step = 2 * p;
    std::uint64_t n = (first + step - 1) / step * step;
    for (; n <= hi; n += step) {
      std::uint64_t i = (n - first) / 2;
      std::uint64_t rest = seg.rest[i];
      if (rest == 0) continue;
      std::uint64_t sig = seg.sig[i];
      if (p > sig + 1) {
        seg.rest[i] = 0;
        continue;
      }
      std::uint64_t pe = 1, spp = 1;
      while (rest % p == 0) {
        rest /= p;
        pe *= p;
        spp += pe;
      }
      sig *= spp;
      if (rest <= sig + 1) {
        out.set(n);
        rest = 0;
      }
      seg.rest[i] = rest;
      seg.sig[i] = sig;
    }
  }
  // Survivors have a single prime cofactor above sqrt(hi) that exceeds
  // sigma + 1, so they are not practical.
}

}  // namespace

PracticalBitmap sieve_practicals(std::uint64_t limit, std::uint64_t memory_budget) {
  if (limit == 0) throw Error(Errc::InvalidInput, "sieve limit must be positive");
  check_budget((limit + 63) / 64 * 8, memory_budget, limit);
  PracticalBitmap out(limit);
  out.set(1);
  const auto base = primes_up_to(isqrt(limit));
  const std::uint64_t segments = (limit + kSegmentBits - 1) / kSegmentBits;

  // Segment s covers bits [s * kSegmentBits, (s + 1) * kSegmentBits), a whole
  // number of words, so threads never share a word.
#pragma omp parallel
  {
    Segment seg;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(segments); ++s) {
      std::uint64_t lo = static_cast<std::uint64_t>(s) * kSegmentBits + 1;
      std::uint64_t hi = std::min(limit, lo + kSegmentBits - 1);
      sieve_segment(lo, hi, base, out, seg);
    }
  }
  return out;
}

PracticalBitmap sieve_practicals_serial(std::uint64_t limit, std::uint64_t memory_budget) {
  if (limit == 0) throw Error(Errc::InvalidInput, "sieve limit must be positive");
  check_budget((limit + 63) / 64 * 8 + (limit + 1) * 4, memory_budget, limit);
  const auto spf = spf_sieve(limit, memory_budget);
  PracticalBitmap out(limit);
  out.set(1);
  for (std::uint64_t n = 2; n <= limit; ++n) {
    std::uint64_t rest = n, running = 1;
    bool ok = true;
    while (rest > 1) {
      std::uint64_t p = spf[rest];
      if (p > running + 1) {
        ok = false;
        break;
      }
      std::uint64_t pe = 1, spp = 1;
      while (rest % p == 0) {
        rest /= p;
        pe *= p;
        spp += pe;
      }
      running *= spp;
    }
    if (ok) out.set(n);
  }
  return out;
}

std::uint64_t count_practicals(std::uint64_t x) {
  if (x == 0) return 0;
  return sieve_practicals(x).count(x);
}

std::vector<DensityRow> density_report(const PracticalBitmap& bitmap,
                                       const std::vector<std::uint64_t>& checkpoints) {
  std::vector<DensityRow> rows;
  for (std::uint64_t x : checkpoints) {
    if (x == 0) throw Error(Errc::InvalidInput, "checkpoints must be positive");
    DensityRow row{x, bitmap.count(x), 0.0};
    row.ratio = static_cast<double>(row.count) * std::log(static_cast<double>(x)) /
                static_cast<double>(x);
    rows.push_back(row);
  }
  return rows;
}

namespace {

template <class T>
void put_le(std::ostream& os, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

template <class T>
bool get_le(std::istream& is, T& v) {
  v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    int c = is.get();
    if (c == EOF) return false;
    v |= static_cast<T>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return true;
}

}  // namespace

void save_bitmap(const PracticalBitmap& bitmap, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(Errc::InvalidInput, "cannot write " + path.string());
  os.write("PRAC", 4);
  put_le<std::uint32_t>(os, kBitmapVersion);
  put_le<std::uint64_t>(os, bitmap.limit());
  const std::uint64_t bytes = (bitmap.limit() + 7) / 8;
  for (std::uint64_t b = 0; b < bytes; ++b)
    os.put(static_cast<char>((bitmap.words()[b / 8] >> (8 * (b % 8))) & 0xff));
  if (!os) throw Error(Errc::InvalidInput, "write failed for " + path.string());
}

PracticalBitmap load_bitmap(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(Errc::CacheInvalid, "cannot open " + path.string());
  char magic[4];
  std::uint32_t version = 0;
  std::uint64_t limit = 0;
  if (!is.read(magic, 4) || std::string(magic, 4) != "PRAC")
    throw Error(Errc::CacheInvalid, path.string() + ": bad magic");
  if (!get_le(is, version) || version != kBitmapVersion)
    throw Error(Errc::CacheInvalid, path.string() + ": unsupported version");
  if (!get_le(is, limit) || limit == 0)
    throw Error(Errc::CacheInvalid, path.string() + ": bad limit");
  PracticalBitmap bitmap(limit);
  const std::uint64_t bytes = (limit + 7) / 8;
  for (std::uint64_t b = 0; b < bytes; ++b) {
    int c = is.get();
    if (c == EOF) throw Error(Errc::CacheInvalid, path.string() + ": truncated payload");
    bitmap.words()[b / 8] |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * (b % 8));
  }
  if (is.peek() != EOF) throw Error(Errc::CacheInvalid, path.string() + ": trailing bytes");
  // Bits past the limit must be clear.
  if (limit % 64 && (bitmap.words().back() >> (limit % 64)) != 0)
    throw Error(Errc::CacheInvalid, path.string() + ": bits set beyond limit");
  return bitmap;
}

}  // namespace practicum
