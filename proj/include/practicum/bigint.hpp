#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace practicum {

using BigInt = boost::multiprecision::cpp_int;
using u128 = unsigned __int128;
using i128 = __int128;

inline BigInt big(std::uint64_t v) { return BigInt(v); }

// Parses an optionally signed decimal string. Throws Error(InvalidInput).
BigInt parse_bigint(const std::string& text);

std::string to_string(const BigInt& v);

inline bool fits_u64(const BigInt& v) {
  return v >= 0 && v <= std::numeric_limits<std::uint64_t>::max();
}

inline std::optional<std::uint64_t> to_u64(const BigInt& v) {
  if (!fits_u64(v)) return std::nullopt;
  return v.convert_to<std::uint64_t>();
}

inline std::optional<std::int64_t> to_i64(const BigInt& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    return std::nullopt;
  return v.convert_to<std::int64_t>();
}

inline std::optional<i128> to_i128(const BigInt& v) {
  const BigInt limit = BigInt(1) << 126;
  if (v >= limit || v <= -limit) return std::nullopt;
  const BigInt mag = abs(v);
  const BigInt mask = (BigInt(1) << 64) - 1;
  i128 r = static_cast<i128>((mag >> 64).convert_to<std::uint64_t>()) << 64 |
           static_cast<i128>((mag & mask).convert_to<std::uint64_t>());
  return v < 0 ? -r : r;
}

// Number of bits needed to represent v > 0 (floor(log2 v) + 1).
inline std::size_t bit_length(const BigInt& v) {
  if (v <= 0) return 0;
  return boost::multiprecision::msb(v) + 1;
}

inline BigInt pow_big(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

// Non-negative residue of v modulo m > 0.
inline BigInt mod_floor(const BigInt& v, const BigInt& m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace practicum
