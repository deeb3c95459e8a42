#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "practicum/sieve.hpp"
#include "practicum/practical.hpp"

namespace practicum {

// 2^k * m with k >= 1 and m <= 2^(k+1), certified by the multiplier bound on
// the practical base 2^k. Throws Error(BoundViolated) if m > 2^(k+1).
MultiplierCertificate power2_practical(unsigned k, const BigInt& m);

// x in [1, 2^k - 1] with x^2 = m (mod 2^(k+2)), built by the inductive
// doubling x_1 = 1, x_{s+1} = x_s or 2^(s+1) - x_s. Throws
// Error(InvalidResidue) unless m = 1 (mod 8).
BigInt sqrt_mod_power_of_two(const BigInt& m, unsigned k);

struct SquareDecomposition {
  BigInt n;
  BigInt x;
  BigInt practical_part;  // n - x^2 = 2^(m+2) s
  unsigned m = 0;         // floor(log2 sqrt(n))
  BigInt s;
  MultiplierCertificate certificate;
};

// Throws Error(InvalidInput) unless n = 1 (mod 8) and n > 1.
SquareDecomposition decompose_square_plus_practical(const BigInt& n);

struct FamilySpec {
  int j = 0;
  CongruenceSystem system;
  Congruence canonical;            // CRT of system
  bool exclude_square_minus_one;   // skip members m with m - 1 a perfect square
};

// Throws Error(InvalidJ) for j = 1 (every 8k + 1 is representable) or j
// outside 0..7.
FamilySpec family_spec(int j);

std::uint64_t family_member(int j, std::uint64_t index);
std::vector<std::uint64_t> family_stream(int j, std::size_t count);

struct RepresentationTrace {
  std::uint64_t x = 0;
  std::uint64_t remainder = 0;  // m - x^2
  PracticalityVerdict verdict;
};

struct NonRepresentability {
  std::uint64_t m = 0;
  bool not_representable = false;
  // One entry per x tried; when representable, the last entry is the
  // practical remainder that settles it.
  std::vector<RepresentationTrace> trace;
};

// Exhaustive over every x >= 0 with x^2 < m.
NonRepresentability verify_not_representable(std::uint64_t m);

// Members checked in parallel; output order matches member order.
std::vector<NonRepresentability> verify_family(int j, std::size_t count);
std::vector<NonRepresentability> verify_family_serial(int j, std::size_t count);

// Lexicographically least (p1, p2), p1 <= p2, both practical, p1 + p2 = n.
// Throws Error(NotFound) if none exists and Error(InvalidInput) for odd n or
// n beyond the bitmap.
std::pair<std::uint64_t, std::uint64_t> goldbach_pair(std::uint64_t n, const PracticalBitmap& bitmap);
std::pair<std::uint64_t, std::uint64_t> goldbach_pair(std::uint64_t n);

struct GoldbachSweep {
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> first_failure;
  std::uint64_t max_first_summand = 0;  // largest p1 needed over the sweep
};

// Every even n in [2, limit]; parallel and serial variants agree exactly.
GoldbachSweep goldbach_sweep(const PracticalBitmap& bitmap, std::uint64_t limit);
GoldbachSweep goldbach_sweep_serial(const PracticalBitmap& bitmap, std::uint64_t limit);

// Every m <= limit with m - 2, m, m + 2 all practical, ascending.
std::vector<std::uint64_t> practical_triples(std::uint64_t limit, const PracticalBitmap& bitmap);
std::vector<std::uint64_t> practical_triples(std::uint64_t limit);

struct PalindromeLink {
  std::size_t index = 0;  // n in A_n, 1-based
  BigInt value;
  // A_1 only: direct Stewart verdict.
  std::optional<PracticalityVerdict> verdict;
  // n >= 2: A_n = A_{n-1} (10^(2^(n-1)) + 1) from the lower bound on sigma(A_{n-1}).
  std::optional<MultiplierCertificate> certificate;
};

// A_n = 8 (10^(2^n) - 1) / 9 for n = 1..count.
std::vector<PalindromeLink> palindromic_practicals(std::size_t count);

bool is_decimal_palindrome(const BigInt& v);

// Replays the whole chain: closed form, palindrome, A_1 verdict, and each
// certificate's arithmetic plus the 10^(2^n) + 1 <= 2 A_n - 1 inequality.
bool check_palindromic_chain(const std::vector<PalindromeLink>& chain);

}  // namespace practicum
