#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "practicum/practical.hpp"

namespace practicum {

// Largest practical divisor of g >= 1 (1 is practical, so always >= 1).
BigInt largest_practical_divisor(const BigInt& g, const FactorBudget& budget = {});

enum class APCase { InfinitelyMany, ExactlyOne, None };

const char* ap_case_name(APCase c) noexcept;

struct APClassification {
  BigInt a;
  BigInt b;
  APCase kind = APCase::None;
  BigInt d;                              // largest practical divisor of gcd(a, b)
  BigInt sigma_bound;                    // sigma(d) + 1
  std::optional<std::uint64_t> witness_prime;  // least prime <= sigma(d) + 1 not dividing a / d
  std::optional<BigInt> unique_value;    // b, when ExactlyOne
};

// Decides which of the three cases a*n + b falls into. a, b >= 1.
APClassification classify_ap(const BigInt& a, const BigInt& b, const FactorBudget& budget = {});

inline constexpr std::uint64_t kDefaultScanLimit = 1'000'000;

// Practical values a*n + b for n = 0, 1, 2, ... in increasing order. For the
// finite cases this returns the (at most one) practical term and stops.
// Throws Error(ScanBudgetExceeded) if `count` terms are not found with
// n <= scan_limit.
std::vector<std::uint64_t> ap_practical_stream(std::uint64_t a, std::uint64_t b, std::size_t count,
                                               std::uint64_t scan_limit = kDefaultScanLimit);

struct APWitness {
  std::uint64_t prime = 0;    // witness prime p
  unsigned k = 0;             // exponent with p^k >= max(A, b/d)
  BigInt modulus;             // p^k
  BigInt n;                   // 1 <= n <= p^k with p^k | (a/d) n + b/d
  BigInt value;               // a n + b
  PracticalityVerdict verdict;
  MultiplierCertificate certificate;  // base d * p^k, multiplier ((a/d) n + b/d) / p^k
};

// Follows the existence argument for the infinite case: produces a practical
// a*n + b >= threshold. Throws Error(InvalidInput) unless the classification is
// InfinitelyMany and Error(ClassificationMismatch) if the value fails to verify.
APWitness ap_constructive_witness(const BigInt& a, const BigInt& b, const BigInt& threshold,
                                  const FactorBudget& budget = {});

// Smallest n in [1, search_bound] with P(n) >= 1 and P(n) not practical.
// Coefficients are listed constant term first. Throws Error(SearchExhausted).
struct PolyWitness {
  std::uint64_t n = 0;
  BigInt value;
  PracticalityVerdict verdict;
};

PolyWitness nonpractical_witness(const std::vector<BigInt>& coefficients,
                                 std::uint64_t search_bound = kDefaultScanLimit,
                                 const FactorBudget& budget = {});

}  // namespace practicum
