#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "practicum/practical.hpp"

namespace practicum {

// q(n) = a n^2 + b n + c with a >= 1.
struct QuadraticPoly {
  BigInt a = 1;
  BigInt b = 0;
  BigInt c = 0;

  QuadraticPoly() = default;
  // Throws Error(InvalidInput) if a < 1.
  QuadraticPoly(BigInt a_, BigInt b_, BigInt c_);

  BigInt operator()(const BigInt& n) const { return (a * n + b) * n + c; }
  BigInt derivative(const BigInt& n) const { return 2 * a * n + b; }
  BigInt discriminant() const { return b * b - 4 * a * c; }
  BigInt content() const;

  std::string to_string() const;
};

// Why m_q(p) is infinite:
//   HenselGap  - v(q(r)) >= 2 v(q'(r)) + 1 at the recorded r, so r lifts to a
//                p-adic root;
//   ExactRoot  - q(r) = 0 for the integer r;
//   DoubleRoot - discriminant 0 and -b/(2a) is a p-adic integer.
enum class InfiniteReason { HenselGap, ExactRoot, DoubleRoot };

struct MqResult {
  std::uint64_t p = 0;
  bool infinite = false;
  unsigned k = 0;  // m_q(p) when finite
  // Valuation of the content gcd(a, b, c); the search runs on q / content and
  // the valuations below refer to that primitive part.
  unsigned content_valuation = 0;

  // Finite: q(root) is divisible by exactly p^k (absent when k = 0).
  // Infinite/HenselGap: the lifting start; value_valuation and
  // derivative_valuation record v(q(root)) and v(q'(root)) for the
  // primitive part q / content.
  std::optional<BigInt> root;
  InfiniteReason reason = InfiniteReason::HenselGap;
  unsigned value_valuation = 0;
  unsigned derivative_valuation = 0;

  // Residue classes examined by the exhaustive search; every class was closed
  // with constant valuation, so no root exists modulo p^(k+1).
  std::size_t classes_examined = 0;
};

MqResult mq(const QuadraticPoly& q, std::uint64_t p);

// Up to max_roots residues r in [0, p^k) with q(r) = 0 mod p^k, ascending.
std::vector<BigInt> roots_mod_prime_power(const QuadraticPoly& q, std::uint64_t p, unsigned k,
                                          std::size_t max_roots = 64);

struct LeastInfinitePrime {
  std::size_t r = 0;           // 1-based index of p_r among the primes
  std::uint64_t p_r = 0;
  std::vector<std::uint64_t> primes;   // p_1 .. p_{r-1}
  std::vector<unsigned> exponents;     // m_q(p_1) .. m_q(p_{r-1})
  std::vector<MqResult> details;       // one per prime p_1 .. p_r
};

inline constexpr std::size_t kDefaultPrimeCap = 100;

// Throws Error(IterationCap) if none of the first prime_cap primes has
// m_q(p) infinite.
LeastInfinitePrime least_infinite_prime(const QuadraticPoly& q,
                                        std::size_t prime_cap = kDefaultPrimeCap);

enum class QuadCase { InfinitelyMany, FinitelyMany };

const char* quad_case_name(QuadCase c) noexcept;

struct QuadClassification {
  QuadCase kind = QuadCase::FinitelyMany;
  LeastInfinitePrime lip;
  Factorization witness_factorization;  // p_1^m_1 ... p_{r-1}^m_{r-1} p_r
  BigInt witness_N;
  PracticalityVerdict verdict_N;
};

QuadClassification classify_quadratic(const QuadraticPoly& q,
                                      std::size_t prime_cap = kDefaultPrimeCap);

struct QuadTerm {
  std::uint64_t n = 0;
  std::uint64_t value = 0;

  friend bool operator==(const QuadTerm&, const QuadTerm&) = default;
};

// Practical values q(n), n = 1, 2, ..., in scan order, skipping q(n) <= 0.
// InfinitelyMany: throws Error(ScanBudgetExceeded) if fewer than `count`
// terms exist with n <= scan_limit. FinitelyMany: returns the practical values
// up to witness_N (beyond it none exist) and stops. Needs 64-bit
// coefficients and values.
std::vector<QuadTerm> quad_practical_stream(const QuadraticPoly& q, std::size_t count,
                                            std::uint64_t scan_limit = 1'000'000);

struct QuadWitness {
  BigInt n;
  BigInt value;
  BigInt modulus;                      // D
  Factorization modulus_factorization;
  unsigned k = 0;                      // exponent of p_r in D
  std::vector<std::uint64_t> extra_primes;  // t_1 .. t_s
  PracticalityVerdict verdict;
};

struct QuadWitnessLimits {
  std::size_t max_extra_primes = 48;
  std::size_t max_candidates = 4096;  // CRT combinations tried per D
  std::size_t prime_cap = kDefaultPrimeCap;
};

// Builds D from the m_q exponents, a high power of p_r and further primes t
// at which q has roots, combines roots by CRT and returns a practical
// q(n) >= threshold with 1 <= n <= D and D | q(n).
// Throws Error(InvalidInput) unless the classification is InfinitelyMany,
// Error(ClassificationMismatch) if it fails once the product of (1 + 1/t)
// exceeds a + |b| + |c|, and Error(SearchExhausted) if the caps run out first.
QuadWitness quad_constructive_witness(const QuadraticPoly& q, const BigInt& threshold,
                                      const QuadWitnessLimits& limits = {},
                                      const FactorBudget& budget = {});

// Whether q has a root modulo the prime t.
bool has_root_mod_prime(const QuadraticPoly& q, std::uint64_t t);

}  // namespace practicum
