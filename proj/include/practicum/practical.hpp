#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "practicum/arith.hpp"

namespace practicum {

// One step of Stewart's chain: p^e joined the prefix and the prefix's sigma
// became running_sigma.
struct ChainStep {
  BigInt prime;
  unsigned exponent = 0;
  BigInt running_sigma;

  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

// The first prime that exceeds sigma(prefix) + 1. An odd n > 1 breaks at
// index 0 with bound sigma(1) + 1 = 2.
struct ChainBreak {
  std::size_t index = 0;
  BigInt prime;
  BigInt bound;

  friend bool operator==(const ChainBreak&, const ChainBreak&) = default;
};

struct PracticalityVerdict {
  BigInt n;
  bool practical = false;
  // Full chain when practical; the accepted prefix when not.
  std::vector<ChainStep> chain;
  std::optional<ChainBreak> witness;

  // sigma(n); only meaningful for practical verdicts.
  BigInt sigma() const { return chain.empty() ? BigInt(1) : chain.back().running_sigma; }

  // Recomputes every running sigma and every comparison from the recorded
  // primes and exponents alone.
  bool replay() const;
};

PracticalityVerdict is_practical(const Factorization& f);
PracticalityVerdict is_practical(const BigInt& n, const FactorBudget& budget = {});

// Boolean Stewart test by trial division with early exits: reject as soon as
// the next trial divisor exceeds sigma(prefix) + 1, accept as soon as the
// unfactored cofactor is at most sigma(prefix) + 1.
bool is_practical_fast(std::uint64_t n);

inline constexpr std::uint64_t kDefaultOracleBound = 1'000'000;

// Definition-level check: subset-sum reachability of [1, n] from the
// distinct divisors of n. Throws Error(OracleBoundExceeded) above the bound.
bool is_practical_oracle(std::uint64_t n, std::uint64_t bound = kDefaultOracleBound);

// If base is practical and multiplier <= sigma(base) + 1 then base * multiplier
// is practical. ExactSigma uses sigma from a Stewart chain; LowerBound uses
// sigma(base) >= 2 base - 1, which needs no factorization.
struct MultiplierCertificate {
  enum class Kind { ExactSigma, LowerBound };

  Kind kind = Kind::ExactSigma;
  BigInt base;
  BigInt multiplier;
  BigInt bound;  // sigma(base) + 1, or 2 * base for LowerBound
  BigInt product;
  // Chain for base when kind == ExactSigma.
  std::vector<ChainStep> base_chain;
  // Index of an earlier certificate proving base, when chained inductively.
  std::optional<std::size_t> base_ref;

  // Arithmetic-only replay: product, bound and (for ExactSigma) base chain.
  bool check() const;
};

// Throws Error(InvalidInput) if base is not practical and
// Error(BoundViolated) if multiplier > sigma(base) + 1.
MultiplierCertificate certify_product(const PracticalityVerdict& base, const BigInt& multiplier);

// Factorization-free variant: caller vouches that base is practical (through
// base_ref or otherwise). Throws Error(BoundViolated) if multiplier > 2 base.
MultiplierCertificate certify_product_lower_bound(const BigInt& base, const BigInt& multiplier,
                                                  std::optional<std::size_t> base_ref = {});

}  // namespace practicum
