#pragma once

#include <cstdint>
#include <vector>

#include "practicum/bigint.hpp"

namespace practicum {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization: primes strictly ascending, exponents >= 1.
// The empty factorization represents 1.
class Factorization {
 public:
  Factorization() = default;

  // Validates ordering and exponents; primality of the entries is the
  // caller's responsibility. Throws Error(InvalidInput).
  explicit Factorization(std::vector<PrimePower> factors);

  // Multiplies in p^e, merging with an existing entry for p.
  void multiply(const BigInt& prime, unsigned exponent);
  Factorization& operator*=(const Factorization& other);

  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::size_t size() const noexcept { return factors_.size(); }
  const PrimePower& operator[](std::size_t i) const { return factors_[i]; }

  BigInt value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

struct FactorBudget {
  // Trial division runs over all primes up to this bound first.
  std::uint64_t trial_bound = 1u << 16;
  // Total Pollard-Brent iterations allowed across all cofactors.
  std::uint64_t rho_iterations = 1u << 24;
};

Factorization factorize(std::uint64_t n, const FactorBudget& budget = {});
Factorization factorize(const BigInt& n, const FactorBudget& budget = {});

// Sum of divisors, product of (p^(e+1)-1)/(p-1).
BigInt sigma(const Factorization& f);
BigInt sigma_prime_power(const BigInt& p, unsigned e);

unsigned valuation(const BigInt& n, const BigInt& p);
unsigned valuation(std::uint64_t n, std::uint64_t p);

struct Congruence {
  BigInt residue;
  BigInt modulus;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

using CongruenceSystem = std::vector<Congruence>;

// Combines congruences with arbitrary (not necessarily coprime) moduli.
// Returns the unique class modulo the lcm; throws Error(Inconsistent) when
// two residues disagree modulo the gcd of their moduli.
Congruence crt_solve(const CongruenceSystem& system);

// Inverse of a modulo m when gcd(a, m) = 1.
std::optional<BigInt> inverse_mod(const BigInt& a, const BigInt& m);

// 64-bit modular helpers.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

std::uint64_t isqrt(std::uint64_t n);
BigInt isqrt(const BigInt& n);
bool is_square(std::uint64_t n);

}  // namespace practicum
