#include "practicum/arith.hpp"

#include <algorithm>
#include <cmath>

#include "practicum/error.hpp"

namespace practicum {

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].prime < 2 || factors_[i].exponent == 0)
      throw Error(Errc::InvalidInput, "factorization entries need prime >= 2 and exponent >= 1");
    if (i > 0 && factors_[i - 1].prime >= factors_[i].prime)
      throw Error(Errc::InvalidInput, "factorization primes must be strictly ascending");
  }
}

void Factorization::multiply(const BigInt& prime, unsigned exponent) {
  if (exponent == 0) return;
  auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                             [](const PrimePower& pp, const BigInt& p) { return pp.prime < p; });
  if (it != factors_.end() && it->prime == prime)
    it->exponent += exponent;
  else
    factors_.insert(it, PrimePower{prime, exponent});
}

Factorization& Factorization::operator*=(const Factorization& other) {
  for (const auto& pp : other.factors_) multiply(pp.prime, pp.exponent);
  return *this;
}

BigInt Factorization::value() const {
  BigInt v = 1;
  for (const auto& pp : factors_) v *= pow_big(pp.prime, pp.exponent);
  return v;
}

BigInt sigma_prime_power(const BigInt& p, unsigned e) {
  return (pow_big(p, e + 1) - 1) / (p - 1);
}

BigInt sigma(const Factorization& f) {
  BigInt s = 1;
  for (const auto& pp : f.factors()) s *= sigma_prime_power(pp.prime, pp.exponent);
  return s;
}

unsigned valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw Error(Errc::InvalidInput, "valuation of zero is undefined");
  unsigned k = 0;
  BigInt m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw Error(Errc::InvalidInput, "valuation of zero is undefined");
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::optional<BigInt> inverse_mod(const BigInt& a, const BigInt& m) {
  if (m == 1) return BigInt(0);
  BigInt old_r = mod_floor(a, m), r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, m);
}

Congruence crt_solve(const CongruenceSystem& system) {
  BigInt residue = 0, modulus = 1;
  for (const auto& c : system) {
    if (c.modulus < 2 || c.residue < 0 || c.residue >= c.modulus)
      throw Error(Errc::InvalidInput, "congruence needs modulus >= 2 and 0 <= residue < modulus");
    BigInt g = boost::multiprecision::gcd(modulus, c.modulus);
    BigInt diff = c.residue - residue;
    if (diff % g != 0)
      throw Error(Errc::Inconsistent, "congruences " + to_string(residue) + " mod " +
                                          to_string(modulus) + " and " + to_string(c.residue) +
                                          " mod " + to_string(c.modulus) + " conflict");
    BigInt m1 = modulus / g, m2 = c.modulus / g;
    BigInt step = mod_floor(diff / g, m2) * *inverse_mod(m1, m2) % m2;
    residue += modulus * step;
    modulus *= m2;
    residue = mod_floor(residue, modulus);
  }
  return {residue, modulus};
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(Errc::InvalidInput, "isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

bool is_square(std::uint64_t n) {
  std::uint64_t r = isqrt(n);
  return r * r == n;
}

}  // namespace practicum
