#include "practicum/practical.hpp"

#include <bit>

#include "practicum/error.hpp"
#include "practicum/primes.hpp"

namespace practicum {

PracticalityVerdict is_practical(const Factorization& f) {
  PracticalityVerdict v;
  v.n = f.value();
  BigInt running = 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& pp = f[i];
    BigInt bound = running + 1;
    if (pp.prime > bound) {
      v.practical = false;
      v.witness = ChainBreak{i, pp.prime, bound};
      return v;
    }
    running *= sigma_prime_power(pp.prime, pp.exponent);
    v.chain.push_back({pp.prime, pp.exponent, running});
  }
  v.practical = true;
  return v;
}

PracticalityVerdict is_practical(const BigInt& n, const FactorBudget& budget) {
  if (n < 1) throw Error(Errc::InvalidInput, "practicality is defined for n >= 1");
  return is_practical(factorize(n, budget));
}

bool PracticalityVerdict::replay() const {
  BigInt running = 1, prefix = 1, last_prime = 1;
  for (const auto& step : chain) {
    if (step.prime <= last_prime || step.exponent == 0) return false;
    if (step.prime > running + 1) return false;
    running *= sigma_prime_power(step.prime, step.exponent);
    if (running != step.running_sigma) return false;
    prefix *= pow_big(step.prime, step.exponent);
    last_prime = step.prime;
  }
  if (practical) return !witness && prefix == n;
  if (!witness || witness->index != chain.size()) return false;
  if (witness->bound != running + 1 || witness->prime <= witness->bound) return false;
  if (witness->prime <= last_prime || n % prefix != 0) return false;
  return (n / prefix) % witness->prime == 0;
}

bool is_practical_fast(std::uint64_t n) {
  if (n == 1) return true;
  if (n == 0 || (n & 1)) return false;
  unsigned e = static_cast<unsigned>(std::countr_zero(n));
  std::uint64_t rest = n >> e;
  u128 s = (static_cast<u128>(1) << (e + 1)) - 1;

  auto absorb = [&](std::uint64_t d) {
    u128 pe = 1, spp = 1;
    while (rest % d == 0) {
      rest /= d;
      pe *= d;
      spp += pe;
    }
    s *= spp;
  };

  if (rest <= s + 1) return true;
  const auto& primes = small_prime_table();
  for (std::size_t i = 1; i < primes.size(); ++i) {
    std::uint64_t d = primes[i];
    if (d > s + 1) return false;
    if (static_cast<u128>(d) * d > rest) return rest <= s + 1;
    if (rest % d == 0) {
      absorb(d);
      if (rest <= s + 1) return true;
    }
  }
  for (std::uint64_t d = primes.back() + 2;; d += 2) {
    if (d > s + 1) return false;
    if (static_cast<u128>(d) * d > rest) return rest <= s + 1;
    if (rest % d == 0) {
      absorb(d);
      if (rest <= s + 1) return true;
    }
  }
}

bool is_practical_oracle(std::uint64_t n, std::uint64_t bound) {
  if (n == 0) throw Error(Errc::InvalidInput, "practicality is defined for n >= 1");
  if (n > bound)
    throw Error(Errc::OracleBoundExceeded,
                "oracle bound " + std::to_string(bound) + " exceeded by " + std::to_string(n));

  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    divisors.push_back(d);
    if (d != n / d) divisors.push_back(n / d);
  }

  // Bit t of reach is set when t is a sum of distinct divisors seen so far.
  const std::size_t words = n / 64 + 1;
  std::vector<std::uint64_t> reach(words, 0);
  reach[0] = 1;
  const std::uint64_t tail_mask = (n % 64 == 63) ? ~0ull : ((1ull << (n % 64 + 1)) - 1);
  for (std::uint64_t d : divisors) {
    const std::size_t q = d / 64;
    const unsigned r = d % 64;
    for (std::size_t i = words; i-- > q;) {
      std::uint64_t add = reach[i - q] << r;
      if (r != 0 && i > q) add |= reach[i - q - 1] >> (64 - r);
      reach[i] |= add;
    }
    reach[words - 1] &= tail_mask;
  }
  for (std::uint64_t t = 1; t <= n; ++t)
    if (!((reach[t / 64] >> (t % 64)) & 1)) return false;
  return true;
}

MultiplierCertificate certify_product(const PracticalityVerdict& base, const BigInt& multiplier) {
  if (!base.practical)
    throw Error(Errc::InvalidInput, "base " + to_string(base.n) + " is not practical");
  if (multiplier < 1) throw Error(Errc::InvalidInput, "multiplier must be positive");
  MultiplierCertificate cert;
  cert.kind = MultiplierCertificate::Kind::ExactSigma;
  cert.base = base.n;
  cert.multiplier = multiplier;
  cert.bound = base.sigma() + 1;
  cert.product = base.n * multiplier;
  cert.base_chain = base.chain;
  if (multiplier > cert.bound)
    throw Error(Errc::BoundViolated, "multiplier " + to_string(multiplier) + " exceeds sigma(" +
                                         to_string(base.n) + ") + 1 = " + to_string(cert.bound));
  return cert;
}

MultiplierCertificate certify_product_lower_bound(const BigInt& base, const BigInt& multiplier,
                                                  std::optional<std::size_t> base_ref) {
  if (base < 1 || multiplier < 1)
    throw Error(Errc::InvalidInput, "base and multiplier must be positive");
  MultiplierCertificate cert;
  cert.kind = MultiplierCertificate::Kind::LowerBound;
  cert.base = base;
  cert.multiplier = multiplier;
  cert.bound = 2 * base;
  cert.product = base * multiplier;
  cert.base_ref = base_ref;
  if (multiplier > cert.bound)
    throw Error(Errc::BoundViolated, "multiplier " + to_string(multiplier) + " exceeds 2 * " +
                                         to_string(base) + " = " + to_string(cert.bound));
  return cert;
}

bool MultiplierCertificate::check() const {
  if (multiplier < 1 || product != base * multiplier || multiplier > bound) return false;
  if (kind == Kind::LowerBound) return bound == 2 * base;
  PracticalityVerdict v;
  v.n = base;
  v.practical = true;
  v.chain = base_chain;
  return v.replay() && bound == v.sigma() + 1;
}

}  // namespace practicum
