#include "practicum/progressions.hpp"

#include "practicum/error.hpp"
#include "practicum/primes.hpp"

namespace practicum {
namespace {

struct PracticalDivisor {
  BigInt value = 1;
  Factorization factorization;
};

PracticalDivisor largest_practical_divisor_impl(const BigInt& g, const FactorBudget& budget) {
  if (g < 1) throw Error(Errc::InvalidInput, "largest_practical_divisor needs g >= 1");
  const Factorization f = factorize(g, budget);
  PracticalDivisor best;
  // Odometer over exponent vectors of g's divisors.
  std::vector<unsigned> exps(f.size(), 0);
  while (true) {
    std::vector<PrimePower> parts;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (exps[i]) parts.push_back({f[i].prime, exps[i]});
    Factorization candidate(std::move(parts));
    if (is_practical(candidate).practical) {
      BigInt v = candidate.value();
      if (v > best.value) best = {v, candidate};
    }
    std::size_t i = 0;
    while (i < f.size() && exps[i] == f[i].exponent) exps[i++] = 0;
    if (i == f.size()) break;
    ++exps[i];
  }
  return best;
}

}  // namespace

BigInt largest_practical_divisor(const BigInt& g, const FactorBudget& budget) {
  return largest_practical_divisor_impl(g, budget).value;
}

const char* ap_case_name(APCase c) noexcept {
  switch (c) {
    case APCase::InfinitelyMany: return "infinitely_many";
    case APCase::ExactlyOne: return "exactly_one";
    case APCase::None: return "none";
  }
  return "unknown";
}

APClassification classify_ap(const BigInt& a, const BigInt& b, const FactorBudget& budget) {
  if (a < 1 || b < 1) throw Error(Errc::InvalidInput, "progression needs a >= 1 and b >= 1");
  APClassification out;
  out.a = a;
  out.b = b;
  const auto d = largest_practical_divisor_impl(boost::multiprecision::gcd(a, b), budget);
  out.d = d.value;
  out.sigma_bound = sigma(d.factorization) + 1;
  const BigInt a1 = a / d.value;

  // Every prime up to the bound dividing a1 forces a1 >= their product, so this
  // loop runs at most omega(a1) + 1 times.
  PrimeStream primes;
  for (std::uint64_t p = primes.next(); p <= out.sigma_bound; p = primes.next()) {
    if (a1 % p != 0) {
      out.kind = APCase::InfinitelyMany;
      out.witness_prime = p;
      return out;
    }
  }
  if (is_practical(b, budget).practical) {
    out.kind = APCase::ExactlyOne;
    out.unique_value = b;
  } else {
    out.kind = APCase::None;
  }
  return out;
}

std::vector<std::uint64_t> ap_practical_stream(std::uint64_t a, std::uint64_t b, std::size_t count,
                                               std::uint64_t scan_limit) {
  const auto cls = classify_ap(BigInt(a), BigInt(b));
  std::vector<std::uint64_t> out;
  if (count == 0) return out;
  if (cls.kind == APCase::ExactlyOne) {
    out.push_back(b);
    return out;
  }
  if (cls.kind == APCase::None) return out;
  for (std::uint64_t n = 0; n <= scan_limit; ++n) {
    u128 v = static_cast<u128>(a) * n + b;
    if (v > std::numeric_limits<std::uint64_t>::max())
      throw Error(Errc::ScanBudgetExceeded, "progression left the 64-bit range");
    if (is_practical_fast(static_cast<std::uint64_t>(v))) {
      out.push_back(static_cast<std::uint64_t>(v));
      if (out.size() == count) return out;
    }
  }
  throw Error(Errc::ScanBudgetExceeded, "found only " + std::to_string(out.size()) + " of " +
                                            std::to_string(count) + " terms with n <= " +
                                            std::to_string(scan_limit));
}

APWitness ap_constructive_witness(const BigInt& a, const BigInt& b, const BigInt& threshold,
                                  const FactorBudget& budget) {
  const auto cls = classify_ap(a, b, budget);
  if (cls.kind != APCase::InfinitelyMany)
    throw Error(Errc::InvalidInput, std::string("progression is classified ") + ap_case_name(cls.kind) +
                                        ", not infinitely_many");
  const BigInt& d = cls.d;
  const BigInt a1 = a / d, b1 = b / d;
  const std::uint64_t p = *cls.witness_prime;
  const Factorization fd = factorize(d, budget);

  APWitness w;
  w.prime = p;
  Factorization base;
  for (unsigned k = 1;; ++k) {
    BigInt pk = pow_big(BigInt(p), k);
    base = fd;
    base.multiply(BigInt(p), k);
    if (pk >= threshold && pk >= b1 && sigma(base) + 1 >= a1 + 1) {
      w.k = k;
      w.modulus = pk;
      break;
    }
  }

  BigInt n = mod_floor(-b1, w.modulus) * *inverse_mod(a1, w.modulus) % w.modulus;
  if (n == 0) n = w.modulus;
  w.n = n;
  w.value = a * n + b;
  const BigInt cofactor = (a1 * n + b1) / w.modulus;

  const auto base_verdict = is_practical(base);
  Factorization full = base;
  full *= factorize(cofactor, budget);
  w.verdict = is_practical(full);
  if (!base_verdict.practical || !w.verdict.practical || w.value < threshold)
    throw Error(Errc::ClassificationMismatch,
                "constructed value " + to_string(w.value) + " failed to verify as practical");
  try {
    w.certificate = certify_product(base_verdict, cofactor);
  } catch (const Error& e) {
    throw Error(Errc::ClassificationMismatch, std::string("certificate failed: ") + e.what());
  }
  return w;
}

PolyWitness nonpractical_witness(const std::vector<BigInt>& coefficients,
                                 std::uint64_t search_bound, const FactorBudget& budget) {
  std::size_t degree = coefficients.size();
  while (degree > 0 && coefficients[degree - 1] == 0) --degree;
  if (degree < 2) throw Error(Errc::InvalidInput, "polynomial must be non-constant");
  if (coefficients[degree - 1] < 0)
    throw Error(Errc::InvalidInput, "leading coefficient must be positive");

  for (std::uint64_t n = 1; n <= search_bound; ++n) {
    BigInt v = 0;
    for (std::size_t i = degree; i-- > 0;) v = v * n + coefficients[i];
    if (v < 1) continue;
    if (auto small = to_u64(v); small && is_practical_fast(*small)) continue;
    auto verdict = is_practical(v, budget);
    if (!verdict.practical) return {n, v, std::move(verdict)};
  }
  throw Error(Errc::SearchExhausted,
              "no non-practical value with n <= " + std::to_string(search_bound));
}

}  // namespace practicum
