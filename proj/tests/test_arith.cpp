#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "practicum/arith.hpp"
#include "practicum/error.hpp"
#include "practicum/primes.hpp"

using namespace practicum;

namespace {

std::vector<std::pair<std::uint64_t, unsigned>> pairs(const Factorization& f) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (const auto& pp : f.factors()) out.push_back({pp.prime.convert_to<std::uint64_t>(), pp.exponent});
  return out;
}

}  // namespace

TEST_CASE("factorize small examples") {
  CHECK(factorize(std::uint64_t{1}).is_one());
  CHECK(pairs(factorize(std::uint64_t{84})) ==
        std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 1}, {7, 1}});
  CHECK(pairs(factorize(std::uint64_t{88})) ==
        std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {11, 1}});
  CHECK_THROWS_AS(factorize(std::uint64_t{0}), Error);
}

TEST_CASE("factorize agrees with trial division and multiplies back") {
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    auto f = factorize(n);
    REQUIRE(f.value() == n);
    REQUIRE(pairs(f) == oracle::trial_factor(n));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t n = rng() >> (rng() % 40);
    if (n == 0) continue;
    auto f = factorize(n);
    REQUIRE(f.value() == n);
    for (const auto& pp : f.factors()) REQUIRE(is_prime(pp.prime.convert_to<std::uint64_t>()));
  }
}

TEST_CASE("factorize beyond 64 bits") {
  // (2^61 - 1) * (2^31 - 1) * 3^5 * 1000003
  const BigInt m61 = (BigInt(1) << 61) - 1, m31 = (BigInt(1) << 31) - 1;
  const BigInt n = m61 * m31 * 243 * 1000003;
  auto f = factorize(n);
  CHECK(f.value() == n);
  REQUIRE(f.size() == 4);
  CHECK(f[0] == PrimePower{BigInt(3), 5});
  CHECK(f[1] == PrimePower{BigInt(1000003), 1});
  CHECK(f[2] == PrimePower{m31, 1});
  CHECK(f[3] == PrimePower{m61, 1});

  // Two ~40-bit primes: rho needs far more than 10 iterations.
  const BigInt semi = BigInt(1099511627791ull) * BigInt(1099511628401ull);
  FactorBudget tiny;
  tiny.rho_iterations = 10;
  try {
    (void)factorize(semi, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
  CHECK(factorize(semi).value() == semi);
}

TEST_CASE("factorization type invariants") {
  CHECK_THROWS_AS(Factorization({{BigInt(3), 1}, {BigInt(2), 1}}), Error);
  CHECK_THROWS_AS(Factorization({{BigInt(2), 0}}), Error);
  Factorization f;
  f.multiply(BigInt(7), 1);
  f.multiply(BigInt(2), 2);
  f.multiply(BigInt(7), 2);
  CHECK(f.value() == 4 * 343);
  CHECK(f[0].prime == 2);
  CHECK(f[1].exponent == 3);
}

TEST_CASE("sigma") {
  CHECK(sigma(factorize(std::uint64_t{8})) + 1 == 16);
  CHECK(sigma(factorize(std::uint64_t{2})) + 1 == 4);
  CHECK(sigma(factorize(std::uint64_t{4})) + 1 == 8);
  CHECK(sigma(Factorization{}) == 1);
  for (std::uint64_t n = 1; n <= 3000; ++n) REQUIRE(sigma(factorize(n)) == oracle::divisor_sum(n));
}

TEST_CASE("sigma is multiplicative on coprime pairs") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 500) {
    std::uint64_t a = rng() % 1'000'000 + 1, b = rng() % 1'000'000 + 1;
    if (std::gcd(a, b) != 1) continue;
    REQUIRE(sigma(factorize(a * b)) == sigma(factorize(a)) * sigma(factorize(b)));
    ++checked;
  }
}

TEST_CASE("valuation") {
  CHECK(valuation(std::uint64_t{24}, 2) == 3);
  CHECK(valuation(std::uint64_t{24}, 5) == 0);
  CHECK(valuation(std::uint64_t{480480}, 13) == 1);
  CHECK(valuation(BigInt(-96), BigInt(2)) == 5);
  CHECK_THROWS_AS(valuation(std::uint64_t{0}, 3), Error);
}

TEST_CASE("crt_solve examples") {
  auto sys = [](std::initializer_list<std::pair<int, int>> xs) {
    CongruenceSystem s;
    for (auto [r, m] : xs) s.push_back({BigInt(r), BigInt(m)});
    return s;
  };
  CHECK(crt_solve(sys({{5, 8}, {2, 3}, {2, 5}, {6, 7}})) == Congruence{BigInt(797), BigInt(840)});
  CHECK(crt_solve(sys({{0, 2}, {0, 3}})) == Congruence{BigInt(0), BigInt(6)});
  try {
    crt_solve(sys({{1, 2}, {0, 2}}));
    FAIL("expected Inconsistent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Inconsistent);
  }
  CHECK(crt_solve(sys({{2, 4}, {4, 6}})) == Congruence{BigInt(10), BigInt(12)});
  CHECK_THROWS_AS(crt_solve(sys({{5, 3}})), Error);
}

TEST_CASE("crt_solve matches exhaustive search on random non-coprime systems") {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 400; ++iter) {
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    CongruenceSystem sys;
    const int len = 1 + rng() % 3;
    for (int i = 0; i < len; ++i) {
      std::int64_t m = 2 + rng() % 30, r = rng() % m;
      raw.push_back({r, m});
      sys.push_back({BigInt(r), BigInt(m)});
    }
    const std::int64_t expected = oracle::crt_search(raw);
    if (expected < 0) {
      CHECK_THROWS_AS(crt_solve(sys), Error);
      continue;
    }
    auto got = crt_solve(sys);
    REQUIRE(got.residue == expected);
    for (const auto& c : sys) REQUIRE(got.residue % c.modulus == c.residue);
  }
}

TEST_CASE("prime stream") {
  PrimeStream s;
  CHECK(s.next() == 2);
  CHECK(s.next() == 3);
  CHECK(s.next() == 5);
  CHECK(s.next() == 7);
  CHECK(nth_prime(25) == 97);
  // Gap-free across block boundaries.
  PrimeStream t;
  std::uint64_t prev = 1;
  for (int i = 0; i < 20000; ++i) {
    std::uint64_t p = t.next();
    for (std::uint64_t n = prev + 1; n < p; ++n) REQUIRE_FALSE(oracle::is_prime(n));
    REQUIRE(oracle::is_prime(p));
    prev = p;
  }
}

TEST_CASE("is_prime on 64-bit edge cases") {
  CHECK(is_prime(18446744073709551557ull));
  CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(1));
  for (std::uint64_t n = 0; n < 5000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
}

TEST_CASE("spf sieve") {
  auto spf = spf_sieve(10);
  CHECK(spf[9] == 3);
  auto big = spf_sieve(1'000'000);
  CHECK(big[77] == 7);
  CHECK(big[97] == 97);
  for (std::uint64_t n = 2; n <= 1'000'000; ++n)
    REQUIRE(big[n] == factorize(n)[0].prime.convert_to<std::uint64_t>());
  try {
    (void)spf_sieve(1'000'000, 1000);
    FAIL("expected MemoryBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MemoryBudgetExceeded);
  }
}

TEST_CASE("spf segment agrees with the full table") {
  auto full = spf_sieve(300000);
  auto base = primes_up_to(isqrt(300000));
  for (std::uint64_t lo : {2ull, 1000ull, 65537ull, 299000ull}) {
    auto seg = spf_segment(lo, 300001, base);
    for (std::uint64_t i = 0; i < seg.size(); ++i) REQUIRE(seg[i] == full[lo + i]);
  }
}
