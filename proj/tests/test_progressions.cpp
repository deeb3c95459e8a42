#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "practicum/error.hpp"
#include "practicum/progressions.hpp"

using namespace practicum;

TEST_CASE("largest practical divisor examples") {
  CHECK(largest_practical_divisor(BigInt(12)) == 12);
  CHECK(largest_practical_divisor(BigInt(3)) == 1);
  CHECK(largest_practical_divisor(BigInt(20)) == 20);
  CHECK(largest_practical_divisor(BigInt(1)) == 1);
  CHECK(largest_practical_divisor(BigInt(10)) == 2);
}

TEST_CASE("largest practical divisor is maximal over all divisors") {
  for (std::uint64_t g = 1; g <= 100'000; g += (g < 3000 ? 1 : 37)) {
    std::uint64_t best = 1;
    for (std::uint64_t e = 1; e * e <= g; ++e) {
      if (g % e) continue;
      for (std::uint64_t f : {e, g / e})
        if (f > best && oracle::practical_by_stewart(f)) best = f;
    }
    REQUIRE(largest_practical_divisor(BigInt(g)) == best);
  }
}

TEST_CASE("classify_ap examples") {
  auto c = classify_ap(3, 5);
  CHECK(c.kind == APCase::InfinitelyMany);
  CHECK(c.d == 1);
  CHECK(c.witness_prime == 2u);
  CHECK_FALSE(c.unique_value);

  auto e = classify_ap(12, 2);
  CHECK(e.kind == APCase::ExactlyOne);
  CHECK(e.d == 2);
  CHECK(e.sigma_bound == 4);
  CHECK(e.unique_value == BigInt(2));
  CHECK_FALSE(e.witness_prime);

  auto n = classify_ap(12, 10);
  CHECK(n.kind == APCase::None);
  CHECK(n.d == 2);

  CHECK_THROWS_AS(classify_ap(0, 3), Error);
  CHECK_THROWS_AS(classify_ap(3, 0), Error);
  CHECK_THROWS_AS(classify_ap(-3, 1), Error);
}

TEST_CASE("odd moduli always give infinitely many") {
  for (int a = 1; a <= 201; a += 2)
    for (int b = 1; b <= 40; ++b) REQUIRE(classify_ap(a, b).kind == APCase::InfinitelyMany);
}

TEST_CASE("classification evidence is consistent") {
  for (int a = 1; a <= 60; ++a)
    for (int b = 1; b <= 60; ++b) {
      auto c = classify_ap(a, b);
      const BigInt g = std::gcd(a, b);
      REQUIRE(g % c.d == 0);
      REQUIRE(is_practical(c.d).practical);
      const BigInt a1 = a / c.d;
      if (c.kind == APCase::InfinitelyMany) {
        REQUIRE(c.witness_prime);
        REQUIRE(oracle::is_prime(*c.witness_prime));
        REQUIRE(BigInt(*c.witness_prime) <= c.sigma_bound);
        REQUIRE(a1 % *c.witness_prime != 0);
        for (std::uint64_t p = 2; p < *c.witness_prime; ++p)
          if (oracle::is_prime(p)) REQUIRE(a1 % p == 0);
      } else {
        for (std::uint64_t p = 2; BigInt(p) <= c.sigma_bound; ++p)
          if (oracle::is_prime(p)) REQUIRE(a1 % p == 0);
        REQUIRE((c.kind == APCase::ExactlyOne) == oracle::practical_by_stewart(b));
      }
    }
}

TEST_CASE("streams") {
  CHECK(ap_practical_stream(3, 5, 3) == std::vector<std::uint64_t>{8, 20, 32});
  CHECK(ap_practical_stream(2, 2, 4) == std::vector<std::uint64_t>{2, 4, 6, 8});
  CHECK(ap_practical_stream(12, 2, 5) == std::vector<std::uint64_t>{2});
  CHECK(ap_practical_stream(12, 10, 5).empty());
  try {
    (void)ap_practical_stream(3, 5, 1000, 50);
    FAIL("expected ScanBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ScanBudgetExceeded);
  }
}

TEST_CASE("streams are increasing, in the progression and practical") {
  for (std::uint64_t a : {1, 2, 7, 10, 18, 30})
    for (std::uint64_t b : {1, 3, 8, 11}) {
      if (classify_ap(a, b).kind != APCase::InfinitelyMany) continue;
      auto s = ap_practical_stream(a, b, 20);
      REQUIRE(s.size() == 20);
      for (std::size_t i = 0; i < s.size(); ++i) {
        REQUIRE(s[i] % a == b % a);
        REQUIRE(s[i] >= b);
        REQUIRE(oracle::practical_by_stewart(s[i]));
        if (i) REQUIRE(s[i] > s[i - 1]);
      }
    }
}

TEST_CASE("constructive witness examples") {
  auto w = ap_constructive_witness(3, 5, 100);
  CHECK(w.prime == 2);
  CHECK(w.k == 7);
  CHECK(w.n == 41);
  CHECK(w.value == 128);
  CHECK(w.verdict.practical);
  CHECK(w.certificate.check());

  auto w2 = ap_constructive_witness(5, 3, 50);
  CHECK(w2.k == 6);
  CHECK(w2.n == 25);
  CHECK(w2.value == 128);

  auto w3 = ap_constructive_witness(1, 1, 2);
  CHECK(w3.k == 1);
  CHECK(w3.n == 1);
  CHECK(w3.value == 2);

  CHECK_THROWS_AS(ap_constructive_witness(12, 2, 10), Error);
}

TEST_CASE("constructive witnesses on random progressions") {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 100) {
    const BigInt a = rng() % 5000 + 1, b = rng() % 5000 + 1, A = rng() % 1'000'000 + 1;
    if (classify_ap(a, b).kind != APCase::InfinitelyMany) continue;
    auto w = ap_constructive_witness(a, b, A);
    REQUIRE(w.value >= A);
    REQUIRE(w.n >= 1);
    REQUIRE(w.n <= w.modulus);
    REQUIRE(w.value == a * w.n + b);
    REQUIRE(w.verdict.practical);
    REQUIRE(w.verdict.replay());
    REQUIRE(is_practical(w.value).practical);
    REQUIRE(w.certificate.check());
    REQUIRE(w.certificate.product == w.value);
    ++done;
  }
}

TEST_CASE("non-practical witnesses for polynomials") {
  auto w = nonpractical_witness({BigInt(2), BigInt(1), BigInt(1)});
  CHECK(w.n == 3);
  CHECK(w.value == 14);
  CHECK_FALSE(w.verdict.practical);
  CHECK(nonpractical_witness({BigInt(0), BigInt(2)}).n == 5);
  CHECK(nonpractical_witness({BigInt(1), BigInt(1)}).n == 2);

  CHECK_THROWS_AS(nonpractical_witness({BigInt(5)}), Error);
  CHECK_THROWS_AS(nonpractical_witness({BigInt(0), BigInt(-1)}), Error);
  try {
    (void)nonpractical_witness({BigInt(0), BigInt(2)}, 4);
    FAIL("expected SearchExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SearchExhausted);
  }
}
