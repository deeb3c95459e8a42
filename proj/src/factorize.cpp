#include <algorithm>
#include <numeric>

#include "practicum/arith.hpp"
#include "practicum/error.hpp"
#include "practicum/primes.hpp"

namespace practicum {
namespace {

const std::vector<std::uint64_t>& small_primes() { return small_prime_table(); }

class RhoBudget {
 public:
  explicit RhoBudget(std::uint64_t iterations) : left_(iterations) {}

  void spend(std::uint64_t n, const std::string& what) {
    if (n > left_)
      throw Error(Errc::BudgetExceeded, "factorization budget exhausted on " + what);
    left_ -= n;
  }

 private:
  std::uint64_t left_;
};

// Brent's variant of Pollard rho on 64-bit composites.
std::uint64_t rho_u64(std::uint64_t n, RhoBudget& budget) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        std::uint64_t steps = std::min(m, r - k);
        budget.spend(steps, std::to_string(n));
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(std::uint64_t n, Factorization& out, RhoBudget& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.multiply(BigInt(n), 1);
    return;
  }
  std::uint64_t d = rho_u64(n, budget);
  split_u64(d, out, budget);
  split_u64(n / d, out, budget);
}

BigInt rho_big(const BigInt& n, RhoBudget& budget) {
  for (unsigned c = 1;; ++c) {
    BigInt y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        std::uint64_t steps = std::min(m, r - k);
        budget.spend(steps, to_string(n));
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          q = q * (x > y ? BigInt(x - y) : BigInt(y - x)) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = boost::multiprecision::gcd(x > ys ? BigInt(x - ys) : BigInt(ys - x), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_big(const BigInt& n, Factorization& out, RhoBudget& budget) {
  if (n == 1) return;
  if (auto small = to_u64(n)) {
    split_u64(*small, out, budget);
    return;
  }
  if (is_probable_prime(n)) {
    out.multiply(n, 1);
    return;
  }
  BigInt d = rho_big(n, budget);
  split_big(d, out, budget);
  split_big(n / d, out, budget);
}

// Strips every prime p <= bound; returns the cofactor.
template <class Int>
Int trial_divide(Int n, std::uint64_t bound, Factorization& out) {
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.multiply(BigInt(p), e);
  };
  for (std::uint64_t p : small_primes()) {
    if (p > bound || Int(p) * p > n) return n;
    strip(p);
  }
  for (std::uint64_t d = small_primes().back() + 2; d <= bound && Int(d) * d <= n; d += 2) strip(d);
  return n;
}

}  // namespace

Factorization factorize(std::uint64_t n, const FactorBudget& budget) {
  if (n == 0) throw Error(Errc::InvalidInput, "cannot factorize 0");
  Factorization out;
  std::uint64_t rest = trial_divide<u128>(n, budget.trial_bound, out);
  RhoBudget rho(budget.rho_iterations);
  split_u64(rest, out, rho);
  return out;
}

Factorization factorize(const BigInt& n, const FactorBudget& budget) {
  if (n <= 0) throw Error(Errc::InvalidInput, "factorize needs a positive integer");
  if (auto small = to_u64(n)) return factorize(*small, budget);
  Factorization out;
  BigInt rest = trial_divide<BigInt>(n, budget.trial_bound, out);
  RhoBudget rho(budget.rho_iterations);
  split_big(rest, out, rho);
  return out;
}

}  // namespace practicum
