#pragma once

// Brute-force references used only by tests. Nothing here calls into the
// library paths they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::uint64_t divisor_sum(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

// Plain boolean-table subset sum over the divisors.
inline bool practical_by_definition(std::uint64_t n) {
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    for (std::uint64_t t = n; t >= d; --t)
      if (reach[t - d]) reach[t] = 1;
  }
  return std::all_of(reach.begin() + 1, reach.end(), [](char c) { return c != 0; });
}

// Stewart's criterion straight from trial factorization.
inline bool practical_by_stewart(std::uint64_t n) {
  if (n == 1) return true;
  std::uint64_t running = 1;
  for (auto [p, e] : trial_factor(n)) {
    if (p > running + 1) return false;
    std::uint64_t s = 1, pe = 1;
    for (unsigned i = 0; i < e; ++i) s += (pe *= p);
    running *= s;
  }
  return true;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest non-negative x < lcm satisfying every congruence, or -1.
inline std::int64_t crt_search(const std::vector<std::pair<std::int64_t, std::int64_t>>& sys) {
  std::int64_t l = 1;
  for (auto [r, m] : sys) l = std::lcm(l, m);
  for (std::int64_t x = 0; x < l; ++x) {
    bool ok = true;
    for (auto [r, m] : sys) ok = ok && x % m == r;
    if (ok) return x;
  }
  return -1;
}

struct LiftResult {
  unsigned max_level = 0;       // largest k <= horizon with a root mod p^k
  bool roots_at_horizon = false;
  unsigned horizon = 0;
};

// Exhaustive lifting: every root mod p^(k+1) reduces to a root mod p^k, so
// the root set at each level is found by extending the previous one by all
// p digits. Levels run while p^k <= max_modulus and k <= max_levels.
inline LiftResult lift_oracle(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t p,
                              std::int64_t max_modulus = 10'000'000, unsigned max_levels = 64) {
  auto q_mod = [&](__int128 n, __int128 m) {
    __int128 v = (a * n + b) * n + c;
    v %= m;
    return v < 0 ? v + m : v;
  };
  LiftResult out;
  std::vector<std::int64_t> roots{0};  // all residues mod p^0
  std::int64_t pk = 1;
  for (unsigned k = 1; k <= max_levels; ++k) {
    if (pk > max_modulus / p) break;
    const std::int64_t next = pk * p;
    std::vector<std::int64_t> lifted;
    for (auto r : roots)
      for (std::int64_t t = 0; t < p; ++t) {
        std::int64_t x = r + t * pk;
        if (q_mod(x, next) == 0) lifted.push_back(x);
      }
    out.horizon = k;
    pk = next;
    roots = std::move(lifted);
    if (roots.empty()) return out;
    out.max_level = k;
  }
  out.roots_at_horizon = true;
  return out;
}

}  // namespace oracle
