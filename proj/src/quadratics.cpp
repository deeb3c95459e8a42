#include "practicum/quadratics.hpp"

#include <algorithm>
#include <limits>

#include "practicum/error.hpp"
#include "practicum/primes.hpp"

namespace practicum {

QuadraticPoly::QuadraticPoly(BigInt a_, BigInt b_, BigInt c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a < 1) throw Error(Errc::InvalidInput, "quadratic needs a positive leading coefficient");
}

BigInt QuadraticPoly::content() const {
  using boost::multiprecision::gcd;
  return gcd(gcd(a, abs(b)), abs(c));
}

std::string QuadraticPoly::to_string() const {
  // a n^2 + b n + c with unit coefficients and zero terms dropped
  std::string out;
  auto term = [&](const BigInt& k, const char* var) {
    if (k == 0) return;
    const BigInt mag = k < 0 ? BigInt(-k) : k;
    if (out.empty())
      out = k < 0 ? "-" : "";
    else
      out += k < 0 ? " - " : " + ";
    if (mag != 1 || !*var) out += practicum::to_string(mag);
    out += var;
  };
  term(a, "n^2");
  term(b, "n");
  term(c, "");
  return out;
}

namespace {

constexpr unsigned kInfiniteValuation = std::numeric_limits<unsigned>::max();
constexpr unsigned kDepthCap = 4096;

unsigned val(const BigInt& v, const BigInt& p) {
  return v == 0 ? kInfiniteValuation : valuation(v, p);
}

unsigned plus(unsigned v, unsigned j) {
  return v == kInfiniteValuation ? v : v + j;
}

struct Ball {
  BigInt r;
  unsigned j;
};

}  // namespace

MqResult mq(const QuadraticPoly& q, std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidInput, std::to_string(p) + " is not prime");
  const BigInt P(p);
  MqResult res;
  res.p = p;
  const BigInt g = q.content();
  res.content_valuation = valuation(g, P);
  const QuadraticPoly prim(q.a / g, q.b / g, q.c / g);

  if (prim.discriminant() == 0) {
    // prim(n) = a (n + b / 2a)^2: a p-adic root exists iff b / 2a is p-adic.
    const BigInt two_a = 2 * prim.a;
    const unsigned e = valuation(two_a, P);
    if (prim.b == 0 || valuation(prim.b, P) >= e) {
      const BigInt pe = pow_big(P, e);
      const BigInt level = pow_big(P, 8);
      BigInt r = mod_floor(-(prim.b / pe) * *inverse_mod(two_a / pe, level), level);
      res.infinite = true;
      res.reason = InfiniteReason::DoubleRoot;
      res.root = r;
      BigInt v = prim(r);
      res.value_valuation = val(v, P);
      res.derivative_valuation = val(prim.derivative(r), P);
      return res;
    }
  }

  const unsigned va = valuation(prim.a, P);
  unsigned best = 0;
  BigInt best_root = 0;
  std::vector<Ball> stack{{BigInt(0), 0}};
  while (!stack.empty()) {
    Ball ball = std::move(stack.back());
    stack.pop_back();
    ++res.classes_examined;
    if (ball.j > kDepthCap)
      throw Error(Errc::IterationCap, "m_q search exceeded depth cap for " + q.to_string());

    const BigInt f0 = prim(ball.r);
    if (f0 == 0) {
      res.infinite = true;
      res.reason = InfiniteReason::ExactRoot;
      res.root = ball.r;
      res.value_valuation = kInfiniteValuation;
      res.derivative_valuation = val(prim.derivative(ball.r), P);
      return res;
    }
    const BigInt f1 = prim.derivative(ball.r);
    const unsigned v0 = valuation(f0, P);
    const unsigned t = val(f1, P);
    if (f1 != 0 && v0 >= 2 * t + 1) {
      res.infinite = true;
      res.reason = InfiniteReason::HenselGap;
      res.root = ball.r;
      res.value_valuation = v0;
      res.derivative_valuation = t;
      return res;
    }
    // On r + p^j x: q = f0 + f1 p^j x + a p^(2j) x^2.
    const unsigned v1 = plus(t, ball.j), v2 = va + 2 * ball.j;
    if (v0 < std::min(v1, v2)) {
      if (v0 > best || (v0 == best && ball.r < best_root)) {
        best = v0;
        best_root = ball.r;
      }
      continue;
    }
    const BigInt step = pow_big(P, ball.j);
    for (std::uint64_t x = p; x-- > 0;) stack.push_back({ball.r + step * x, ball.j + 1});
  }
  res.k = res.content_valuation + best;
  if (res.k > 0) res.root = best_root;
  res.value_valuation = best;
  return res;
}

std::vector<BigInt> roots_mod_prime_power(const QuadraticPoly& q, std::uint64_t p, unsigned k,
                                          std::size_t max_roots) {
  const BigInt P(p);
  const BigInt modulus = pow_big(P, k);
  const unsigned va = val(q.a, P);
  std::vector<BigInt> roots;
  std::vector<Ball> stack{{BigInt(0), 0}};
  while (!stack.empty() && roots.size() < max_roots) {
    Ball ball = std::move(stack.back());
    stack.pop_back();
    const unsigned v0 = val(q(ball.r), P);
    const unsigned v1 = plus(val(q.derivative(ball.r), P), ball.j);
    const unsigned v2 = plus(va, 2 * ball.j);
    const BigInt step = pow_big(P, ball.j);
    if (std::min({v0, v1, v2}) >= k) {
      // Whole class is a root set modulo p^k.
      for (BigInt r = ball.r; r < modulus && roots.size() < max_roots; r += step) roots.push_back(r);
      continue;
    }
    if (v0 < std::min(v1, v2) || ball.j >= k) continue;
    for (std::uint64_t x = p; x-- > 0;) stack.push_back({ball.r + step * x, ball.j + 1});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

LeastInfinitePrime least_infinite_prime(const QuadraticPoly& q, std::size_t prime_cap) {
  LeastInfinitePrime out;
  PrimeStream primes;
  for (std::size_t i = 1; i <= prime_cap; ++i) {
    const std::uint64_t p = primes.next();
    MqResult m = mq(q, p);
    const bool infinite = m.infinite;
    out.details.push_back(std::move(m));
    if (infinite) {
      out.r = i;
      out.p_r = p;
      return out;
    }
    out.primes.push_back(p);
    out.exponents.push_back(out.details.back().k);
  }
  throw Error(Errc::IterationCap, "no prime with infinite m_q among the first " +
                                      std::to_string(prime_cap) + " primes for " + q.to_string());
}

const char* quad_case_name(QuadCase c) noexcept {
  return c == QuadCase::InfinitelyMany ? "infinitely_many" : "finitely_many";
}

QuadClassification classify_quadratic(const QuadraticPoly& q, std::size_t prime_cap) {
  QuadClassification out;
  out.lip = least_infinite_prime(q, prime_cap);
  for (std::size_t i = 0; i < out.lip.primes.size(); ++i)
    out.witness_factorization.multiply(BigInt(out.lip.primes[i]), out.lip.exponents[i]);
  out.witness_factorization.multiply(BigInt(out.lip.p_r), 1);
  out.witness_N = out.witness_factorization.value();
  out.verdict_N = is_practical(out.witness_factorization);
  out.kind = out.verdict_N.practical ? QuadCase::InfinitelyMany : QuadCase::FinitelyMany;
  return out;
}

std::vector<QuadTerm> quad_practical_stream(const QuadraticPoly& q, std::size_t count,
                                            std::uint64_t scan_limit) {
  const auto a = to_i64(q.a), b = to_i64(q.b), c = to_i64(q.c);
  if (!a || !b || !c) throw Error(Errc::InvalidInput, "stream needs 64-bit coefficients");
  const auto cls = classify_quadratic(q);
  const bool finite = cls.kind == QuadCase::FinitelyMany;
  // Beyond witness_N no value is practical in the finite case.
  const i128 cap = to_i128(cls.witness_N).value_or(static_cast<i128>(1) << 120);

  std::vector<QuadTerm> out;
  if (count == 0) return out;
  for (std::uint64_t n = 1; n <= scan_limit; ++n) {
    const i128 N = static_cast<i128>(n);
    const i128 v = (static_cast<i128>(*a) * N + *b) * N + *c;
    const bool increasing = 2 * static_cast<i128>(*a) * N + *b > 0;
    if (finite && increasing && v > cap) return out;
    if (v <= 0) continue;
    if (v > static_cast<i128>(std::numeric_limits<std::uint64_t>::max()))
      throw Error(Errc::ScanBudgetExceeded, "quadratic left the 64-bit range");
    const auto value = static_cast<std::uint64_t>(v);
    if (is_practical_fast(value)) {
      out.push_back({n, value});
      if (out.size() == count) return out;
    }
  }
  throw Error(Errc::ScanBudgetExceeded, "found only " + std::to_string(out.size()) + " of " +
                                            std::to_string(count) + " terms with n <= " +
                                            std::to_string(scan_limit));
}

bool has_root_mod_prime(const QuadraticPoly& q, std::uint64_t t) {
  const BigInt T(t);
  if (t == 2 || q.a % T == 0) {
    for (std::uint64_t x = 0; x < t; ++x)
      if (q(BigInt(x)) % T == 0) return true;
    return false;
  }
  const std::uint64_t d = mod_floor(q.discriminant(), T).convert_to<std::uint64_t>();
  return d == 0 || powmod(d, (t - 1) / 2, t) == 1;
}

namespace {

struct CrtBasis {
  BigInt modulus;
  std::vector<BigInt> idempotents;  // e_i = 1 mod m_i, 0 mod m_j (j != i)
};

CrtBasis crt_basis(const std::vector<BigInt>& moduli) {
  CrtBasis basis;
  basis.modulus = 1;
  for (const auto& m : moduli) basis.modulus *= m;
  for (const auto& m : moduli) {
    const BigInt rest = basis.modulus / m;
    basis.idempotents.push_back(rest * *inverse_mod(rest % m, m));
  }
  return basis;
}

}  // namespace

QuadWitness quad_constructive_witness(const QuadraticPoly& q, const BigInt& threshold,
                                      const QuadWitnessLimits& limits, const FactorBudget& budget) {
  const auto cls = classify_quadratic(q, limits.prime_cap);
  if (cls.kind != QuadCase::InfinitelyMany)
    throw Error(Errc::InvalidInput, q.to_string() + " has finitely many practical values");
  const auto& lip = cls.lip;
  const BigInt S = q.a + abs(q.b) + abs(q.c);
  const BigInt Pr(lip.p_r);

  // Prime-power moduli from the finite m_q values; fixed across attempts.
  std::vector<std::uint64_t> fixed_primes;
  std::vector<unsigned> fixed_exps;
  for (std::size_t i = 0; i < lip.primes.size(); ++i) {
    if (lip.exponents[i] == 0) continue;
    fixed_primes.push_back(lip.primes[i]);
    fixed_exps.push_back(lip.exponents[i]);
  }
  Factorization prefix;
  for (std::size_t i = 0; i < fixed_primes.size(); ++i)
    prefix.multiply(BigInt(fixed_primes[i]), fixed_exps[i]);
  const BigInt prefix_value = prefix.value();

  PrimeStream stream;
  std::uint64_t next_t = stream.next();
  while (next_t <= lip.p_r) next_t = stream.next();

  std::vector<std::uint64_t> extras;
  BigInt extras_product = 1, ratio_num = 1, ratio_den = 1;

  for (std::size_t s = 0; s <= limits.max_extra_primes; ++s) {
    if (s > 0) {
      while (!has_root_mod_prime(q, next_t)) next_t = stream.next();
      extras.push_back(next_t);
      extras_product *= next_t;
      ratio_num *= next_t + 1;
      ratio_den *= next_t;
      next_t = stream.next();
    }
    const bool guaranteed = ratio_num > S * ratio_den;

    unsigned k = 1;
    while (!(pow_big(Pr, k) > threshold && prefix_value * pow_big(Pr, k) >= extras_product)) ++k;

    Factorization dfac = prefix;
    dfac.multiply(Pr, k);
    for (auto t : extras) dfac.multiply(BigInt(t), 1);
    const auto d_verdict = is_practical(dfac);
    if (!d_verdict.practical)
      throw Error(Errc::ClassificationMismatch, "modulus " + to_string(dfac.value()) +
                                                    " is not practical for " + q.to_string());

    std::vector<BigInt> moduli;
    std::vector<std::vector<BigInt>> root_sets;
    auto add = [&](std::uint64_t p, unsigned e) {
      moduli.push_back(pow_big(BigInt(p), e));
      root_sets.push_back(roots_mod_prime_power(q, p, e, 16));
      if (root_sets.back().empty())
        throw Error(Errc::ClassificationMismatch, "no root of " + q.to_string() + " modulo " +
                                                      std::to_string(p) + "^" + std::to_string(e));
    };
    for (std::size_t i = 0; i < fixed_primes.size(); ++i) add(fixed_primes[i], fixed_exps[i]);
    add(lip.p_r, k);
    for (auto t : extras) add(t, 1);
    const CrtBasis basis = crt_basis(moduli);

    // Mixed-radix walk over root choices, capped.
    std::vector<BigInt> candidates;
    std::vector<std::size_t> pick(root_sets.size(), 0);
    while (candidates.size() < limits.max_candidates) {
      BigInt n = 0;
      for (std::size_t i = 0; i < pick.size(); ++i) n += root_sets[i][pick[i]] * basis.idempotents[i];
      n %= basis.modulus;
      if (n == 0) n = basis.modulus;
      candidates.push_back(n);
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == root_sets[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& n : candidates) {
      const BigInt value = q(n);
      if (value <= 0 || value < threshold) continue;
      Factorization full = dfac;
      try {
        full *= factorize(value / basis.modulus, budget);
      } catch (const Error& e) {
        if (e.code() == Errc::BudgetExceeded) continue;
        throw;
      }
      auto verdict = is_practical(full);
      if (verdict.practical) {
        QuadWitness w;
        w.n = n;
        w.value = value;
        w.modulus = basis.modulus;
        w.modulus_factorization = dfac;
        w.k = k;
        w.extra_primes = extras;
        w.verdict = std::move(verdict);
        return w;
      }
      if (guaranteed)
        throw Error(Errc::ClassificationMismatch,
                    "q(" + to_string(n) + ") = " + to_string(value) + " is not practical although " +
                        "prod(1 + 1/t) exceeds a + |b| + |c|");
    }
  }
  throw Error(Errc::SearchExhausted, "no practical value found for " + q.to_string() + " within " +
                                         std::to_string(limits.max_extra_primes) + " extra primes");
}

}  // namespace practicum
