#include "practicum/representations.hpp"

#include <algorithm>

#include "practicum/error.hpp"

namespace practicum {

MultiplierCertificate power2_practical(unsigned k, const BigInt& m) {
  if (k < 1 || m < 1) throw Error(Errc::InvalidInput, "power2_practical needs k >= 1 and m >= 1");
  Factorization base;
  base.multiply(BigInt(2), k);
  return certify_product(is_practical(base), m);
}

BigInt sqrt_mod_power_of_two(const BigInt& m, unsigned k) {
  if (k < 1) throw Error(Errc::InvalidInput, "sqrt_mod_power_of_two needs k >= 1");
  if (mod_floor(m, 8) != 1)
    throw Error(Errc::InvalidResidue, to_string(m) + " is not 1 mod 8");
  BigInt x = 1;
  for (unsigned s = 1; s < k; ++s) {
    const BigInt mod = BigInt(1) << (s + 3);
    if (mod_floor(x * x - m, mod) != 0) x = (BigInt(1) << (s + 1)) - x;
  }
  return x;
}

SquareDecomposition decompose_square_plus_practical(const BigInt& n) {
  if (n <= 1 || mod_floor(n, 8) != 1)
    throw Error(Errc::InvalidInput, "decomposition needs n = 1 (mod 8) and n > 1, got " + to_string(n));
  SquareDecomposition d;
  d.n = n;
  // 2^(2m) <= n < 2^(2m+2), from the bit length.
  d.m = static_cast<unsigned>((bit_length(n) - 1) / 2);
  d.x = sqrt_mod_power_of_two(n, d.m);
  d.practical_part = n - d.x * d.x;
  d.s = d.practical_part >> (d.m + 2);
  d.certificate = power2_practical(d.m + 2, d.s);
  return d;
}

FamilySpec family_spec(int j) {
  FamilySpec f;
  f.j = j;
  f.exclude_square_minus_one = false;
  auto sys = [](std::initializer_list<std::pair<int, int>> items) {
    CongruenceSystem out;
    for (auto [r, m] : items) out.push_back({BigInt(r), BigInt(m)});
    return out;
  };
  switch (j) {
    case 0:
      f.system = sys({{24, 32}, {2, 3}, {2, 5}, {6, 7}, {10, 11}, {2, 13}});
      break;
    case 4:
      f.system = sys({{12, 16}, {2, 3}, {2, 5}, {6, 7}, {10, 11}, {2, 13}});
      break;
    case 5:
      f.system = sys({{5, 8}, {2, 3}, {2, 5}, {6, 7}});
      break;
    case 2:
      f.system = sys({{2, 24}});
      f.exclude_square_minus_one = true;
      break;
    case 3:
      f.system = sys({{11, 24}});
      break;
    case 6:
      f.system = sys({{14, 24}});
      break;
    case 7:
      f.system = sys({{23, 24}});
      break;
    case 1:
      throw Error(Errc::InvalidJ, "every 8k + 1 is a square plus a practical number");
    default:
      throw Error(Errc::InvalidJ, "j must be in {0, 2, 3, 4, 5, 6, 7}");
  }
  f.canonical = crt_solve(f.system);
  return f;
}

std::vector<std::uint64_t> family_stream(int j, std::size_t count) {
  const FamilySpec f = family_spec(j);
  const auto r = f.canonical.residue.convert_to<std::uint64_t>();
  const auto M = f.canonical.modulus.convert_to<std::uint64_t>();
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    const u128 m = static_cast<u128>(M) * i + r;
    if (m > std::numeric_limits<std::uint64_t>::max())
      throw Error(Errc::InvalidInput, "family member exceeds 64 bits");
    if (f.exclude_square_minus_one && is_square(static_cast<std::uint64_t>(m) - 1)) continue;
    out.push_back(static_cast<std::uint64_t>(m));
  }
  return out;
}

std::uint64_t family_member(int j, std::uint64_t index) {
  return family_stream(j, index + 1).back();
}

NonRepresentability verify_not_representable(std::uint64_t m) {
  if (m == 0) throw Error(Errc::InvalidInput, "m must be positive");
  NonRepresentability out;
  out.m = m;
  for (std::uint64_t x = 0; static_cast<u128>(x) * x < m; ++x) {
    const std::uint64_t rem = m - x * x;
    auto verdict = is_practical(BigInt(rem));
    const bool practical = verdict.practical;
    out.trace.push_back({x, rem, std::move(verdict)});
    if (practical) return out;
  }
  out.not_representable = true;
  return out;
}

std::vector<NonRepresentability> verify_family(int j, std::size_t count) {
  const auto members = family_stream(j, count);
  std::vector<NonRepresentability> out(members.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(members.size()); ++i)
    out[i] = verify_not_representable(members[i]);
  return out;
}

std::vector<NonRepresentability> verify_family_serial(int j, std::size_t count) {
  std::vector<NonRepresentability> out;
  for (auto m : family_stream(j, count)) out.push_back(verify_not_representable(m));
  return out;
}

std::pair<std::uint64_t, std::uint64_t> goldbach_pair(std::uint64_t n, const PracticalBitmap& bitmap) {
  if (n < 2 || n % 2) throw Error(Errc::InvalidInput, "goldbach_pair needs an even n >= 2");
  if (n > bitmap.limit()) throw Error(Errc::InvalidInput, "n exceeds the sieve limit");
  for (std::uint64_t p1 = 1; p1 <= n / 2; ++p1)
    if (bitmap.test(p1) && bitmap.test(n - p1)) return {p1, n - p1};
  throw Error(Errc::NotFound, std::to_string(n) + " is not a sum of two practical numbers");
}

std::pair<std::uint64_t, std::uint64_t> goldbach_pair(std::uint64_t n) {
  return goldbach_pair(n, sieve_practicals(std::max<std::uint64_t>(n, 2)));
}

namespace {

std::uint64_t first_summand(std::uint64_t n, const PracticalBitmap& bitmap) {
  for (std::uint64_t p1 = 1; p1 <= n / 2; ++p1)
    if (bitmap.test(p1) && bitmap.test(n - p1)) return p1;
  return 0;
}

}  // namespace

GoldbachSweep goldbach_sweep(const PracticalBitmap& bitmap, std::uint64_t limit) {
  if (limit > bitmap.limit()) throw Error(Errc::InvalidInput, "sweep exceeds the sieve limit");
  const std::int64_t halves = static_cast<std::int64_t>(limit / 2);
  std::uint64_t first_fail = std::numeric_limits<std::uint64_t>::max(), max_p1 = 0;
#pragma omp parallel for schedule(static) reduction(min : first_fail) reduction(max : max_p1)
  for (std::int64_t h = 1; h <= halves; ++h) {
    const std::uint64_t n = 2 * static_cast<std::uint64_t>(h);
    const std::uint64_t p1 = first_summand(n, bitmap);
    if (p1 == 0) first_fail = std::min(first_fail, n);
    max_p1 = std::max(max_p1, p1);
  }
  GoldbachSweep out;
  out.checked = static_cast<std::uint64_t>(halves);
  out.max_first_summand = max_p1;
  if (first_fail != std::numeric_limits<std::uint64_t>::max()) out.first_failure = first_fail;
  return out;
}

GoldbachSweep goldbach_sweep_serial(const PracticalBitmap& bitmap, std::uint64_t limit) {
  if (limit > bitmap.limit()) throw Error(Errc::InvalidInput, "sweep exceeds the sieve limit");
  GoldbachSweep out;
  for (std::uint64_t n = 2; n <= limit; n += 2) {
    ++out.checked;
    const std::uint64_t p1 = first_summand(n, bitmap);
    if (p1 == 0 && !out.first_failure) out.first_failure = n;
    out.max_first_summand = std::max(out.max_first_summand, p1);
  }
  return out;
}

std::vector<std::uint64_t> practical_triples(std::uint64_t limit, const PracticalBitmap& bitmap) {
  if (limit + 2 > bitmap.limit()) throw Error(Errc::InvalidInput, "triples need a sieve to limit + 2");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 3; m <= limit; ++m)
    if (bitmap.test(m - 2) && bitmap.test(m) && bitmap.test(m + 2)) out.push_back(m);
  return out;
}

std::vector<std::uint64_t> practical_triples(std::uint64_t limit) {
  return practical_triples(limit, sieve_practicals(limit + 2));
}

bool is_decimal_palindrome(const BigInt& v) {
  const std::string s = to_string(v);
  return std::equal(s.begin(), s.begin() + s.size() / 2, s.rbegin());
}

namespace {

BigInt closed_form(std::size_t n) {
  return 8 * (pow_big(BigInt(10), 1u << n) - 1) / 9;
}

}  // namespace

std::vector<PalindromeLink> palindromic_practicals(std::size_t count) {
  if (count < 1) throw Error(Errc::InvalidInput, "count must be at least 1");
  if (count > 24) throw Error(Errc::BudgetExceeded, "A_n has 2^n digits; count is capped at 24");
  std::vector<PalindromeLink> chain;
  PalindromeLink first;
  first.index = 1;
  first.value = 88;
  first.verdict = is_practical(first.value);
  chain.push_back(std::move(first));
  for (std::size_t n = 1; n < count; ++n) {
    const BigInt& prev = chain.back().value;
    const BigInt multiplier = pow_big(BigInt(10), 1u << n) + 1;
    if (multiplier > 2 * prev - 1)
      throw Error(Errc::ClassificationMismatch, "palindromic chain bound failed at n = " + std::to_string(n));
    PalindromeLink link;
    link.index = n + 1;
    link.certificate = certify_product_lower_bound(prev, multiplier, n - 1);
    link.value = link.certificate->product;
    chain.push_back(std::move(link));
  }
  return chain;
}

bool check_palindromic_chain(const std::vector<PalindromeLink>& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& link = chain[i];
    if (link.index != i + 1 || link.value != closed_form(link.index)) return false;
    if (!is_decimal_palindrome(link.value)) return false;
    if (i == 0) {
      if (!link.verdict || !link.verdict->practical || !link.verdict->replay() ||
          link.verdict->n != link.value)
        return false;
      continue;
    }
    const auto& cert = link.certificate;
    if (!cert || !cert->check() || cert->base != chain[i - 1].value || cert->product != link.value)
      return false;
    if (cert->base_ref != i - 1) return false;
    if (cert->multiplier != pow_big(BigInt(10), 1u << i) + 1) return false;
    if (cert->multiplier > 2 * cert->base - 1) return false;
  }
  return !chain.empty();
}

}  // namespace practicum
