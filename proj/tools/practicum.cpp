// practicum: command-line front end for the practical-number library.
//
// Exit codes: 0 success, 1 falsification (ClassificationMismatch, NotFound,
// failed --verify), 2 budget or usage errors.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "practicum/error.hpp"
#include "practicum/json.hpp"

using namespace practicum;

namespace {

constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string format = "json";
  std::uint64_t trial_bound = FactorBudget{}.trial_bound;
  std::uint64_t rho_iterations = FactorBudget{}.rho_iterations;
  std::uint64_t oracle_bound = kDefaultOracleBound;
  std::uint64_t scan_limit = kDefaultScanLimit;
  std::uint64_t memory_budget = kDefaultMemoryBudget;
  std::size_t prime_cap = kDefaultPrimeCap;
  std::string cache_dir;
  bool verify = false;

  FactorBudget budget() const { return {trial_bound, rho_iterations}; }
};

// Raised when --verify finds a disagreement.
struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void verify_that(bool ok, const std::string& what) {
  if (!ok) throw VerifyFailure("verification failed: " + what);
}

// --- output ---------------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const Json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_csv(const Json& j, std::ostream& os) {
  auto row = [&](const Json& obj, const std::vector<std::string>& keys) {
    for (std::size_t i = 0; i < keys.size(); ++i)
      os << (i ? "," : "") << (obj.contains(keys[i]) ? csv_field(obj.at(keys[i])) : "");
    os << '\n';
  };
  if (j.is_array()) {
    if (j.empty()) return;
    if (!j.front().is_object()) {
      os << "value\n";
      for (const auto& v : j) os << csv_field(v) << '\n';
      return;
    }
    std::vector<std::string> keys;
    for (const auto& obj : j)
      for (const auto& [k, _] : obj.items())
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
    os << '\n';
    for (const auto& obj : j) row(obj, keys);
    return;
  }
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << '\n';
  row(j, keys);
}

void emit_plain(const Json& j, std::ostream& os) {
  if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_object()) {
        os << scalar_text(v) << '\n';
        continue;
      }
      bool first = true;
      for (const auto& [k, x] : v.items()) {
        os << (first ? "" : "  ") << k << '=' << scalar_text(x);
        first = false;
      }
      os << '\n';
    }
    return;
  }
  for (const auto& [k, v] : j.items()) os << k << ": " << scalar_text(v) << '\n';
}

void emit(const Json& j, const RunConfig& cfg) {
  if (cfg.format == "csv")
    emit_csv(j, std::cout);
  else if (cfg.format == "plain")
    emit_plain(j, std::cout);
  else
    std::cout << j.dump() << '\n';
}

// --- sieve cache ------------------------------------------------------------

std::filesystem::path cache_file(const RunConfig& cfg) {
  return std::filesystem::path(cfg.cache_dir) / "practicals.bin";
}

// A bitmap covering at least `limit`, from the cache when one is configured
// and large enough. A stale or corrupt cache is rebuilt.
PracticalBitmap bitmap_for(std::uint64_t limit, const RunConfig& cfg) {
  if (cfg.cache_dir.empty()) return sieve_practicals(limit, cfg.memory_budget);
  const auto path = cache_file(cfg);
  if (std::filesystem::exists(path)) {
    try {
      auto cached = load_bitmap(path);
      if (cached.limit() >= limit) return cached;
    } catch (const Error& e) {
      std::cerr << "practicum: ignoring cache: " << e.what() << '\n';
    }
  }
  auto bm = sieve_practicals(limit, cfg.memory_budget);
  std::error_code ec;
  std::filesystem::create_directories(cfg.cache_dir, ec);
  const auto tmp = path.string() + ".tmp";
  save_bitmap(bm, tmp);
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(Errc::InvalidInput, "cannot write cache " + path.string() + ": " + ec.message());
  return bm;
}

// --- argument helpers -------------------------------------------------------

BigInt big(const std::string& s) { return parse_bigint(s); }

std::uint64_t u64_arg(const std::string& s, const char* name) {
  const BigInt v = parse_bigint(s);
  auto u = to_u64(v);
  if (!u) throw Error(Errc::InvalidInput, std::string(name) + " must fit in 64 bits and be non-negative, got " + s);
  return *u;
}

std::vector<BigInt> big_list(const std::string& s) {
  std::vector<BigInt> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_bigint(item));
  return out;
}

void check_oracle(const BigInt& n, bool practical, const RunConfig& cfg) {
  if (n < 1 || n > cfg.oracle_bound) return;
  verify_that(is_practical_oracle(n.convert_to<std::uint64_t>(), cfg.oracle_bound) == practical,
              "oracle disagrees on " + to_string(n));
}

// --- commands ---------------------------------------------------------------

Json cmd_test(const std::string& n_text, const RunConfig& cfg) {
  const auto v = is_practical(big(n_text), cfg.budget());
  if (cfg.verify) {
    verify_that(v.replay(), "certificate replay");
    check_oracle(v.n, v.practical, cfg);
  }
  return to_json(v);
}

Json cmd_oracle(const std::string& n_text, const RunConfig& cfg) {
  const std::uint64_t n = u64_arg(n_text, "N");
  Json j;
  j["n"] = n;
  j["practical"] = is_practical_oracle(n, cfg.oracle_bound);
  return j;
}

Json cmd_sieve(std::uint64_t limit, const std::string& out, const RunConfig& cfg) {
  const auto bm = out.empty() ? bitmap_for(limit, cfg) : sieve_practicals(limit, cfg.memory_budget);
  if (!out.empty()) save_bitmap(bm, out);
  if (cfg.verify) {
    // The cached bitmap may extend past `limit`; compare the common range.
    const auto ref = sieve_practicals_serial(limit, cfg.memory_budget);
    for (std::uint64_t n = 1; n <= limit; ++n)
      if (ref.test(n) != bm.test(n))
        verify_that(false, "parallel sieve differs from serial reference at " + std::to_string(n));
  }
  Json j;
  j["limit"] = limit;
  j["count"] = bm.count(limit);
  if (!out.empty()) j["file"] = out;
  return j;
}

Json cmd_count(std::uint64_t x, const std::vector<std::uint64_t>& report, const RunConfig& cfg) {
  std::uint64_t top = x;
  for (auto r : report) top = std::max(top, r);
  const auto bm = bitmap_for(top, cfg);
  if (report.empty()) return to_json(density_report(bm, {x}).front());
  std::vector<std::uint64_t> points = report;
  points.push_back(x);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Json rows = Json::array();
  for (const auto& row : density_report(bm, points)) rows.push_back(to_json(row));
  return rows;
}

Json cmd_ap_stream(std::uint64_t a, std::uint64_t b, std::size_t count, const RunConfig& cfg) {
  const auto cls = classify_ap(a, b, cfg.budget());
  const auto terms = ap_practical_stream(a, b, count, cfg.scan_limit);
  if (cfg.verify)
    for (auto t : terms) {
      verify_that(t % a == b % a && t >= b, "term " + std::to_string(t) + " outside the progression");
      check_oracle(t, true, cfg);
    }
  Json j;
  j["a"] = a;
  j["b"] = b;
  j["case"] = ap_case_name(cls.kind);
  j["terms"] = terms;
  return j;
}

Json cmd_ap_witness(const std::string& a, const std::string& b, const std::string& min, const RunConfig& cfg) {
  const auto w = ap_constructive_witness(big(a), big(b), big(min), cfg.budget());
  if (cfg.verify) {
    verify_that(w.value == big(a) * w.n + big(b) && w.value >= big(min), "witness outside the progression");
    verify_that(w.certificate.check() && w.verdict.replay(), "certificate replay");
    check_oracle(w.value, true, cfg);
  }
  return to_json(w);
}

Json cmd_poly_witness(const std::string& coeffs, const RunConfig& cfg) {
  const auto cs = big_list(coeffs);
  const auto w = nonpractical_witness(cs, cfg.scan_limit, cfg.budget());
  if (cfg.verify) {
    BigInt v = 0;
    for (std::size_t k = cs.size(); k-- > 0;) v = v * w.n + cs[k];
    verify_that(v == w.value && w.verdict.replay(), "witness value");
    check_oracle(w.value, false, cfg);
  }
  Json j = to_json(w);
  return j;
}

QuadraticPoly quad_from(const std::string& a, const std::string& b, const std::string& c) {
  return QuadraticPoly(big(a), big(b), big(c));
}

Json cmd_quad_stream(const QuadraticPoly& q, std::size_t count, const RunConfig& cfg) {
  const auto cls = classify_quadratic(q, cfg.prime_cap);
  const auto terms = quad_practical_stream(q, count, cfg.scan_limit);
  Json arr = Json::array();
  for (const auto& t : terms) {
    if (cfg.verify) {
      verify_that(q(t.n) == t.value, "stream value");
      check_oracle(t.value, true, cfg);
    }
    arr.push_back({{"n", t.n}, {"value", t.value}});
  }
  Json j;
  j["q"] = q.to_string();
  j["case"] = quad_case_name(cls.kind);
  j["terms"] = arr;
  return j;
}

Json cmd_quad_witness(const QuadraticPoly& q, const std::string& min, const RunConfig& cfg) {
  QuadWitnessLimits limits;
  limits.prime_cap = cfg.prime_cap;
  const auto w = quad_constructive_witness(q, big(min), limits, cfg.budget());
  if (cfg.verify) {
    verify_that(q(w.n) == w.value && w.value >= big(min) && w.verdict.replay() && w.verdict.practical,
                "quadratic witness");
    check_oracle(w.value, true, cfg);
  }
  return to_json(w);
}

Json cmd_decompose(const std::string& n_text, const RunConfig& cfg) {
  const auto d = decompose_square_plus_practical(big(n_text));
  if (cfg.verify) {
    verify_that(d.x * d.x + d.practical_part == d.n && d.certificate.check(), "decomposition certificate");
    check_oracle(d.practical_part, true, cfg);
  }
  return to_json(d);
}

Json cmd_family(int j, std::size_t count, const RunConfig& cfg) {
  if (!cfg.verify) return family_stream(j, count);
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : verify_family(j, count)) {
    all = all && r.not_representable;
    arr.push_back(to_json(r, false));
  }
  emit(arr, cfg);
  if (!all) throw VerifyFailure("verification failed: family " + std::to_string(j) + " has representable members");
  return nullptr;
}

Json cmd_goldbach(std::uint64_t n, const RunConfig& cfg) {
  if (n < 2 || n % 2) throw Error(Errc::InvalidInput, "goldbach needs an even n >= 2");
  const auto bm = bitmap_for(n, cfg);
  const auto [p1, p2] = goldbach_pair(n, bm);
  if (cfg.verify) {
    verify_that(is_practical(BigInt(p1)).practical && is_practical(BigInt(p2)).practical, "pair practicality");
    check_oracle(p1, true, cfg);
    check_oracle(p2, true, cfg);
  }
  Json out;
  out["n"] = n;
  out["p1"] = p1;
  out["p2"] = p2;
  return out;
}

Json cmd_triples(std::uint64_t limit, const RunConfig& cfg) {
  const auto bm = bitmap_for(limit + 2, cfg);
  const auto triples = practical_triples(limit, bm);
  if (cfg.verify)
    for (auto m : triples)
      for (std::uint64_t v : {m - 2, m, m + 2}) {
        verify_that(is_practical(BigInt(v)).practical, "triple member " + std::to_string(v));
        check_oracle(v, true, cfg);
      }
  Json out;
  out["limit"] = limit;
  out["triples"] = triples;
  return out;
}

Json cmd_palindromic(std::size_t count, const RunConfig& cfg) {
  const auto chain = palindromic_practicals(count);
  if (cfg.verify) verify_that(check_palindromic_chain(chain), "palindromic chain");
  Json arr = Json::array();
  for (const auto& link : chain) arr.push_back(to_json(link));
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Practical numbers: tests, sieves, progressions, quadratics and representations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a TOML/INI file (key = option name)");

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--trial-bound", cfg.trial_bound, "Trial division bound for factorization")->check(CLI::PositiveNumber);
  app.add_option("--rho-iterations", cfg.rho_iterations, "Pollard rho iteration budget")->check(CLI::PositiveNumber);
  app.add_option("--oracle-bound", cfg.oracle_bound, "Largest n handed to the subset-sum oracle")
      ->check(CLI::PositiveNumber);
  app.add_option("--scan-limit", cfg.scan_limit, "Largest n scanned by streams and searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--memory-budget", cfg.memory_budget, "Sieve memory budget in bytes")->check(CLI::PositiveNumber);
  app.add_option("--prime-cap", cfg.prime_cap, "Primes tried when looking for m_q(p) = infinity")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for the sieve cache (env PRACTICUM_CACHE_DIR)");
  app.add_flag("--verify", cfg.verify, "Re-check results with the independent oracle");

  std::string n_text, a_text, b_text, c_text, min_text = "1", coeffs, out_file;
  std::uint64_t limit = 0, x = 0, p = 0;
  std::size_t count = 10;
  int j = 0;
  std::vector<std::uint64_t> report;
  std::function<Json()> run;

  auto* test = app.add_subcommand("test", "Stewart test with certificate");
  test->add_option("N", n_text)->required();
  test->callback([&] { run = [&] { return cmd_test(n_text, cfg); }; });

  auto* orc = app.add_subcommand("oracle", "Subset-sum definition check");
  orc->add_option("N", n_text)->required();
  orc->callback([&] { run = [&] { return cmd_oracle(n_text, cfg); }; });

  auto* sieve = app.add_subcommand("sieve", "Sieve practical numbers up to a limit");
  sieve->add_option("--limit", limit)->required()->check(CLI::PositiveNumber);
  sieve->add_option("--out", out_file, "Write the bitmap file here");
  sieve->callback([&] { run = [&] { return cmd_sieve(limit, out_file, cfg); }; });

  auto* cnt = app.add_subcommand("count", "Count practical numbers up to X");
  cnt->add_option("X", x)->required()->check(CLI::PositiveNumber);
  cnt->add_option("--report", report, "Extra checkpoints for the density report")->delimiter(',');
  cnt->callback([&] { run = [&] { return cmd_count(x, report, cfg); }; });

  auto* ap = app.add_subcommand("ap", "Arithmetic progressions a n + b");
  ap->require_subcommand(1);
  auto* ap_classify = ap->add_subcommand("classify", "Classify the progression");
  ap_classify->add_option("A", a_text)->required();
  ap_classify->add_option("B", b_text)->required();
  ap_classify->callback([&] { run = [&] { return to_json(classify_ap(big(a_text), big(b_text), cfg.budget())); }; });
  auto* ap_stream = ap->add_subcommand("stream", "First practical terms");
  ap_stream->add_option("A", a_text)->required();
  ap_stream->add_option("B", b_text)->required();
  ap_stream->add_option("--count", count)->check(CLI::PositiveNumber);
  ap_stream->callback([&] {
    run = [&] { return cmd_ap_stream(u64_arg(a_text, "A"), u64_arg(b_text, "B"), count, cfg); };
  });
  auto* ap_witness = ap->add_subcommand("witness", "Constructive practical term at least A0");
  ap_witness->add_option("A", a_text)->required();
  ap_witness->add_option("B", b_text)->required();
  ap_witness->add_option("--min", min_text);
  ap_witness->callback([&] { run = [&] { return cmd_ap_witness(a_text, b_text, min_text, cfg); }; });

  auto* poly = app.add_subcommand("poly", "Integer polynomials");
  poly->require_subcommand(1);
  auto* poly_witness = poly->add_subcommand("witness", "Least n with P(n) not practical");
  poly_witness->add_option("COEFFS", coeffs, "Coefficients, constant term first: C0,C1,...")->required();
  poly_witness->callback([&] { run = [&] { return cmd_poly_witness(coeffs, cfg); }; });

  auto* quad = app.add_subcommand("quad", "Quadratics a n^2 + b n + c");
  quad->require_subcommand(1);
  auto abc = [&](CLI::App* sub) {
    sub->add_option("A", a_text)->required();
    sub->add_option("B", b_text)->required();
    sub->add_option("C", c_text)->required();
  };
  auto* quad_mq = quad->add_subcommand("mq", "m_q(p)");
  abc(quad_mq);
  quad_mq->add_option("P", p)->required();
  quad_mq->callback([&] { run = [&] { return to_json(mq(quad_from(a_text, b_text, c_text), p)); }; });
  auto* quad_classify = quad->add_subcommand("classify", "Infinitely or finitely many practical values");
  abc(quad_classify);
  quad_classify->callback([&] {
    run = [&] { return to_json(classify_quadratic(quad_from(a_text, b_text, c_text), cfg.prime_cap)); };
  });
  auto* quad_stream = quad->add_subcommand("stream", "First practical values");
  abc(quad_stream);
  quad_stream->add_option("--count", count)->check(CLI::PositiveNumber);
  quad_stream->callback([&] { run = [&] { return cmd_quad_stream(quad_from(a_text, b_text, c_text), count, cfg); }; });
  auto* quad_witness = quad->add_subcommand("witness", "Constructive practical value at least A0");
  abc(quad_witness);
  quad_witness->add_option("--min", min_text);
  quad_witness->callback(
      [&] { run = [&] { return cmd_quad_witness(quad_from(a_text, b_text, c_text), min_text, cfg); }; });

  auto* decompose = app.add_subcommand("decompose", "Write n = 1 (mod 8) as a square plus a practical number");
  decompose->add_option("N", n_text)->required();
  decompose->callback([&] { run = [&] { return cmd_decompose(n_text, cfg); }; });

  auto* family = app.add_subcommand("family", "Numbers not a square plus a practical number");
  family->add_option("J", j)->required();
  family->add_option("--count", count)->check(CLI::PositiveNumber);
  family->callback([&] { run = [&] { return cmd_family(j, count, cfg); }; });

  auto* goldbach = app.add_subcommand("goldbach", "Even n as a sum of two practical numbers");
  goldbach->add_option("N", n_text)->required();
  goldbach->callback([&] { run = [&] { return cmd_goldbach(u64_arg(n_text, "N"), cfg); }; });

  auto* triples = app.add_subcommand("triples", "m with m-2, m, m+2 all practical");
  triples->add_option("--limit", limit)->required()->check(CLI::PositiveNumber);
  triples->callback([&] { run = [&] { return cmd_triples(limit, cfg); }; });

  auto* pal = app.add_subcommand("palindromic", "Palindromic practical numbers 88, 8888, ...");
  pal->add_option("--count", count)->check(CLI::PositiveNumber);
  pal->callback([&] { run = [&] { return cmd_palindromic(count, cfg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  // The environment overrides the config file, but not an explicit flag.
  if (const char* env = std::getenv("PRACTICUM_CACHE_DIR"); env && *env) {
    bool flag = false;
    for (int i = 1; i < argc; ++i) flag = flag || std::string_view(argv[i]).starts_with("--cache-dir");
    if (!flag) cfg.cache_dir = env;
  }

  try {
    const Json out = run();
    if (!out.is_null()) emit(out, cfg);
    return 0;
  } catch (const VerifyFailure& e) {
    std::cerr << "practicum: " << e.what() << '\n';
    return kExitFalsified;
  } catch (const Error& e) {
    std::cerr << "practicum: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return is_falsification(e.code()) ? kExitFalsified : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "practicum: " << e.what() << '\n';
    return kExitUsage;
  }
}
