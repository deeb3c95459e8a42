// Serial reference vs OpenMP kernels: wall time and agreement.

#include <CLI11.hpp>

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "practicum/representations.hpp"
#include "practicum/sieve.hpp"

using namespace practicum;

namespace {

double best_of(int repeat, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-22s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark serial and parallel kernels"};
  std::uint64_t limit = 10'000'000;
  int repeat = 3;
  std::size_t family_count = 50;
  app.add_option("--limit", limit, "Sieve and Goldbach limit")->check(CLI::PositiveNumber);
  app.add_option("--repeat", repeat, "Runs per kernel; the best time is reported")->check(CLI::PositiveNumber);
  app.add_option("--family-count", family_count, "Family members verified")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d, limit: %llu\n", omp_get_max_threads(), static_cast<unsigned long long>(limit));
  std::printf("%-22s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  PracticalBitmap a, b;
  const double ts = best_of(repeat, [&] { a = sieve_practicals_serial(limit); });
  const double tp = best_of(repeat, [&] { b = sieve_practicals(limit); });
  row("sieve", ts, tp, a == b);

  GoldbachSweep gs, gp;
  const double gts = best_of(repeat, [&] { gs = goldbach_sweep_serial(b, limit); });
  const double gtp = best_of(repeat, [&] { gp = goldbach_sweep(b, limit); });
  row("goldbach sweep", gts, gtp,
      gs.checked == gp.checked && gs.first_failure == gp.first_failure && gs.max_first_summand == gp.max_first_summand);

  std::vector<NonRepresentability> fs, fp;
  const double fts = best_of(repeat, [&] { fs = verify_family_serial(0, family_count); });
  const double ftp = best_of(repeat, [&] { fp = verify_family(0, family_count); });
  bool same = fs.size() == fp.size();
  for (std::size_t i = 0; same && i < fs.size(); ++i)
    same = fs[i].m == fp[i].m && fs[i].not_representable == fp[i].not_representable;
  row("family verify (j=0)", fts, ftp, same);
  return 0;
}
