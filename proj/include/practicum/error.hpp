#pragma once

#include <stdexcept>
#include <string>

namespace practicum {

enum class Errc {
  BudgetExceeded,
  MemoryBudgetExceeded,
  Inconsistent,
  OracleBoundExceeded,
  BoundViolated,
  ScanBudgetExceeded,
  ClassificationMismatch,
  SearchExhausted,
  IterationCap,
  InvalidResidue,
  InvalidInput,
  InvalidJ,
  NotFound,
  CacheInvalid,
};

const char* errc_name(Errc code) noexcept;

// Falsification signals: a construction that should always succeed did not verify.
// Everything else is a budget or usage problem.
constexpr bool is_falsification(Errc code) noexcept {
  return code == Errc::ClassificationMismatch || code == Errc::NotFound;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace practicum
