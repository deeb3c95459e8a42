#include "practicum/error.hpp"

#include <cctype>

#include "practicum/bigint.hpp"

namespace practicum {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::OracleBoundExceeded: return "OracleBoundExceeded";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::ScanBudgetExceeded: return "ScanBudgetExceeded";
    case Errc::ClassificationMismatch: return "ClassificationMismatch";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::IterationCap: return "IterationCap";
    case Errc::InvalidResidue: return "InvalidResidue";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::InvalidJ: return "InvalidJ";
    case Errc::NotFound: return "NotFound";
    case Errc::CacheInvalid: return "CacheInvalid";
  }
  return "Unknown";
}

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error(Errc::InvalidInput, "not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw Error(Errc::InvalidInput, "not an integer: '" + text + "'");
  BigInt v(text.substr(i));
  return text[0] == '-' ? BigInt(-v) : v;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace practicum
