#pragma once
// Structured results for property checks, serialisable as JSON lines or as
// tab-separated text.  Serialisation is byte-deterministic: key order is
// fixed and timings default to zero so repeated runs compare equal.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace locdeg {

// Outcome of a single check.
enum class CheckStatus { kPass, kFail, kSkipped };

// "pass", "fail" or "skipped".
std::string to_string(CheckStatus status);

// One check outcome.
//
// `witness` holds a serialised JSON object, or is empty (rendered as null).
// For failures it carries a machine-verifiable counterexample; for skips an
// explanatory {"reason": ...}; for passes the computed values supporting the
// conclusion.  `millis` stays zero unless timing collection is switched on,
// keeping default reports byte-reproducible.  `budget_exhausted` marks skips
// caused by the step budget; it selects the process exit code and is not
// serialised as its own key (the witness reason spells it out).
struct CheckReport {
  std::string theorem;
  std::string instance;
  CheckStatus status = CheckStatus::kPass;
  std::string witness;
  long long millis = 0;
  std::optional<std::uint64_t> seed;
  bool budget_exhausted = false;
};

// One report as a single JSON line with key order
// theorem, instance, status, witness, millis, seed.
std::string to_json_line(const CheckReport& report);

// One report as a tab-separated line: status, theorem, instance, witness.
std::string to_text_line(const CheckReport& report);

enum class ReportFormat { kJson, kText };

// Writes one line per report in the requested format.
void write_reports(std::ostream& out, const std::vector<CheckReport>& reports,
                   ReportFormat format);

// 0 when nothing failed and no budget ran out, 1 when any check failed,
// 3 when the only problems were budget-starved skips.
int exit_code_for(const std::vector<CheckReport>& reports);

}  // namespace locdeg
