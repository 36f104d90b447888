#include "locdeg/report.hpp"

#include <ostream>

#include <nlohmann/json.hpp>

namespace locdeg {

namespace {
using ordered_json = nlohmann::ordered_json;
}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

std::string to_json_line(const CheckReport& report) {
  ordered_json line;
  line["theorem"] = report.theorem;
  line["instance"] = report.instance;
  line["status"] = to_string(report.status);
  if (report.witness.empty()) {
    line["witness"] = nullptr;
  } else {
    line["witness"] = ordered_json::parse(report.witness);
  }
  line["millis"] = report.millis;
  if (report.seed.has_value()) {
    line["seed"] = *report.seed;
  } else {
    line["seed"] = nullptr;
  }
  return line.dump();
}

std::string to_text_line(const CheckReport& report) {
  std::string line = to_string(report.status);
  line += '\t';
  line += report.theorem;
  line += '\t';
  line += report.instance;
  if (!report.witness.empty()) {
    line += '\t';
    line += report.witness;
  }
  return line;
}

void write_reports(std::ostream& out, const std::vector<CheckReport>& reports,
                   ReportFormat format) {
  for (const CheckReport& report : reports) {
    out << (format == ReportFormat::kJson ? to_json_line(report)
                                          : to_text_line(report))
        << '\n';
  }
}

int exit_code_for(const std::vector<CheckReport>& reports) {
  bool budget = false;
  for (const CheckReport& report : reports) {
    if (report.status == CheckStatus::kFail) return 1;
    budget = budget || report.budget_exhausted;
  }
  return budget ? 3 : 0;
}

}  // namespace locdeg
