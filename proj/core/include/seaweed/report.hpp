#pragma once

#include "seaweed/classify.hpp"
#include "seaweed/serialize.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace seaweed {

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_report_format(std::string_view text);

struct ReportSummary {
  std::size_t total = 0;
  std::size_t index_one = 0;
  std::size_t consistent = 0;
  std::size_t counterexample = 0;
  std::size_t unresolved = 0;
};

ReportSummary summarize(const std::vector<ClassificationRecord>& records);

Json record_to_json(const ClassificationRecord& r);

// JSON: {"schema": 1, "summary": {...}, "records": [...]}.
// CSV: header row, one line per record.
// Text: aligned table followed by the summary counts.
std::string report(const std::vector<ClassificationRecord>& records, ReportFormat format);

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitUnresolved = 3;

// 2 if any COUNTEREXAMPLE; 3 if `strict` and any UNRESOLVED; else 0.
int exit_code(const std::vector<ClassificationRecord>& records, bool strict);

}  // namespace seaweed
