#include "seaweed/report.hpp"

#include "seaweed/errors.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace seaweed {

ReportFormat parse_report_format(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "json") return ReportFormat::Json;
  if (lower == "csv") return ReportFormat::Csv;
  if (lower == "text") return ReportFormat::Text;
  throw InputError("unknown report format '" + std::string(text) + "' (expected json, csv or text)");
}

ReportSummary summarize(const std::vector<ClassificationRecord>& records) {
  ReportSummary s;
  s.total = records.size();
  for (const auto& r : records) {
    if (r.index == 1) ++s.index_one;
    switch (r.verdict) {
      case Verdict::Consistent: ++s.consistent; break;
      case Verdict::Counterexample: ++s.counterexample; break;
      case Verdict::Unresolved: ++s.unresolved; break;
    }
  }
  return s;
}

Json record_to_json(const ClassificationRecord& r) {
  Json out;
  out["family"] = std::string(to_string(r.family));
  out["n"] = r.n;
  out["top"] = r.top.to_string();
  out["bottom"] = r.bottom.to_string();
  out["dim"] = r.dim;
  out["index"] = r.index;
  out["parity"] = r.dim % 2 ? "odd" : "even";
  out["index_agreed"] = r.index_agreed;
  out["contact"] = std::string(to_string(r.contact));
  out["stable"] = std::string(to_string(r.stable));
  out["verdict"] = std::string(to_string(r.verdict));
  if (r.contact_form_stable) out["contact_form_stable"] = *r.contact_form_stable;
  out["seed"] = r.seed;
  Json budgets;
  budgets["attempts"] = r.budgets.attempts;
  budgets["bound"] = r.budgets.bound;
  budgets["index_trials"] = r.budgets.index_trials;
  out["budgets"] = std::move(budgets);
  out["contact_attempts"] = r.contact_attempts;
  out["stable_attempts"] = r.stable_attempts;
  if (r.contact_certificate || r.stability_certificate) {
    Json certs;
    if (r.contact_certificate) certs["contact"] = to_json(*r.contact_certificate);
    if (r.stability_certificate) certs["stability"] = to_json(*r.stability_certificate);
    out["certificates"] = std::move(certs);
  }
  return out;
}

namespace {

Json summary_json(const ReportSummary& s) {
  Json out;
  out["total"] = s.total;
  out["index_one"] = s.index_one;
  out["consistent"] = s.consistent;
  out["counterexample"] = s.counterexample;
  out["unresolved"] = s.unresolved;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report(const std::vector<ClassificationRecord>& records, ReportFormat format) {
  const ReportSummary s = summarize(records);
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json: {
      Json doc;
      doc["schema"] = 1;
      doc["summary"] = summary_json(s);
      Json list = Json::array();
      for (const auto& r : records) list.push_back(record_to_json(r));
      doc["records"] = std::move(list);
      out << doc.dump(2) << '\n';
      break;
    }
    case ReportFormat::Csv: {
      out << "family,n,top,bottom,dim,index,parity,index_agreed,contact,stable,verdict,contact_form_stable,seed,"
             "attempts,bound,index_trials,contact_attempts,stable_attempts\n";
      for (const auto& r : records) {
        out << to_string(r.family) << ',' << r.n << ',' << csv_field(r.top.to_string()) << ','
            << csv_field(r.bottom.to_string()) << ',' << r.dim << ',' << r.index << ',' << (r.dim % 2 ? "odd" : "even")
            << ',' << (r.index_agreed ? "true" : "false") << ',' << to_string(r.contact) << ',' << to_string(r.stable)
            << ',' << to_string(r.verdict) << ','
            << (r.contact_form_stable ? (*r.contact_form_stable ? "true" : "false") : "") << ',' << r.seed << ','
            << r.budgets.attempts << ',' << r.budgets.bound << ',' << r.budgets.index_trials << ','
            << r.contact_attempts << ',' << r.stable_attempts << '\n';
      }
      break;
    }
    case ReportFormat::Text: {
      out << std::left << std::setw(6) << "family" << std::setw(4) << "n" << std::setw(22) << "seaweed"
          << std::setw(5) << "dim" << std::setw(7) << "index" << std::setw(11) << "contact" << std::setw(11)
          << "stable" << "verdict\n";
      for (const auto& r : records) {
        out << std::left << std::setw(6) << to_string(r.family) << std::setw(4) << r.n << std::setw(22)
            << (r.top.to_string() + "|" + r.bottom.to_string()) << std::setw(5) << r.dim << std::setw(7) << r.index
            << std::setw(11) << to_string(r.contact) << std::setw(11) << to_string(r.stable) << to_string(r.verdict)
            << '\n';
      }
      out << "total " << s.total << ", index one " << s.index_one << ", consistent " << s.consistent
          << ", counterexample " << s.counterexample << ", unresolved " << s.unresolved << '\n';
      break;
    }
  }
  return out.str();
}

int exit_code(const std::vector<ClassificationRecord>& records, bool strict) {
  const ReportSummary s = summarize(records);
  if (s.counterexample > 0) return kExitCounterexample;
  if (strict && s.unresolved > 0) return kExitUnresolved;
  return kExitSuccess;
}

}  // namespace seaweed
