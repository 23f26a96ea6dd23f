#include "gossez/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "gossez/json_io.hpp"

namespace gossez {

using nlohmann::json;

std::string_view to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return "json";
    case ReportFormat::Csv:
      return "csv";
    case ReportFormat::Markdown:
      return "md";
  }
  return "json";
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "md") return ReportFormat::Markdown;
  throw std::invalid_argument("unknown report format: " + std::string{text});
}

bool ReportDoc::all_passed() const { return first_failure().empty(); }

std::string ReportDoc::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed()) return c.name;
  }
  return {};
}

namespace {

json config_json(const CheckConfig& config) {
  return json{{"checks", config.checks},
              {"truncation", config.truncation},
              {"trials", config.trials},
              {"seed", config.seed},
              {"scale_max", rational_json(config.scale_max)},
              {"format", std::string{to_string(config.format)}}};
}

json report_json(const ReportDoc& report, bool include_timing) {
  json checks = json::array();
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    json entry{{"name", c.name},
               {"claims", c.claims},
               {"anchor", c.anchor},
               {"expected", std::string{to_string(c.expected)}},
               {"status", std::string{to_string(c.status)}},
               {"passed", c.passed()},
               {"verdicts", c.verdicts}};
    if (include_timing) entry["wallclock_ms"] = c.wallclock_ms;
    if (c.passed()) ++passed;
    checks.push_back(std::move(entry));
  }
  json summary{{"total", report.checks.size()},
               {"passed", passed},
               {"failed", report.checks.size() - passed}};
  if (!report.all_passed()) summary["first_failure"] = report.first_failure();
  return json{{"artifact", "gossez-lab"},
              {"version", report.version},
              {"config", config_json(report.config)},
              {"checks", std::move(checks)},
              {"summary", std::move(summary)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string emit_csv(const ReportDoc& report) {
  std::ostringstream os;
  os << "check,expected,status,passed,verdicts,pairs_checked,skipped,anchor\n";
  for (const auto& c : report.checks) {
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    for (const auto& v : c.verdicts) {
      checked += v.stats.checked;
      skipped += v.stats.skipped;
    }
    os << csv_field(c.name) << ',' << to_string(c.expected) << ',' << to_string(c.status) << ','
       << (c.passed() ? "true" : "false") << ',' << c.verdicts.size() << ',' << checked << ','
       << skipped << ',' << csv_field(c.anchor) << '\n';
  }
  return os.str();
}

std::string emit_markdown(const ReportDoc& report) {
  std::ostringstream os;
  os << "# gossez-lab report\n\n";
  os << "version " << report.version << ", seed " << report.config.seed << ", truncation "
     << report.config.truncation << ", trials " << report.config.trials << ", scale max "
     << to_string(report.config.scale_max) << "\n\n";
  os << "| check | expected | status | result | wallclock (ms) |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& c : report.checks) {
    os << "| " << c.name << " | " << to_string(c.expected) << " | " << to_string(c.status) << " | "
       << (c.passed() ? "pass" : "FAIL") << " | " << std::fixed << std::setprecision(1)
       << c.wallclock_ms << " |\n";
  }
  for (const auto& c : report.checks) {
    os << "\n## " << c.name << "\n\n" << c.anchor << "\n\n";
    for (const auto& v : c.verdicts) {
      os << "- " << v.property << ": " << to_string(v.status) << " (" << v.stats.checked
         << " checked";
      if (v.stats.skipped > 0) os << ", " << v.stats.skipped << " skipped";
      os << ")\n";
      for (const auto& note : v.notes) os << "  - " << note << "\n";
    }
  }
  if (!report.all_passed()) os << "\nfirst failing check: " << report.first_failure() << "\n";
  return os.str();
}

}  // namespace

std::string emit(const ReportDoc& report, ReportFormat format, bool include_timing) {
  switch (format) {
    case ReportFormat::Json:
      return report_json(report, include_timing).dump(2) + "\n";
    case ReportFormat::Csv:
      return emit_csv(report);
    case ReportFormat::Markdown:
      return emit_markdown(report);
  }
  throw std::invalid_argument("unknown report format");
}

ReportDoc parse_report_json(std::string_view text) {
  const json j = json::parse(text);
  ReportDoc report;
  report.version = j.at("version").get<std::string>();
  const auto& cfg = j.at("config");
  report.config.checks = cfg.at("checks").get<std::vector<std::string>>();
  report.config.truncation = cfg.at("truncation").get<Index>();
  report.config.trials = cfg.at("trials").get<std::size_t>();
  report.config.seed = cfg.at("seed").get<std::uint64_t>();
  report.config.scale_max = rational_from_json(cfg.at("scale_max"));
  report.config.format = parse_report_format(cfg.at("format").get<std::string>());
  for (const auto& c : j.at("checks")) {
    CheckResult r;
    r.name = c.at("name").get<std::string>();
    r.claims = c.at("claims").get<std::vector<std::string>>();
    r.anchor = c.at("anchor").get<std::string>();
    r.expected = parse_verdict_status(c.at("expected").get<std::string>());
    r.status = parse_verdict_status(c.at("status").get<std::string>());
    r.verdicts = c.at("verdicts").get<std::vector<PropertyVerdict>>();
    r.wallclock_ms = c.value("wallclock_ms", 0.0);
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace gossez
