// gossez-lab: runs the check catalog and writes a report.
#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gossez/checks.hpp"
#include "gossez/report.hpp"

namespace {

enum Exit { kPass = 0, kCheckFailure = 1, kUsage = 2, kIo = 3 };

std::vector<std::string> split_checks(const std::vector<std::string>& raw) {
  std::vector<std::string> names;
  for (const auto& item : raw) {
    std::stringstream stream(item);
    std::string name;
    while (std::getline(stream, name, ',')) {
      if (!name.empty()) names.push_back(name);
    }
  }
  return names;
}

int list_catalog() {
  for (const auto& entry : gossez::check_catalog()) {
    std::cout << entry.name << "  [expect " << gossez::to_string(entry.expected) << "]\n"
              << "    " << entry.anchor << "\n    claims:";
    for (const auto& claim : entry.claims) std::cout << ' ' << claim;
    std::cout << '\n';
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic checks for a skew operator on sequence spaces"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run checks and emit a report");
  std::vector<std::string> checks{"all"};
  gossez::Index truncation = 64;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::string scale_max = "1000000";
  std::string format = "json";
  std::string out;
  bool timings = false;
  run->add_option("--checks", checks, "check names, comma separated, or 'all'")->delimiter(',');
  run->add_option("--truncation", truncation, "truncation N")->check(CLI::Range(2, 1 << 16));
  run->add_option("--trials", trials, "random trials per property")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "base seed (GOSSEZ_LAB_SEED overrides)");
  run->add_option("--scale-max", scale_max, "largest scale in the ladder");
  run->add_option("--format", format, "json | csv | md")->check(CLI::IsMember({"json", "csv", "md"}));
  run->add_option("--out", out, "output file (stdout when omitted)");
  run->add_flag("--timings", timings, "include wallclock in json/csv");

  app.add_subcommand("list", "print the check catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  if (app.got_subcommand("list")) return list_catalog();

  gossez::CheckConfig config;
  config.checks = split_checks(checks);
  config.truncation = truncation;
  config.trials = trials;
  config.seed = seed;
  try {
    if (const char* env = std::getenv("GOSSEZ_LAB_SEED"); env != nullptr && *env != '\0') {
      std::size_t used = 0;
      config.seed = std::stoull(env, &used);
      if (used != std::string_view(env).size()) throw std::invalid_argument(env);
    }
    config.scale_max = gossez::parse_rational(scale_max);
    config.format = gossez::parse_report_format(format);
  } catch (const std::exception& e) {
    std::cerr << "gossez-lab: invalid argument: " << e.what() << '\n';
    return kUsage;
  }

  gossez::ReportDoc report;
  try {
    report = gossez::run_checks(config);
  } catch (const gossez::UnknownCheck& e) {
    std::cerr << "gossez-lab: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gossez-lab: " << e.what() << '\n';
    return kUsage;
  }

  const std::string text = gossez::emit(report, config.format, timings);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    file << text;
    file.close();
    if (!file) {
      std::cerr << "gossez-lab: cannot write " << out << '\n';
      return kIo;
    }
  }

  if (!report.all_passed()) {
    std::cerr << "gossez-lab: check failed: " << report.first_failure() << '\n';
    return kCheckFailure;
  }
  return kPass;
}
