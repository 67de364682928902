#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "equidouble/dw.hpp"

namespace equidouble::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Default cap on the dimension of any algebra built by a command.
inline constexpr std::uint64_t kDefaultDimBudget = 1024;

/// Inputs are catalogue identifiers or paths to JSON files.
struct RunConfig {
  std::string command;
  std::string group;
  std::string extension;
  std::string presentation;
  std::string nerve = "circle3";
  std::string weak_action;
  int genus = 2;
  int monodromy = -1;  // -1: every J-element where that makes sense
  std::uint64_t budget_homs = kDefaultHomBudget;
  std::uint64_t budget_dim = kDefaultDimBudget;
  bool sampled = false;
  bool check_psi = false;
  std::string format = "json";  // json | csv | text
  std::string out;              // empty: standard output
};

struct RunResult {
  int exit_code = kExitOk;
  std::string report;  // empty when the command could not run
  std::string error;
};

std::vector<std::string> subcommands();

/// Parses and validates a command line (argv[0] is the program name). Unknown
/// catalogue identifiers and missing inputs raise UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes one command. Never throws; failures map to exit codes. The report
/// is written to config.out when set.
RunResult run(const RunConfig& config);

/// parse_args + run; the report goes to `out` unless --out was given, errors to `err`.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equidouble::cli
