#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace xmodkit {

/// Process exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kSemanticFailure = 1, kParseError = 2, kBudgetExceeded = 3 };

struct CommandOptions {
  std::string command;   // check | reduce | cohomology | obstruction | classify | prolong
  std::string manifest;  // path
  std::string name;      // object in the manifest
  std::string stick = "canonical";  // canonical | seed:<n>
  std::optional<double> budget;     // log2 of the enumeration budget
  unsigned threads = 1;
  int degree = 2;  // cohomology only
};

struct CommandResult {
  int exit_code = kOk;
  nlohmann::ordered_json report;
};

/// Runs one command and always produces a report, including for parse
/// errors. Never throws for bad input.
CommandResult run_command(CommandOptions const& options);

/// Pretty-printed report followed by a newline.
std::string render_report(nlohmann::ordered_json const& report);

/// Re-parses every group, hom and cochain embedded in a report payload and
/// re-checks the properties the report claims (cocycle conditions, group
/// axioms, extension diagrams). Throws ParseError or Error on failure.
void revalidate_report(nlohmann::json const& report);

}  // namespace xmodkit
