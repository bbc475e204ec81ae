#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace crn::cli {

enum class Command { validate, reduce, gb, lift, invariants, binomial, indep, bench };

/// Where the intermediate set comes from. `declared` uses the file header
/// (empty when the file has none).
enum class IntermediateMode { declared, explicit_list, auto_detect, none };

struct RunConfig {
  Command command = Command::validate;
  std::string input;
  IntermediateMode mode = IntermediateMode::declared;
  std::vector<std::string> intermediates;
  /// lex, grevlex or block; empty selects the command default.
  std::string order;
  std::vector<std::string> vars;
  std::vector<std::string> keep;
  bool json = false;
  bool time = true;
  bool minimal = false;
  bool compare_direct = false;
  bool cross_check = false;
  bool assume_independent = false;
  bool parallel = false;
  bool skip_shortcut = false;
  bool tree_check = false;
  bool skip_direct = false;
  std::optional<std::size_t> tree_cap;
  std::optional<std::size_t> elimination_cap;
  /// Seconds; unset means no limit.
  std::optional<double> timeout;
  std::optional<double> direct_timeout;
};

/// Throws InputError when the configuration is inconsistent.
void validate_config(const RunConfig& config);

struct RunReport {
  std::string command;
  std::string input;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;
  /// Human-readable rendering of the results.
  std::string text;
  int exit_code = 0;
  std::optional<std::string> error_kind;
  std::optional<std::string> error_message;
};

inline constexpr int schema_version = 1;

/// Runs one pipeline. Library exceptions become exit codes: 1 for input
/// errors, 2 for computation errors, 3 for gate refusals.
RunReport run(const RunConfig& config);

/// The JSON document for a report; timings are omitted when `with_time` is false.
nlohmann::ordered_json to_json(const RunReport& report, bool with_time);

/// Writes the report as text or JSON to `out` and diagnostics to `err`;
/// returns the exit code.
int emit(const RunReport& report, const RunConfig& config, std::ostream& out, std::ostream& err);

std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& name);

}  // namespace crn::cli
