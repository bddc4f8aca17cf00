#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "besselpow/bpoly.hpp"
#include "besselpow/rational.hpp"
#include "besselpow/sequences.hpp"

namespace besselpow {

enum class OutputFormat { Json, Csv, Bfile };

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitFailure = 2 };

/// Raised while validating flags; the message starts with the flag name.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Validated settings shared by every subcommand. std::nullopt means "sym".
struct CliConfig {
  std::optional<Rational> nu;
  std::optional<Rational> r;
  unsigned max_n = 4;
  std::vector<RouteId> routes;
  bool tilde = false;
  OutputFormat format = OutputFormat::Json;
  std::string output;
  // verify
  std::vector<std::optional<Rational>> verify_nus;
  bool mutate_zeta_sign = false;
  // seq
  SeqName seq = SeqName::M;
  // walk
  unsigned steps = 1;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// "sym" or an exact rational; throws ConfigError naming `flag`.
std::optional<Rational> parse_nu_flag(const std::string& flag, const std::string& text);
unsigned parse_count_flag(const std::string& flag, const std::string& text, unsigned min = 1);
/// Comma-separated route names or "all" (every route except bender).
std::vector<RouteId> parse_routes_flag(const std::string& text);
OutputFormat parse_format_flag(const std::string& text);

CommandResult cmd_zeta(const CliConfig& config);
CommandResult cmd_bpoly(const CliConfig& config);
CommandResult cmd_verify(const CliConfig& config);
CommandResult cmd_seq(const CliConfig& config);
CommandResult cmd_walk(const CliConfig& config);

/// Full front end: `args` excludes the program name. Output named by
/// --output is written to that file instead of `out`.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace besselpow
