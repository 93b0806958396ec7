#pragma once

// Command implementations behind the unimodal_lab executable. Each command
// renders its report into a string and returns the process exit code, so
// the same code paths are exercised by the tests and by the binary.

#include <cstdint>
#include <optional>
#include <string>

namespace unimodal_lab::cli {

inline constexpr const char* kSchema = "unimodal-lab/1";

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int theorem_mismatch = 2;
inline constexpr int certification_failure = 3;
inline constexpr int not_found = 4;
}  // namespace exit_code

enum class Command { check, scan_theorem1, probe_inequality, eclass, scan_eclass, certmax, general };
enum class Format { csv, json, text };

std::string to_string(Command c);
std::string to_string(Format f);
Format parse_format(const std::string& s);

struct RunConfig {
  Command command = Command::check;
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::int64_t k_min = 2;
  std::int64_t k_max = 7;
  /// 0 selects the command default.
  std::int64_t cap = 0;
  std::int64_t grid = 100000;
  /// 0 selects the command default.
  double tol = 0.0;
  Format format = Format::text;
  std::optional<std::string> out;
  std::optional<std::string> input;
  bool show_coeffs = false;
  bool exhaustive = false;

  /// Throws std::invalid_argument on empty ranges or nonpositive tolerances.
  void validate() const;
};

struct CommandResult {
  int exit_code = exit_code::ok;
  std::string output;
  /// Diagnostics for stderr.
  std::string messages;
};

CommandResult cmd_check(const RunConfig& cfg);
CommandResult cmd_scan_theorem1(const RunConfig& cfg);
CommandResult cmd_probe_inequality(const RunConfig& cfg);
CommandResult cmd_eclass(const RunConfig& cfg);
CommandResult cmd_scan_eclass(const RunConfig& cfg);
CommandResult cmd_certmax(const RunConfig& cfg);
/// Reads the coefficient file named by cfg.input.
CommandResult cmd_general(const RunConfig& cfg);
/// Same, from already-loaded text (`source` names it in messages).
CommandResult cmd_general_text(const RunConfig& cfg, const std::string& text, const std::string& source);

/// Validates the config and dispatches on cfg.command. Usage errors become
/// exit code 1.
CommandResult run(const RunConfig& cfg);

/// Decimal rendering with 17 significant digits, independent of locale.
std::string format_double(double v);

}  // namespace unimodal_lab::cli

#include "unimodal_lab/exactpoly.hpp"

#include <stdexcept>

namespace unimodal_lab::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Whitespace/newline separated nonnegative decimal integers, in index
/// order. '#' starts a comment running to the end of the line.
exactpoly::CoeffSeq parse_coefficients(const std::string& text);

}  // namespace unimodal_lab::cli
