#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

namespace alopc::cli {

enum class Format { text, json };

struct RunConfig {
  std::string input_path;
  std::string output_path;  // empty: stdout
  Format format = Format::text;
  std::string group;           // cross-check for file commands, required for simulate
  std::string method = "ggmm";
  std::string convert_to;      // "json" | "csv"; inferred from output path if empty
  std::uint64_t seed = 1;
  int trials = 100;
  int size = 5;
  // NaN: use the group-dependent default perturbation bound.
  double bound = std::numeric_limits<double>::quiet_NaN();
};

// Exit codes: 0 success / clean audit, 1 input or usage error,
// 2 order-preservation violations found.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitViolations = 2;

int run_rank(const RunConfig& config, std::ostream& out);
int run_audit(const RunConfig& config, std::ostream& out);
int run_certify(const RunConfig& config, std::ostream& out);
int run_convert(const RunConfig& config, std::ostream& out);
int run_simulate(const RunConfig& config, std::ostream& out);

/// Runs one subcommand, mapping library errors to kExitInputError with a
/// message on `err`.
int dispatch(const std::string& subcommand, const RunConfig& config,
             std::ostream& out, std::ostream& err);

}  // namespace alopc::cli
