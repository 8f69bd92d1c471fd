#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pairwise comparison matrices over abelian linearly ordered groups"};
  app.require_subcommand(1);

  alopc::cli::RunConfig config;
  std::string format = "text";

  const auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) {
      cmd->add_option("input", config.input_path, "matrix file (.json or .csv)")
          ->required();
    }
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output,-o", config.output_path,
                    "write to this file instead of stdout");
    cmd->add_option("--group", config.group,
                    "group id: additive, multiplicative, fuzzy-additive, "
                    "fuzzy-multiplicative");
  };

  CLI::App* rank = app.add_subcommand("rank", "derive a priority vector");
  add_common(rank, true);
  rank->add_option("--method", config.method, "ggmm, gmm or evm")
      ->check(CLI::IsMember({"ggmm", "gmm", "evm"}));

  CLI::App* audit = app.add_subcommand(
      "audit", "error index, inconsistency indices and order-preservation audit");
  add_common(audit, true);
  audit->add_option("--method", config.method, "ggmm, gmm or evm")
      ->check(CLI::IsMember({"ggmm", "gmm", "evm"}));

  CLI::App* certify = app.add_subcommand(
      "certify", "sufficient-condition certificates with audit cross-check");
  add_common(certify, true);

  CLI::App* convert = app.add_subcommand("convert", "convert between json and csv");
  add_common(convert, true);
  convert->add_option("--to", config.convert_to, "target format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* simulate = app.add_subcommand(
      "simulate", "audit randomly perturbed matrices, certificates cross-checked");
  add_common(simulate, false);
  simulate->add_option("--trials", config.trials, "number of matrices")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--size", config.size, "alternatives per matrix (>= 3)")
      ->check(CLI::Range(3, 64));
  simulate->add_option("--bound", config.bound,
                       "perturbation bound, a group element >= identity");
  simulate->add_option("--seed", config.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return alopc::cli::kExitInputError;
  }

  config.format = (format == "json") ? alopc::cli::Format::json
                                     : alopc::cli::Format::text;
  const std::string subcommand = app.get_subcommands().front()->get_name();
  return alopc::cli::dispatch(subcommand, config, std::cout, std::cerr);
}
