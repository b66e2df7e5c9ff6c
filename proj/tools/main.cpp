#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  radix::cli::CliConfig cfg;
  CLI::App app{"radix: radical formulas, verified and obstructed"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--output,-o", cfg.output, "Write the report to PATH instead of stdout");
  app.add_option("--max-degree", cfg.max_degree, "Cap on the degree of literal powers in expressions")
      ->capture_default_str();
  app.add_flag("-v,--verbose", cfg.verbosity, "More output");

  auto* verify = app.add_subcommand("verify", "Check every identity of a formula document");
  verify->add_option("file", cfg.inputs, "DSL document")->required()->expected(1);
  verify->add_option("--samples", cfg.samples, "Random relabelings to check after a pass")->capture_default_str();

  auto* obstruct = app.add_subcommand("obstruct", "Run the even-symmetry obstruction (n >= 5)");
  obstruct->add_option("file", cfg.inputs, "DSL document")->required()->expected(1);

  auto* character = app.add_subcommand("character", "Tabulate the character of f on even permutations");
  character->add_option("f", cfg.inputs, "Polynomial in x1..xn")->required()->expected(1);
  character->add_option("-q,--q", cfg.q, "Prime exponent")->required();
  character->add_option("--perm", cfg.perms, "Even permutation in cycle notation (repeatable)");
  character->add_option("-n,--n", cfg.n, "Number of variables (default: largest index used)");

  auto* symmetrize = app.add_subcommand("symmetrize", "Rewrite a symmetric polynomial in s1..sn");
  symmetrize->add_option("f", cfg.inputs, "Polynomial in x1..xn")->required()->expected(1);
  symmetrize->add_option("-n,--n", cfg.n, "Number of variables (default: largest index used)");

  auto* abelize = app.add_subcommand("abelize", "Polynomialize a tower formula level by level");
  abelize->add_option("file", cfg.inputs, "DSL document")->required()->expected(1);

  auto* builtin = app.add_subcommand("builtin", "Print a built-in formula");
  builtin->add_option("name", cfg.inputs, "degree2 or degree3")->required()->expected(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : radix::cli::kBadInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return radix::cli::run(cfg, std::cout, std::cerr);
}
