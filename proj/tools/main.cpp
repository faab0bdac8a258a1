// Command line front end: exact verification of Cayley-Hamilton type
// identities for matrices over noncommutative rings.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nilcayley/runner.hpp"

namespace {

void add_common_flags(CLI::App* cmd, nilcayley::RunConfig& cfg) {
  cmd->add_option("--backend", cfg.backend,
                  "ring backend: rational | grassmann:M | relfree:M,K,D | utri:T:<base> | file:PATH");
  cmd->add_option("--n", cfg.n, "matrix size");
  cmd->add_option("--k", cfg.k, "Lie nilpotency index / adjoint level (0 = backend default)");
  cmd->add_option("--seed", cfg.seed, "sampling seed");
  cmd->add_option("--matrix", cfg.matrix, "explicit matrix, e.g. \"[[v1,v2],[v3,v4]]\"");
  cmd->add_option("--format", cfg.format, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", cfg.out, "also write the report to this path");
  cmd->add_option("--max-n", cfg.max_n, "raise the matrix size guardrail");
  cmd->add_option("--max-k", cfg.max_k, "raise the adjoint level guardrail");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact determinant theory and Cayley-Hamilton identities over "
               "Lie nilpotent rings"};
  app.require_subcommand(1);

  nilcayley::RunConfig cfg;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("check", cfg.check,
                     "jennings | fundamental | ch | domokos | trace-nilpotency | power-ch | "
                     "commutator-power-ch | conjugation | ideal-nilpotency | all")
      ->required();
  add_common_flags(verify, cfg);
  verify->add_option("--trials", cfg.trials, "sampled instances per check");
  verify->add_option("--exponent", cfg.exponent, "power exponent (0 = derive from backend)");
  verify->add_option("--lift", cfg.lift, "coefficient lift: canonical | randomized")
      ->check(CLI::IsMember({"canonical", "randomized"}));
  verify->add_flag("--slow", cfg.slow, "include the long-running 3x3 power identity");

  auto* charpoly = app.add_subcommand("charpoly", "print the k-th right characteristic polynomial");
  add_common_flags(charpoly, cfg);

  auto* sdet = app.add_subcommand("sdet", "print the symmetric determinant of --matrix");
  add_common_flags(sdet, cfg);

  auto* adjoint = app.add_subcommand("adjoint", "print the symmetric adjoint of --matrix");
  add_common_flags(adjoint, cfg);

  auto* demo = app.add_subcommand("demo", "small guided tour");
  add_common_flags(demo, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (verify->parsed()) cfg.command = "verify";
  if (charpoly->parsed()) cfg.command = "charpoly";
  if (sdet->parsed()) cfg.command = "sdet";
  if (adjoint->parsed()) cfg.command = "adjoint";
  if (demo->parsed()) cfg.command = "demo";

  const nilcayley::RunResult result = nilcayley::run(cfg);
  if (result.exit_code == 2) {
    std::cerr << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}
