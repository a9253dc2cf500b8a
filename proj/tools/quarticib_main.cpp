#include <iostream>

#include "CLI11.hpp"
#include "quarticib/cli.hpp"

int main(int argc, char** argv) {
  using namespace qib::cli;
  CLI::App app{"Integral bases of quartic number fields defined by X^4 + aX + b"};
  app.require_subcommand(1);

  JobSpec job;
  std::string p;
  const auto add_common = [&](CLI::App* sub, bool needs_p) {
    sub->add_option("--a", job.a, "coefficient a (decimal integer)")->required();
    sub->add_option("--b", job.b, "coefficient b (decimal integer)")->required();
    auto* opt = sub->add_option("--p", p, "prime");
    if (needs_p) opt->required();
    sub->add_flag("--json", "JSON output (default)");
    sub->add_flag("--text", job.text, "plain text output");
    sub->add_option("--max-trial-division", job.max_trial_division, "trial division bound for factoring disc");
  };

  auto* pbasis = app.add_subcommand("pbasis", "triangular p-integral basis from the tables");
  add_common(pbasis, true);
  pbasis->add_flag("--verify", job.verify, "cross-check against the Round-2 oracle");
  auto* basis = app.add_subcommand("basis", "global triangular integral basis");
  add_common(basis, false);
  auto* disc = app.add_subcommand("disc", "discriminant 256b^3 - 27a^4 and its factorization");
  add_common(disc, false);
  auto* polygon = app.add_subcommand("polygon", "X-adic Newton polygon at p");
  add_common(polygon, true);
  auto* check = app.add_subcommand("check", "compare tables with the oracle on a grid; --a/--b take lo:hi");
  add_common(check, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (!p.empty()) job.p = p;

  CommandResult r;
  if (*pbasis)
    r = cmd_pbasis(job);
  else if (*basis)
    r = cmd_basis(job);
  else if (*disc)
    r = cmd_disc(job);
  else if (*polygon)
    r = cmd_polygon(job);
  else
    r = cmd_check(job);
  std::cout << r.output;
  return r.exit_code;
}
