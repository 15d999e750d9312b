// Command-line front end for the singular braid monoid toolkit.
//
//   sbm nf      -n 3 "s1-"                 Garside normal form
//   sbm greedy  -n 3 "s2 s1 x1 s1"         greedy form (--side left|right)
//   sbm eq      -n 3 "x1 s2 s1" "s2 s1 x2" word problem (exit 0 iff equal)
//   sbm conj    -n 3 "s1" "s2"             conjugacy (exit 0 iff conjugate)
//   sbm summit  -n 3 "x1"                  summit set
//   sbm convert -n 3 --to band "s2 x1"     Artin <-> band tokens
//   sbm verify  -n 4                       band presentation checker
//   sbm rand    -n 3 --len 8 --seed 7      seeded random word
//   sbm selfcheck -n 3                     exhaustive small-n invariant suites

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "sbm/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"singular braid monoid toolkit"};
  app.require_subcommand(1);

  sbm::cli::CliRequest req;
  std::string side = "left";
  std::string to = "band";

  auto add_common = [&](CLI::App* cmd, int n_words) {
    cmd->add_option("-n,--strands", req.n, "strand count (>= 2)")->required();
    cmd->add_flag("--json", req.json, "machine-readable output");
    cmd->add_option("--cap", req.cap, "equivalence-class member cap");
    if (n_words > 0)
      cmd->add_option("words", req.words, "input words")->expected(n_words);
    return cmd;
  };

  using sbm::cli::Command;
  auto* nf = add_common(app.add_subcommand("nf", "Garside normal form"), 1);
  auto* greedy = add_common(app.add_subcommand("greedy", "greedy form"), 1);
  greedy->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  auto* eq = add_common(app.add_subcommand("eq", "decide word equality"), 2);
  auto* conj = add_common(app.add_subcommand("conj", "decide conjugacy"), 2);
  auto* summit = add_common(app.add_subcommand("summit", "summit set"), 1);
  auto* convert = add_common(app.add_subcommand("convert", "convert between presentations"), 1);
  convert->add_option("--to", to, "band or artin")->check(CLI::IsMember({"band", "artin"}));
  auto* verify = add_common(app.add_subcommand("verify", "check the band presentation"), 0);
  auto* rand = add_common(app.add_subcommand("rand", "seeded random word"), 0);
  rand->add_option("--seed", req.seed, "random seed");
  rand->add_option("--len", req.length, "word length");
  rand->add_option("--kinds", req.kinds, "comma list of letter kinds from {s, s-, x}");
  auto* selfcheck = add_common(app.add_subcommand("selfcheck", "run invariant suites"), 0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : sbm::cli::exit_bad_input;
  }

  if (nf->parsed()) req.command = Command::nf;
  if (greedy->parsed()) req.command = Command::greedy;
  if (eq->parsed()) req.command = Command::eq;
  if (conj->parsed()) req.command = Command::conj;
  if (summit->parsed()) req.command = Command::summit;
  if (convert->parsed()) req.command = Command::convert;
  if (verify->parsed()) req.command = Command::verify;
  if (rand->parsed()) req.command = Command::rand;
  if (selfcheck->parsed()) req.command = Command::selfcheck;
  req.side = side == "right" ? sbm::Side::right : sbm::Side::left;
  req.to = to == "artin" ? sbm::cli::ConvertTarget::artin : sbm::cli::ConvertTarget::band;

  sbm::cli::CliResult result = sbm::cli::run(req);
  // verdict lines (exit 0/1) are answers; only real errors go to stderr
  std::fputs(result.output.c_str(), result.exit_code <= 1 ? stdout : stderr);
  return result.exit_code;
}
