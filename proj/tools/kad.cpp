#include <iostream>

#include <CLI11.hpp>

#include "kad/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Kleene algebra with domain: law checking, reachability, termination, Hoare logic"};
  app.require_subcommand(1);

  std::string source, laws = "all", relation, targets, algo = "both", triple, proof;

  auto* check = app.add_subcommand("check", "check algebraic laws of a workspace or builtin");
  check->add_option("source", source, "workspace file or builtin:NAME")->required();
  check->add_option("--laws", laws, "isemiring|kleene|tests|domain|converse|all")
      ->check(CLI::IsMember({"isemiring", "kleene", "tests", "domain", "converse", "all"}));

  auto* reach = app.add_subcommand("reach", "states that can reach a target set");
  reach->add_option("source", source, "workspace file or random:N[:seed]")->required();
  reach->add_option("--relation", relation, "relation name");
  reach->add_option("--targets", targets, "comma-separated target states");
  reach->add_option("--algo", algo, "naive|efficient|both")
      ->check(CLI::IsMember({"naive", "efficient", "both"}));

  auto* hoare = app.add_subcommand("hoare", "check a Hoare triple or validate a proof");
  hoare->add_option("source", source, "workspace file")->required();
  auto* t = hoare->add_option("--triple", triple, "program entry holding a triple");
  auto* p = hoare->add_option("--proof", proof, "proof entry");
  t->excludes(p);

  auto* term = app.add_subcommand("termination", "Noethericity, well-foundedness and Loeb property");
  term->add_option("source", source, "workspace file or random:N[:seed]")->required();
  term->add_option("--relation", relation, "relation name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kad::cli::parse_failure;
  }

  if (check->parsed()) return kad::cli::cmd_check(source, laws, std::cout, std::cerr);
  if (reach->parsed()) {
    return kad::cli::cmd_reach(source, relation, targets, algo, std::cout, std::cerr);
  }
  if (hoare->parsed()) return kad::cli::cmd_hoare(source, triple, proof, std::cout, std::cerr);
  return kad::cli::cmd_termination(source, relation, std::cout, std::cerr);
}
