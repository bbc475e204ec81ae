#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "crn/cli/cli.hpp"

using crn::cli::Command;
using crn::cli::IntermediateMode;
using crn::cli::RunConfig;

namespace {

struct Flags {
  std::vector<std::string> intermediates;
  bool auto_detect = false;
  bool no_intermediates = false;
};

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("file", c.input, "Network file")->required();
  sub->add_flag("--json", c.json, "Emit JSON");
  sub->add_flag("--time,!--no-time", c.time, "Report wall-clock times (default on)");
  sub->add_option("--timeout", c.timeout, "Time budget in seconds");
  sub->add_option("--tree-cap", c.tree_cap, "Intermediate limit for spanning-tree enumeration");
  sub->add_option("--elim-cap", c.elimination_cap, "Function limit for the elimination cross-check");
}

void add_intermediates(CLI::App* sub, Flags& f) {
  auto* list = sub->add_option("--intermediates", f.intermediates, "Intermediate species")->delimiter(',');
  auto* detect = sub->add_flag("--auto", f.auto_detect, "Detect intermediates");
  auto* none = sub->add_flag("--no-intermediates", f.no_intermediates, "Ignore the declared intermediates");
  list->excludes(detect)->excludes(none);
  detect->excludes(none);
}

void add_order(CLI::App* sub, RunConfig& c) {
  sub->add_option("--order", c.order, "Monomial order: lex, grevlex or block");
  sub->add_option("--vars", c.vars, "Variable order")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state ideals, intermediate reduction and Groebner lifting for reaction networks", "crn"};
  app.require_subcommand(1);
  RunConfig c;
  Flags f;

  auto* validate = app.add_subcommand("validate", "Counts, dim(S), intermediate candidates and enzymes");
  auto* reduce = app.add_subcommand("reduce", "Core network, mu, phi, H and overlap classes");
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of the steady-state ideal");
  auto* lift = app.add_subcommand("lift", "Lift the core Groebner basis to the extended network");
  auto* inv = app.add_subcommand("invariants", "Steady-state invariants in the kept variables");
  auto* binom = app.add_subcommand("binomial", "Decide binomiality through the core network");
  auto* indep = app.add_subcommand("indep", "Algebraic independence of the phi functions");
  auto* bench = app.add_subcommand("bench", "Direct grevlex, direct block and lifted routes");

  for (auto* sub : {validate, reduce, gb, lift, inv, binom, indep, bench}) {
    add_common(sub, c);
    add_intermediates(sub, f);
  }
  for (auto* sub : {gb, lift, binom, bench}) add_order(sub, c);
  for (auto* sub : {lift, inv, binom, bench})
    sub->add_flag("--assume-independent", c.assume_independent, "Skip the independence check");
  for (auto* sub : {lift, inv, binom, bench, indep})
    sub->add_flag("--cross-check", c.cross_check, "Also run the elimination criterion");
  gb->add_flag("--minimal", c.minimal, "Use a stoichiometric basis of the steady-state polynomials");
  reduce->add_flag("--tree-check", c.tree_check, "Compare mu with spanning-tree values");
  lift->add_flag("--compare-direct", c.compare_direct, "Also compute the basis directly");
  for (auto* sub : {lift, bench}) sub->add_option("--direct-timeout", c.direct_timeout, "Direct-route budget in seconds");
  inv->add_option("--keep", c.keep, "Variables to keep")->delimiter(',')->required();
  binom->add_flag("--skip-shortcut", c.skip_shortcut, "Compute every remainder");
  bench->add_flag("--parallel", c.parallel, "Run the routes concurrently");
  bench->add_flag("--skip-direct", c.skip_direct, "Only run the lifted route");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  for (auto* sub : app.get_subcommands()) c.command = *crn::cli::parse_command(sub->get_name());
  if (!f.intermediates.empty()) {
    c.mode = IntermediateMode::explicit_list;
    c.intermediates = f.intermediates;
  } else if (f.auto_detect) {
    c.mode = IntermediateMode::auto_detect;
  } else if (f.no_intermediates) {
    c.mode = IntermediateMode::none;
  }
  return crn::cli::emit(crn::cli::run(c), c, std::cout, std::cerr);
}
