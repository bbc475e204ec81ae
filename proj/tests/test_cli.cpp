#include <filesystem>
#include <fstream>
#include <random>

#include "crn/algebra/expression.hpp"
#include "crn/cli/cli.hpp"
#include "crn/errors.hpp"
#include "crn/lift/lift.hpp"
#include "crn/network/parser.hpp"
#include "doctest.h"
#include "support/corpus.hpp"
#include "support/random_network.hpp"

using namespace crn;
using namespace crn::cli;
using crn::testing::corpus_path;

namespace {

RunConfig config(Command cmd, const std::string& network) {
  RunConfig c;
  c.command = cmd;
  c.input = corpus_path(network);
  return c;
}

RunConfig with_intermediates(RunConfig c, std::vector<std::string> ys) {
  c.mode = IntermediateMode::explicit_list;
  c.intermediates = std::move(ys);
  return c;
}

const std::vector<std::string> mapk_y{"Y1", "Y2", "Y3", "Y4", "Y5", "Y6"};

RingPtr ring_of(const nlohmann::ordered_json& j) {
  return make_ring(j["parameters"].get<std::vector<std::string>>(), j["variables"].get<std::vector<std::string>>());
}

std::vector<XPoly> parsed(const nlohmann::ordered_json& elements, const RingPtr& ring) {
  std::vector<XPoly> out;
  for (const auto& s : elements) out.push_back(parse_xpoly(s.get<std::string>(), ring));
  return out;
}

std::string temp_network(const ReactionNetwork& n, const std::string& name) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << render_network(n);
  return path.string();
}

}  // namespace

TEST_CASE("exit codes follow the error class") {
  CHECK(run(config(Command::validate, "binding_release.crn")).exit_code == 0);
  RunReport missing = run(config(Command::gb, "does_not_exist.crn"));
  CHECK(missing.exit_code == 1);
  CHECK(missing.error_kind == "InputError");
  CHECK(run(with_intermediates(config(Command::reduce, "triangle.crn"), {"X1"})).error_kind == "IntermediateError");
  RunReport singular = run(config(Command::reduce, "singular_pair.crn"));
  CHECK(singular.exit_code == 2);
  CHECK(singular.error_kind == "SingularIntermediateSystem");
  RunReport gate = run(config(Command::lift, "dependent_phi.crn"));
  CHECK(gate.exit_code == 3);
  CHECK(gate.error_kind == "IndependenceNotVerified");
  RunConfig forced = config(Command::lift, "dependent_phi.crn");
  forced.assume_independent = true;
  RunReport ok = run(forced);
  CHECK(ok.exit_code == 0);
  CHECK(ok.results["gate"] == "assumed");
  CHECK_FALSE(ok.warnings.empty());
}

TEST_CASE("configuration checks") {
  RunConfig c = config(Command::reduce, "triangle.crn");
  c.intermediates = {"Y1"};
  CHECK_THROWS_AS(validate_config(c), InputError);
  c = config(Command::reduce, "triangle.crn");
  c.mode = IntermediateMode::explicit_list;
  CHECK_THROWS_AS(validate_config(c), InputError);
  c = config(Command::indep, "triangle.crn");
  c.elimination_cap = 0;
  CHECK_THROWS_AS(validate_config(c), InputError);
  c = config(Command::gb, "triangle.crn");
  c.order = "deglex";
  CHECK(run(c).exit_code == 1);
  c = config(Command::gb, "binding_release.crn");
  c.vars = {"x1", "x2"};
  CHECK(run(c).exit_code == 1);
  c = config(Command::invariants, "mapk.crn");
  CHECK(run(c).exit_code == 1);
}

TEST_CASE("empty network gives the empty basis") {
  RunReport r = run(config(Command::gb, "empty.crn"));
  CHECK(r.exit_code == 0);
  CHECK(r.results["basis"]["size"] == 0);
  CHECK(r.results["basis"]["elements"].empty());
}

TEST_CASE("validate reports counts and dim(S)") {
  RunReport r = run(config(Command::validate, "binding_release.crn"));
  CHECK(r.results["num_species"] == 4);
  CHECK(r.results["num_complexes"] == 3);
  CHECK(r.results["num_reactions"] == 3);
  CHECK(r.results["stoichiometric_dimension"] == 2);
  RunConfig c = config(Command::validate, "conradi.crn");
  c.mode = IntermediateMode::auto_detect;
  CHECK(run(c).results["intermediates"].size() == 15);
}

TEST_CASE("MAPK binomiality through the CLI") {
  RunReport r = run(with_intermediates(config(Command::binomial, "mapk.crn"), mapk_y));
  REQUIRE(r.exit_code == 0);
  CHECK(r.results["verdict"] == "not_binomial");
  CHECK(r.results["gate"] == "verified");
  const RingPtr ring = ring_of(r.results["extended_ring"]);
  const XPoly offending = parse_xpoly(r.results["offending"].get<std::string>(), ring);
  CHECK(offending == parse_xpoly("kappa11/kappa10*x1*f + kappa7*kappa9/(kappa8*kappa10 + kappa9*kappa10)*x2*f", ring));
  bool y4 = false;
  for (const auto& w : r.results["witnesses"])
    if (w["intermediate"] == "Y4") {
      y4 = true;
      CHECK(w["terms"] == 2);
    }
  CHECK(y4);
}

TEST_CASE("basis strings round-trip to the in-memory polynomials") {
  for (const char* name : {"triangle.crn", "mapk.crn", "conradi.crn"}) {
    CAPTURE(name);
    RunConfig c = config(Command::lift, name);
    c.mode = IntermediateMode::auto_detect;
    RunReport rep = run(c);
    REQUIRE(rep.exit_code == 0);

    ParseOptions po;
    po.rate_prefix = "kappa";
    const ReactionNetwork n = load_network(corpus_path(name), po);
    IntermediateReduction r = reduce_network(n, detect_intermediates(n));
    r.gate = IndependenceGate::assumed;
    const LiftReport lr = lift_groebner(r, default_core_order(r));

    const RingPtr ext = ring_of(rep.results["extended_ring"]);
    const RingPtr core = ring_of(rep.results["core_ring"]);
    CHECK(same_ring(ext, r.extended.ring()));
    CHECK(same_ring(core, r.core.ring()));
    CHECK(parsed(rep.results["lifted_basis"]["elements"], ext) == lr.lifted_basis.polys);
    CHECK(parsed(rep.results["core_basis"]["elements"], core) == lr.core_basis.polys);
  }
}

TEST_CASE("JSON without timings is byte-identical across runs") {
  for (Command cmd : {Command::reduce, Command::lift, Command::binomial, Command::indep, Command::gb}) {
    RunConfig c = config(cmd, "mapk.crn");
    c.time = false;
    c.json = true;
    const std::string a = to_json(run(c), false).dump(2);
    const std::string b = to_json(run(c), false).dump(2);
    CHECK(a == b);
    CHECK(a.find("timings_ms") == std::string::npos);
  }
}

TEST_CASE("invariants through the CLI") {
  RunConfig c = with_intermediates(config(Command::invariants, "mapk.crn"), mapk_y);
  c.keep = {"e", "x0", "x1", "x2"};
  RunReport r = run(c);
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.results["core_invariants"].size() == 1);
  const XPoly core = parse_xpoly(r.results["core_invariants"][0].get<std::string>(), ring_of(r.results["core_ring"]));
  const XPoly expected = parse_xpoly("e*(k1*k3*x0*x2 - k2*k4*x1^2)", ring_of(r.results["core_ring"]));
  CHECK(core.scaled(expected.terms().front().coeff) == expected.scaled(core.terms().front().coeff));
  c.keep = {"e", "y1"};
  CHECK(run(c).error_kind == "KeepContainsIntermediate");
}

TEST_CASE("bench routes agree, sequential or parallel") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 6; ++trial) {
    const ReactionNetwork n = crn::testing::random_extended_network(rng, 3, 2, 4);
    RunConfig c;
    c.command = Command::bench;
    c.input = temp_network(n, "crn_bench_" + std::to_string(trial) + ".crn");
    c.direct_timeout = 30;
    RunReport seq = run(c);
    REQUIRE(seq.exit_code == 0);
    CHECK(seq.results["intermediates"].size() == 2);
    c.parallel = true;
    RunReport par = run(c);
    REQUIRE(par.exit_code == 0);
    const auto& routes = seq.results["routes"];
    CHECK(routes[1]["size"] == routes[2]["size"]);
    CHECK(seq.results["block_and_lifted_identical"] == true);
    for (std::size_t i = 0; i < 3; ++i) CHECK(routes[i]["size"] == par.results["routes"][i]["size"]);
  }
  RunConfig one = config(Command::bench, "single_intermediate.crn");
  RunReport r = run(one);
  REQUIRE(r.exit_code == 0);
  CHECK(r.results["block_and_lifted_identical"] == true);
}

TEST_CASE("reduce with the spanning-tree check") {
  RunConfig c = config(Command::reduce, "triangle.crn");
  c.tree_check = true;
  RunReport r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.results["tree_check"]["status"] == "agree");
  CHECK(r.results["mu"].size() == 4);
  CHECK(r.results["r_prime"] == std::vector<std::string>{"k1", "k2"});
  c.tree_cap = 2;
  r = run(c);
  CHECK(r.results["tree_check"]["status"] == "skipped");
}
