#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "crn/algebra/expression.hpp"
#include "crn/errors.hpp"
#include "crn/independence/independence.hpp"
#include "crn/lift/lift.hpp"
#include "crn/network/parser.hpp"
#include "crn/network/steady_state.hpp"
#include "support/corpus.hpp"
#include "support/random_network.hpp"

using namespace crn;
using crn::testing::corpus;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

/// Collects failed conditions of one criterion.
struct Checks {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  bool within(Clock::time_point start, double limit, const std::string& what) {
    const double s = seconds_since(start);
    std::ostringstream msg;
    msg << what << " took " << s << " s (limit " << limit << " s)";
    expect(s < limit, msg.str());
    return s < limit;
  }
};

IntermediateReduction open_reduction(const ReactionNetwork& n, const std::vector<std::string>& y) {
  IntermediateReduction r = reduce_network(n, y);
  r.gate = IndependenceGate::assumed;
  return r;
}

std::vector<std::string> strings(const std::vector<XPoly>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

std::size_t complex_of(const ReactionNetwork& n, const std::string& text) {
  std::string header = "species:";
  for (const auto& s : n.species()) header += " " + s;
  const ReactionNetwork probe = parse_network(header + "\n" + text + " -> 0");
  return n.complex_index(probe.complexes()[0]).value();
}

bool scalar_multiple(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a == b.scaled(a.terms()[0].coeff / b.terms()[0].coeff);
}

std::vector<std::string> conradi_core_order() {
  std::vector<std::string> order;
  for (int i : {1, 2, 4, 5, 7, 9, 11, 14, 16, 18, 19, 22, 26, 28}) order.push_back("x" + std::to_string(i));
  return order;
}

void steady_state_golden(Checks& c) {
  const auto start = Clock::now();
  const ReactionNetwork n = corpus("binding_release.crn");
  c.expect(strings(steady_state_ideal(n, true)) == std::vector<std::string>{"-k1*x1*x3 + k2*x4", "k3*x4"},
           "minimal generators differ");
  c.expect(stoichiometric_basis(n).dimension == 2, "dim(S) != 2");
  c.within(start, 1.0, "steady-state ideal");
}

void mu_golden(Checks& c) {
  auto start = Clock::now();
  const ReactionNetwork tri = corpus("triangle.crn");
  const MuTable mu = solve_mu(tri, validate_intermediates(tri, {"Y1", "Y2", "Y3"}));
  auto at = [&](const ReactionNetwork& n, const MuTable& t, std::size_t i, const std::string& cx) {
    return t.at(i, complex_of(n, cx));
  };
  auto is = [&](const ReactionNetwork& n, const ParamScalar& v, const std::string& text) {
    return v == parse_param_scalar(text, n.ring());
  };
  c.expect(is(tri, at(tri, mu, 0, "X1 + X2"), "kappa1/(kappa2+kappa3+kappa5)"), "mu(Y1, X1+X2)");
  c.expect(at(tri, mu, 0, "2X1").is_zero() && at(tri, mu, 0, "2X2").is_zero(), "mu(Y1, other)");
  c.expect(is(tri, at(tri, mu, 1, "X1 + X2"), "kappa1*kappa3/(kappa4*(kappa2+kappa3+kappa5))"), "mu(Y2, X1+X2)");
  c.expect(at(tri, mu, 1, "2X1").is_zero() && at(tri, mu, 1, "2X2").is_zero(), "mu(Y2, other)");
  c.expect(is(tri, at(tri, mu, 2, "X1 + X2"), "kappa1*kappa5/((kappa6+kappa8)*(kappa2+kappa3+kappa5))"),
           "mu(Y3, X1+X2)");
  c.expect(is(tri, at(tri, mu, 2, "2X1"), "kappa7/(kappa6+kappa8)"), "mu(Y3, 2X1)");
  c.expect(at(tri, mu, 2, "2X2").is_zero(), "mu(Y3, 2X2)");
  c.within(start, 1.0, "three-intermediate mu table");

  start = Clock::now();
  const ReactionNetwork mapk = corpus("mapk.crn");
  const IntermediateReduction r = reduce_network(mapk, {"Y1", "Y2", "Y3", "Y4", "Y5", "Y6"});
  std::size_t nonzero = 0;
  for (const auto& row : r.mu.values)
    for (const auto& v : row) nonzero += v.is_zero() ? 0 : 1;
  c.expect(nonzero == 8, "MAPK nonzero mu count != 8");
  const std::vector<std::tuple<std::size_t, std::string, std::string>> golden{
      {0, "X0 + E", "kappa1/(kappa2+kappa3)"},
      {1, "X1 + E", "kappa4/(kappa5+kappa6)"},
      {2, "X2 + F", "kappa7/(kappa8+kappa9)"},
      {3, "X2 + F", "kappa7*kappa9/((kappa8+kappa9)*kappa10)"},
      {3, "X1 + F", "kappa11/kappa10"},
      {4, "X1 + F", "kappa12/(kappa13+kappa14)"},
      {5, "X1 + F", "kappa12*kappa14/((kappa13+kappa14)*kappa15)"},
      {5, "X0 + F", "kappa16/kappa15"}};
  for (const auto& [i, cx, value] : golden)
    c.expect(is(mapk, at(mapk, r.mu, i, cx), value), "MAPK mu(Y" + std::to_string(i + 1) + ", " + cx + ")");
  c.within(start, 1.0, "MAPK mu table");
}

void matrix_tree_oracle(Checks& c) {
  const auto start = Clock::now();
  std::mt19937_64 rng(300);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 5);
    const ReactionNetwork n = crn::testing::random_extended_network(rng, 3, m, 4);
    const IntermediateSet y = validate_intermediates(n, n.declared_intermediates());
    const MuTable mu = solve_mu(n, y);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < mu.complexes.size(); ++j)
        if (!(mu_spanning_tree(n, y, i, mu.complexes[j]) == mu.values[i][j])) ++mismatches;
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " mu entries disagree");
  c.within(start, 60.0, "200 networks");
}

void lifting_equality(Checks& c) {
  const auto start = Clock::now();
  std::mt19937_64 rng(400);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 3);
    const ReactionNetwork n = crn::testing::random_extended_network(rng, 3, m, 4);
    const IntermediateReduction r = open_reduction(n, n.declared_intermediates());
    LiftOptions opts;
    opts.compare_direct = true;
    const LiftReport rep = lift_groebner(r, default_core_order(r), opts);
    const std::string tag = "network " + std::to_string(trial);
    c.expect(rep.matches_direct == true, tag + ": lifted basis differs from the direct basis");
    c.expect(ideals_equal(rep.lifted_basis.polys, steady_state_polynomials(n), rep.order_used),
             tag + ": ideal differs from the extended generators");
  }
  c.within(start, 120.0, "50 networks");
}

void conradi_sizes(Checks& c) {
  const auto start = Clock::now();
  const ReactionNetwork n = corpus("conradi.crn");
  const IntermediateReduction r = open_reduction(n, detect_intermediates(n));
  const LiftReport rep = lift_groebner(r, MonomialOrder::grevlex(conradi_core_order()));
  c.expect(rep.core_basis.polys.size() == 18, "core basis has " + std::to_string(rep.core_basis.polys.size()));
  c.expect(rep.lifted_basis.polys.size() == 33, "lifted basis has " + std::to_string(rep.lifted_basis.polys.size()));
  c.within(start, 5.0, "lifted route");
}

void conradi_direct_routes(Checks& c) {
  const ReactionNetwork n = corpus("conradi.crn");
  auto start = Clock::now();
  const IntermediateReduction r = open_reduction(n, detect_intermediates(n));
  const MonomialOrder core_order = MonomialOrder::grevlex(conradi_core_order());
  LiftOptions lift_opts;
  lift_opts.verify = false;
  const LiftReport lifted = lift_groebner(r, core_order, lift_opts);
  const double lifted_s = seconds_since(start);

  const BuchbergerOptions budget{Deadline::after(std::chrono::minutes(30))};
  start = Clock::now();
  const GroebnerBasis grevlex = buchberger(steady_state_polynomials(n), MonomialOrder::grevlex(n.variables()), budget);
  const double grevlex_s = seconds_since(start);
  start = Clock::now();
  const MonomialOrder block = MonomialOrder::block_extend(core_order, r.intermediate_variables());
  const GroebnerBasis direct = buchberger(steady_state_polynomials(n), block, budget);
  const double block_s = seconds_since(start);

  c.expect(grevlex.polys.size() == 169, "grevlex basis has " + std::to_string(grevlex.polys.size()));
  c.expect(direct.polys.size() == 33, "block basis has " + std::to_string(direct.polys.size()));
  c.expect(direct.polys == lifted.lifted_basis.polys, "block and lifted bases differ");
  std::ostringstream times;
  times << "lifted " << lifted_s << " s, grevlex " << grevlex_s << " s, block " << block_s << " s";
  c.expect(10 * lifted_s <= grevlex_s && 10 * lifted_s <= block_s, "speedup below 10x: " + times.str());
  std::cout << "    " << times.str() << "\n";
}

void mapk_invariant(Checks& c) {
  const auto start = Clock::now();
  const ReactionNetwork n = corpus("mapk.crn");
  const IntermediateReduction r = open_reduction(n, {"Y1", "Y2", "Y3", "Y4", "Y5", "Y6"});
  const InvariantsResult inv = invariants(r, {"e", "x0", "x1", "x2"});
  c.expect(inv.core_invariants.size() == 1 &&
               scalar_multiple(inv.core_invariants[0], parse_xpoly("e*(k1*k3*x0*x2 - k2*k4*x1^2)", r.core.ring())),
           "core invariant differs");
  c.expect(inv.invariants.size() == 1 &&
               scalar_multiple(inv.invariants[0],
                               parse_xpoly("e*((kappa1*kappa3/(kappa2+kappa3))*(kappa7*kappa9/(kappa8+kappa9))*x0*x2 - "
                                           "(kappa4*kappa6/(kappa5+kappa6))*(kappa12*kappa14/(kappa13+kappa14))*x1^2)",
                                           n.ring())),
           "Phi image differs");
  c.within(start, 5.0, "MAPK invariants");
}

void binomiality_verdicts(Checks& c) {
  const auto start = Clock::now();
  const IntermediateReduction tri = open_reduction(corpus("triangle.crn"), {"Y1", "Y2", "Y3"});
  c.expect(binomiality(tri).verdict == Verdict::binomial, "three-intermediate network not binomial");
  const GroebnerBasis tri_core = core_groebner_basis(tri, MonomialOrder::lex({"x1", "x2"}));
  c.expect(tri_core.polys.size() == 1 &&
               tri_core.polys[0] == parse_xpoly("x1^2 + (k1 - k2)/(2*k3)*x1*x2", tri.core.ring()),
           "three-intermediate core basis differs");

  const IntermediateReduction mapk = open_reduction(corpus("mapk.crn"), {"Y1", "Y2", "Y3", "Y4", "Y5", "Y6"});
  const BinomialityVerdict mv = binomiality(mapk);
  c.expect(mv.verdict == Verdict::not_binomial, "MAPK reported binomial");
  c.expect(mv.offending &&
               *mv.offending == parse_xpoly("kappa11/kappa10*x1*f + kappa7*kappa9/(kappa8*kappa10 + kappa9*kappa10)*x2*f",
                                            mapk.extended.ring()),
           "MAPK witness differs");

  const IntermediateReduction cubic = open_reduction(corpus("cubic_autocatalysis_enzyme.crn"), {});
  const BinomialityVerdict cv = binomiality(cubic);
  c.expect(cv.verdict == Verdict::not_binomial, "enzyme extension reported binomial");
  c.expect(cv.core_basis.polys.size() == 1 &&
               cv.core_basis.polys[0] ==
                   parse_xpoly("x^3 - kappa1/(2*kappa2)*x^2 + kappa3/(2*kappa2)*x^2*e", cubic.extended.ring()),
           "enzyme extension basis differs");

  const ReactionNetwork deg = corpus("degradation.crn");
  const GroebnerBasis dg = buchberger(steady_state_polynomials(deg), MonomialOrder::lex({"x1", "x2"}));
  c.expect(strings(dg.polys) == std::vector<std::string>{"x1"}, "degradation core basis differs from {x1}");
  const ReactionNetwork deg_e = corpus("degradation_enzyme.crn");
  c.expect(!ideals_equal(steady_state_polynomials(deg_e), {parse_xpoly("x1", deg_e.ring())},
                         MonomialOrder::grevlex(deg_e.variables())),
           "enzyme extension ideal equals <x1>");
  c.within(start, 5.0, "binomiality verdicts");
}

void independence(Checks& c) {
  const auto start = Clock::now();
  const IntermediateReduction tri = reduce_network(corpus("triangle.crn"), {"Y1", "Y2", "Y3"});
  const std::size_t np = tri.extended.ring()->nparams();
  c.expect(jacobian_rank(tri.phi, np) == 3, "three phi functions: Jacobian rank != 3");
  c.expect(independence_elimination_check(tri.phi), "three phi functions: elimination ideal nonzero");

  for (const char* name : {"mapk.crn", "conradi.crn"}) {
    const ReactionNetwork n = corpus(name);
    const IndependenceVerdict v = check_independence(reduce_network(n, detect_intermediates(n)));
    bool singletons = v.independent && !v.classes.empty();
    for (const auto& cls : v.classes) singletons = singletons && cls.method == ClassMethod::singleton;
    c.expect(singletons, std::string(name) + " does not pass by singleton classes");
  }

  // phi sets drawn from random extended networks; every fourth set gains a product of two members.
  std::mt19937_64 rng(900);
  std::size_t agree = 0;
  std::size_t dependent = 0;
  for (int trial = 0; agree < 60 && trial < 400; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 3);
    const ReactionNetwork n = crn::testing::random_extended_network(rng, 2, m, 3);
    const IntermediateReduction r = reduce_network(n, n.declared_intermediates());
    std::vector<ParamScalar> fs;
    for (std::size_t k : r.r_prime)
      if (fs.size() < 3) fs.push_back(r.phi[k]);
    if (fs.empty()) continue;
    if (trial % 4 == 0 && fs.size() >= 2) fs.back() = fs[0] * fs[1];
    const bool jac = jacobian_rank(fs, n.ring()->nparams()) == fs.size();
    try {
      const bool elim = independence_elimination_check(fs, 4, Deadline::after(std::chrono::seconds(20)));
      c.expect(elim == jac, "criteria disagree on random set " + std::to_string(trial));
      agree += elim == jac ? 1 : 0;
      dependent += jac ? 0 : 1;
    } catch (const Timeout&) {
    }
  }
  c.expect(agree >= 50, "only " + std::to_string(agree) + " random sets decided");
  c.expect(dependent > 0, "no dependent random set");
  std::cout << "    " << agree << " random sets agree, " << dependent << " dependent\n";
  c.within(start, 120.0, "independence");
}

void property_suites(Checks& c) {
  const auto start = Clock::now();
  const std::string cmd = std::string("\"") + CRN_PROPERTIES_BIN + "\" --minimal";
  const int status = std::system(cmd.c_str());
  c.expect(status == 0, "property suites failed (status " + std::to_string(status) + ")");
  c.within(start, 300.0, "property suites");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria{
      {"steady-state ideal golden test", steady_state_golden},
      {"mu table golden tests", mu_golden},
      {"spanning-tree oracle on 200 random networks", matrix_tree_oracle},
      {"lifted basis equals direct basis on 50 random networks", lifting_equality},
      {"Conradi core and lifted basis sizes", conradi_sizes},
      {"Conradi direct routes and speedup", conradi_direct_routes},
      {"MAPK invariant golden test", mapk_invariant},
      {"binomiality verdicts", binomiality_verdicts},
      {"independence criteria", independence},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Checks c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %zu %s (%.0f ms)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                1000 * seconds_since(start));
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
