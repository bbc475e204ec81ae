#include <chrono>
#include <cmath>
#include <random>

#include "crn/algebra/expression.hpp"
#include "crn/errors.hpp"
#include "crn/lift/lift.hpp"
#include "crn/network/parser.hpp"
#include "crn/network/steady_state.hpp"
#include "doctest.h"
#include "support/corpus.hpp"
#include "support/numeric_steady_state.hpp"
#include "support/random_network.hpp"

using namespace crn;
using crn::testing::corpus;

namespace {

IntermediateReduction open_reduction(const ReactionNetwork& n, std::vector<std::string> y) {
  IntermediateReduction r = reduce_network(n, y);
  r.gate = IndependenceGate::assumed;
  return r;
}

IntermediateReduction open_reduction(const ReactionNetwork& n) { return open_reduction(n, n.declared_intermediates()); }

std::vector<std::string> strings(const GroebnerBasis& g) {
  std::vector<std::string> out;
  for (const auto& f : g.polys) out.push_back(to_string(f, g.order));
  return out;
}

bool scalar_multiple(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const ParamScalar ratio = a.terms()[0].coeff / b.terms()[0].coeff;
  return a == b.scaled(ratio);
}

/// Value of f at numeric concentrations and rates, with the sum of absolute term values.
std::pair<double, double> evaluate(const XPoly& f, const std::vector<double>& x, const std::vector<Rational>& k) {
  double sum = 0;
  double scale = 0;
  for (const auto& t : f.terms()) {
    double v = t.coeff.evaluate(k).get_d();
    for (std::size_t i = 0; i < x.size(); ++i) v *= std::pow(x[i], t.mono[i]);
    sum += v;
    scale += std::abs(v);
  }
  return {sum, scale};
}

}  // namespace

TEST_CASE("lifting the three-intermediate network") {
  IntermediateReduction r = open_reduction(corpus("triangle.crn"));
  LiftOptions opts;
  opts.compare_direct = true;
  LiftReport rep = lift_groebner(r, MonomialOrder::lex({"x1", "x2"}), opts);
  CHECK(strings(rep.core_basis) == std::vector<std::string>{"x1^2 + (k1 - k2)/(2*k3)*x1*x2"});
  CHECK(rep.lifted_basis.polys.size() == rep.core_basis.polys.size() + 3);
  CHECK(rep.order_used.describe() == "block(y1 > y2 > y3 | lex(x1 > x2))");
  CHECK(is_groebner_basis(rep.lifted_basis.polys, rep.order_used));
  CHECK(reduce_basis(rep.lifted_basis).polys == rep.lifted_basis.polys);
  CHECK(rep.matches_direct == true);
  CHECK(rep.timings.direct_ms.has_value());
}

TEST_CASE("lifting requires the independence gate") {
  IntermediateReduction r = reduce_network(corpus("triangle.crn"), {"Y1", "Y2", "Y3"});
  CHECK_THROWS_AS(lift_groebner(r, default_core_order(r)), IndependenceNotVerified);
  CHECK_THROWS_AS(invariants(r, {"x1"}), IndependenceNotVerified);
  CHECK_THROWS_AS(binomiality(r), IndependenceNotVerified);
}

TEST_CASE("lifting with no intermediates returns the core basis") {
  IntermediateReduction r = open_reduction(corpus("binding_release.crn"), {});
  LiftReport rep = lift_groebner(r, default_core_order(r));
  CHECK(rep.lifted_basis.polys == rep.core_basis.polys);
  CHECK(rep.order_used == rep.core_basis.order);
}

TEST_CASE("lifted basis equals the direct basis on random networks") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 3);
    ReactionNetwork n = crn::testing::random_extended_network(rng, 3, m, 4);
    IntermediateReduction r = open_reduction(n);
    LiftOptions opts;
    opts.compare_direct = true;
    LiftReport rep = lift_groebner(r, default_core_order(r), opts);
    CHECK(rep.matches_direct == true);
    CHECK(rep.lifted_basis.polys.size() == rep.core_basis.polys.size() + m);
    CHECK(ideals_equal(rep.lifted_basis.polys, steady_state_polynomials(n), rep.order_used));
  }
}

TEST_CASE("Conradi network sizes") {
  ReactionNetwork n = corpus("conradi.crn");
  const auto start = std::chrono::steady_clock::now();
  IntermediateReduction r = open_reduction(n, detect_intermediates(n));
  std::vector<std::string> order;
  for (int i : {1, 2, 4, 5, 7, 9, 11, 14, 16, 18, 19, 22, 26, 28}) order.push_back("x" + std::to_string(i));
  CHECK(r.core.variables() == order);
  CHECK(r.core.reactions().size() == 16);
  LiftReport rep = lift_groebner(r, MonomialOrder::grevlex(order));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(rep.core_basis.polys.size() == 18);
  CHECK(rep.lifted_basis.polys.size() == 33);
  CHECK(seconds < 5.0);
}

TEST_CASE("MAPK invariant") {
  ReactionNetwork n = corpus("mapk.crn");
  IntermediateReduction r = open_reduction(n);
  InvariantsResult inv = invariants(r, {"e", "x0", "x1", "x2"});
  CHECK(inv.order.describe() == "lex(f > e > x0 > x1 > x2)");
  REQUIRE(inv.core_invariants.size() == 1);
  CHECK(scalar_multiple(inv.core_invariants[0], parse_xpoly("e*(k1*k3*x0*x2 - k2*k4*x1^2)", r.core.ring())));
  REQUIRE(inv.invariants.size() == 1);
  CHECK(scalar_multiple(inv.invariants[0],
                        parse_xpoly("e*((kappa1*kappa3/(kappa2+kappa3))*(kappa7*kappa9/(kappa8+kappa9))*x0*x2 - "
                                    "(kappa4*kappa6/(kappa5+kappa6))*(kappa12*kappa14/(kappa13+kappa14))*x1^2)",
                                    n.ring())));
  CHECK_THROWS_AS(invariants(r, {"e", "y1"}), KeepContainsIntermediate);
  CHECK_THROWS_AS(invariants(r, {"nothing"}), InputError);
}

TEST_CASE("keeping every core variable returns Phi of the core basis") {
  IntermediateReduction r = open_reduction(corpus("triangle.crn"));
  InvariantsResult inv = invariants(r, {"x1", "x2"});
  CHECK(inv.invariants == phi_image(r, core_groebner_basis(r, MonomialOrder::lex({"x1", "x2"})).polys));
}

TEST_CASE("invariants vanish at numeric steady states") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> positive(0.5, 2.0);
  std::size_t settled = 0;
  std::size_t checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    ReactionNetwork n = trial < 2 ? corpus(trial == 0 ? "mapk.crn" : "triangle.crn")
                                  : crn::testing::random_extended_network(rng, 3, 1 + trial % 2, 3);
    IntermediateReduction r = open_reduction(n);
    const std::vector<std::string> keep(r.core.variables().begin() + 1, r.core.variables().end());
    InvariantsResult inv = invariants(r, keep);

    std::vector<double> rates;
    std::vector<Rational> exact;
    for (std::size_t k = 0; k < n.reactions().size(); ++k) {
      rates.push_back(positive(rng));
      exact.emplace_back(rates.back());
    }
    Eigen::VectorXd x0(static_cast<Eigen::Index>(n.num_species()));
    for (Eigen::Index i = 0; i < x0.size(); ++i) x0[i] = positive(rng);
    auto x = crn::testing::numeric_steady_state({n, rates}, x0);
    if (!x) continue;
    ++settled;
    const std::vector<double> point(x->data(), x->data() + x->size());
    for (const auto& f : inv.invariants) {
      auto [value, scale] = evaluate(f, point, exact);
      CHECK(std::abs(value) <= 1e-7 * scale + 1e-10);
      ++checked;
    }
  }
  CHECK(settled >= 10);
  CHECK(checked >= 1);
}

TEST_CASE("binomiality of the three-intermediate network") {
  IntermediateReduction r = open_reduction(corpus("triangle.crn"));
  BinomialityVerdict v = binomiality(r);
  CHECK(v.verdict == Verdict::binomial);
  CHECK(v.core_binomial);
  CHECK(v.shortcut_used == Shortcut::full_remainder_check);
  REQUIRE(v.witnesses.size() == 3);
  CHECK(v.witnesses[0].inputs == 1);
  CHECK(v.witnesses[1].inputs == 1);
  CHECK(v.witnesses[2].inputs == 2);
  REQUIRE(v.witnesses[2].remainder);
  REQUIRE(v.witnesses[2].remainder->size() == 1);
  const auto x1x2 = parse_xpoly("x1*x2", r.extended.ring()).terms()[0].mono;
  CHECK(v.witnesses[2].remainder->terms()[0].mono == x1x2);
}

TEST_CASE("binomiality of the MAPK cascade") {
  IntermediateReduction r = open_reduction(corpus("mapk.crn"));
  BinomialityVerdict v = binomiality(r);
  CHECK(v.verdict == Verdict::not_binomial);
  CHECK(v.core_binomial);
  CHECK(v.order.describe() == "grevlex(x0 > e > x1 > x2 > f)");
  REQUIRE(v.offending);
  CHECK(*v.offending ==
        parse_xpoly("kappa11/kappa10*x1*f + kappa7*kappa9/(kappa8*kappa10 + kappa9*kappa10)*x2*f", r.extended.ring()));
  CHECK(v.witnesses[3].terms == 2u);
  CHECK(v.witnesses[5].terms == 2u);
  CHECK(v.witnesses[0].terms == 1u);
}

TEST_CASE("enzyme counterexamples") {
  IntermediateReduction core = open_reduction(corpus("cubic_autocatalysis.crn"), {});
  GroebnerBasis cg = core_groebner_basis(core, default_core_order(core));
  REQUIRE(cg.polys.size() == 1);
  CHECK(cg.polys[0] == parse_xpoly("x^3 - (k1 - k3)/(2*k2)*x^2", core.core.ring()));
  CHECK(binomiality(core).verdict == Verdict::binomial);

  IntermediateReduction ext = open_reduction(corpus("cubic_autocatalysis_enzyme.crn"), {});
  BinomialityVerdict v = binomiality(ext);
  CHECK(v.verdict == Verdict::not_binomial);
  REQUIRE(v.core_basis.polys.size() == 1);
  CHECK(v.core_basis.polys[0] ==
        parse_xpoly("x^3 - kappa1/(2*kappa2)*x^2 + kappa3/(2*kappa2)*x^2*e", ext.extended.ring()));

  ReactionNetwork n52 = corpus("degradation.crn");
  CHECK(strings(buchberger(steady_state_polynomials(n52), MonomialOrder::lex({"x1", "x2"}))) ==
        std::vector<std::string>{"x1"});
  CHECK(strings(buchberger(steady_state_polynomials(n52), MonomialOrder::grevlex({"x1", "x2"}))) ==
        std::vector<std::string>{"x1"});
  ReactionNetwork e52 = corpus("degradation_enzyme.crn");
  const std::vector<XPoly> x1{parse_xpoly("x1", e52.ring())};
  CHECK_FALSE(ideals_equal(steady_state_polynomials(e52), x1, MonomialOrder::grevlex(e52.variables())));
}

TEST_CASE("one-input shortcut agrees with the remainder check") {
  std::mt19937_64 rng(8);
  std::size_t shortcut = 0;
  for (int trial = 0; trial < 30; ++trial) {
    ReactionNetwork n = crn::testing::random_extended_network(rng, 2, 1 + trial % 2, 3);
    IntermediateReduction r = open_reduction(n);
    BinomialityVerdict fast = binomiality(r);
    BinomialityOptions full;
    full.skip_shortcut = true;
    BinomialityVerdict slow = binomiality(r, full);
    CHECK(fast.verdict == slow.verdict);
    if (fast.shortcut_used == Shortcut::one_input) ++shortcut;

    const MonomialOrder block = MonomialOrder::block_extend(default_core_order(r), r.intermediate_variables());
    GroebnerBasis direct = buchberger(steady_state_polynomials(n), block);
    CHECK((fast.verdict == Verdict::binomial) == is_binomial_reduced(direct));
  }
  CHECK(shortcut > 0);
}

TEST_CASE("chain of 1-input intermediates uses the shortcut") {
  IntermediateReduction r = open_reduction(corpus("chain_one_input.crn"));
  BinomialityVerdict v = binomiality(r);
  CHECK(v.shortcut_used == Shortcut::one_input);
  CHECK(v.verdict == Verdict::binomial);
  CHECK_FALSE(v.witnesses[0].terms.has_value());
}
