#include "crn/lift/lift.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "crn/errors.hpp"
#include "crn/network/steady_state.hpp"

namespace crn {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void sort_increasing(std::vector<XPoly>& polys, const MonomialOrder& order) {
  if (polys.empty()) return;
  const BoundOrder bo(order, polys.front().ring());
  std::stable_sort(polys.begin(), polys.end(), [&](const XPoly& a, const XPoly& b) {
    return bo.compare(leading_term(a, bo).mono, leading_term(b, bo).mono) < 0;
  });
}

void require_gate(const IntermediateReduction& r) {
  if (!r.gate_open()) throw IndependenceNotVerified();
}

}  // namespace

MonomialOrder default_core_order(const IntermediateReduction& r) { return MonomialOrder::grevlex(r.core.variables()); }

GroebnerBasis core_groebner_basis(const IntermediateReduction& r, const MonomialOrder& order, const Deadline& deadline) {
  BuchbergerOptions opts;
  opts.deadline = deadline;
  return buchberger(steady_state_ideal(r.core, true), order, opts);
}

XPoly lifted_remainder(const IntermediateReduction& r, const std::vector<XPoly>& phi_g, const MonomialOrder& block,
                       std::size_t i) {
  return remainder(mu_expression(r, i), phi_g, block);
}

LiftReport lift_groebner(const IntermediateReduction& r, const MonomialOrder& core_order, const LiftOptions& options) {
  require_gate(r);
  const MonomialOrder block = MonomialOrder::block_extend(core_order, r.intermediate_variables());

  auto start = Clock::now();
  GroebnerBasis core = core_groebner_basis(r, core_order, options.deadline);
  const double core_ms = ms_since(start);

  start = Clock::now();
  std::vector<XPoly> phi_g = phi_image(r, core.polys);
  const double h_ms = ms_since(start);

  start = Clock::now();
  std::vector<XPoly> lifted = phi_g;
  const RingPtr& ring = r.extended.ring();
  for (std::size_t i = 0; i < r.intermediates.size(); ++i) {
    options.deadline.check();
    lifted.push_back(XPoly::variable(ring, r.intermediates.members[i]) - lifted_remainder(r, phi_g, block, i));
  }
  sort_increasing(lifted, block);
  const double reduction_ms = ms_since(start);

  LiftReport report{std::move(core), GroebnerBasis{block, std::move(lifted), true}, block, {}, {}, {}};
  report.timings.core_gb_ms = core_ms;
  report.timings.h_ms = h_ms;
  report.timings.reduction_ms = reduction_ms;

  if (options.verify && !is_groebner_basis(report.lifted_basis.polys, block))
    throw ComputationError("lifted basis fails the Groebner criterion");

  if (options.compare_direct) {
    start = Clock::now();
    try {
      BuchbergerOptions opts;
      opts.deadline = options.direct_deadline;
      report.direct_basis = buchberger(steady_state_polynomials(r.extended), block, opts);
      report.timings.direct_ms = ms_since(start);
      report.matches_direct = report.direct_basis->polys == report.lifted_basis.polys;
    } catch (const Timeout&) {
      report.direct_timed_out = true;
      report.timings.direct_ms = ms_since(start);
    }
  }
  return report;
}

InvariantsResult invariants(const IntermediateReduction& r, const std::vector<std::string>& keep,
                            const Deadline& deadline) {
  const auto intermediates = r.intermediate_variables();
  for (const auto& k : keep) {
    if (std::find(intermediates.begin(), intermediates.end(), k) != intermediates.end())
      throw KeepContainsIntermediate("kept variable '" + k + "' belongs to an intermediate");
    if (!r.core.ring()->var_index(k)) throw InputError("kept variable '" + k + "' is not a core variable");
  }
  std::set<std::string> kept(keep.begin(), keep.end());
  if (kept.size() != keep.size()) throw InputError("kept variables listed twice");
  require_gate(r);

  std::vector<std::string> vars;
  for (const auto& v : r.core.variables())
    if (!kept.count(v)) vars.push_back(v);
  vars.insert(vars.end(), keep.begin(), keep.end());
  InvariantsResult out{MonomialOrder::lex(vars), {}, {}};
  out.core_invariants = elimination(core_groebner_basis(r, out.order, deadline), keep);
  out.invariants = phi_image(r, out.core_invariants);
  return out;
}

BinomialityVerdict binomiality(const IntermediateReduction& r, const BinomialityOptions& options) {
  require_gate(r);
  const MonomialOrder order = options.core_order ? *options.core_order : default_core_order(r);
  BinomialityVerdict v{Verdict::not_binomial, false, order, core_groebner_basis(r, order, options.deadline)};
  v.core_binomial = is_binomial_reduced(v.core_basis);

  bool all_one_input = true;
  for (std::size_t i = 0; i < r.intermediates.size(); ++i) {
    RemainderWitness w;
    w.intermediate = r.extended.species()[r.intermediates.members[i]];
    w.inputs = inputs_of(r, i).size();
    all_one_input = all_one_input && w.inputs == 1;
    v.witnesses.push_back(std::move(w));
  }
  if (!v.core_binomial) return v;
  if (all_one_input && !options.skip_shortcut) {
    v.shortcut_used = Shortcut::one_input;
    v.verdict = Verdict::binomial;
    return v;
  }
  v.shortcut_used = Shortcut::full_remainder_check;
  const MonomialOrder block = MonomialOrder::block_extend(order, r.intermediate_variables());
  const std::vector<XPoly> phi_g = phi_image(r, v.core_basis.polys);
  v.verdict = Verdict::binomial;
  for (std::size_t i = 0; i < r.intermediates.size(); ++i) {
    options.deadline.check();
    XPoly rem = lifted_remainder(r, phi_g, block, i);
    v.witnesses[i].terms = rem.size();
    if (rem.size() > 1 && !v.offending) {
      v.verdict = Verdict::not_binomial;
      v.offending = rem;
    }
    v.witnesses[i].remainder = std::move(rem);
  }
  return v;
}

std::string to_string(Verdict v) { return v == Verdict::binomial ? "binomial" : "not_binomial"; }

std::string to_string(Shortcut s) {
  switch (s) {
    case Shortcut::one_input:
      return "one_input";
    case Shortcut::full_remainder_check:
      return "full_remainder_check";
    case Shortcut::none:
      break;
  }
  return "none";
}

}  // namespace crn
