#include "crn/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <sstream>

#include "crn/errors.hpp"
#include "crn/independence/independence.hpp"
#include "crn/lift/lift.hpp"
#include "crn/network/parser.hpp"
#include "crn/network/steady_state.hpp"

namespace crn::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Deadline deadline_from(const std::optional<double>& seconds) {
  if (!seconds) return {};
  return Deadline::after(std::chrono::milliseconds(static_cast<long long>(*seconds * 1000)));
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::vector<std::string> poly_strings(const std::vector<XPoly>& fs, const MonomialOrder& order) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(to_string(f, order));
  return out;
}

Json ring_json(const RingPtr& ring) { return Json{{"parameters", ring->params()}, {"variables", ring->vars()}}; }

Json basis_json(const std::vector<XPoly>& fs, const MonomialOrder& order) {
  return Json{{"order", order.describe()}, {"size", fs.size()}, {"elements", poly_strings(fs, order)}};
}

/// Text writer with two-space indentation for lists.
class Text {
 public:
  void line(const std::string& key, const std::string& value) { os_ << key << ": " << value << '\n'; }
  void list(const std::string& key, const std::vector<std::string>& items) {
    os_ << key << ":" << (items.empty() ? " (none)" : "") << '\n';
    for (const auto& s : items) os_ << "  " << s << '\n';
  }
  void raw(const std::string& s) { os_ << s; }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

std::string ms_text(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

ReactionNetwork load(const RunConfig& c) {
  ReactionNetwork n = load_network(c.input);
  const bool requested = c.mode == IntermediateMode::explicit_list || c.mode == IntermediateMode::auto_detect;
  if (requested && n.declared_intermediates().empty()) {
    ParseOptions o;
    o.rate_prefix = "kappa";
    n = load_network(c.input, o);
  }
  return n;
}

std::vector<std::string> selected_intermediates(const ReactionNetwork& n, const RunConfig& c) {
  switch (c.mode) {
    case IntermediateMode::declared:
      return n.declared_intermediates();
    case IntermediateMode::explicit_list:
      return c.intermediates;
    case IntermediateMode::auto_detect:
      return detect_intermediates(n);
    case IntermediateMode::none:
      break;
  }
  return {};
}

void require_permutation(const std::vector<std::string>& given, const std::vector<std::string>& expected) {
  std::vector<std::string> a = given, b = expected;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b)
    throw InputError("--vars must list exactly the variables " + join(expected) + " (got " + join(given) + ")");
}

/// lex or grevlex over `vars` (defaulting to `defaults`).
MonomialOrder plain_order(const std::string& kind, const std::vector<std::string>& vars,
                          const std::vector<std::string>& defaults) {
  const std::vector<std::string> v = vars.empty() ? defaults : vars;
  require_permutation(v, defaults);
  if (kind.empty() || kind == "grevlex") return MonomialOrder::grevlex(v);
  if (kind == "lex") return MonomialOrder::lex(v);
  throw InputError("unknown order '" + kind + "' (expected lex or grevlex)");
}

std::string gate_name(IndependenceGate g) {
  switch (g) {
    case IndependenceGate::verified:
      return "verified";
    case IndependenceGate::assumed:
      return "assumed";
    case IndependenceGate::refuted:
      return "refuted";
    case IndependenceGate::unverified:
      break;
  }
  return "unverified";
}

IndependenceOptions independence_options(const RunConfig& c) {
  IndependenceOptions o;
  o.cross_check = c.cross_check;
  o.elimination_cap = c.elimination_cap;
  o.deadline = deadline_from(c.timeout);
  return o;
}

/// Settles the gate: assumed on request, otherwise by the independence check.
void open_gate(IntermediateReduction& r, const RunConfig& c, RunReport& rep) {
  if (c.assume_independent) {
    r.gate = IndependenceGate::assumed;
    rep.warnings.push_back("algebraic independence of the phi functions assumed, not verified");
    return;
  }
  const auto start = Clock::now();
  const IndependenceVerdict v = check_independence(r, independence_options(c));
  rep.timings["independence"] = ms_since(start);
  record_verdict(r, v);
  for (const auto& n : v.notes) rep.warnings.push_back(n);
  if (!r.gate_open()) throw IndependenceNotVerified();
}

IntermediateReduction reduce_for(const ReactionNetwork& n, const RunConfig& c, RunReport& rep) {
  const auto start = Clock::now();
  IntermediateReduction r = reduce_network(n, selected_intermediates(n, c));
  rep.timings["reduction"] = ms_since(start);
  for (const auto& w : r.warnings) rep.warnings.push_back(w);
  return r;
}

std::vector<std::string> intermediate_species(const IntermediateReduction& r) {
  std::vector<std::string> out;
  for (std::size_t s : r.intermediates.members) out.push_back(r.extended.species()[s]);
  return out;
}

std::string rate_of(const IntermediateReduction& r, std::size_t core_rx) { return r.core.rate_symbols()[core_rx]; }

std::string complex_name(const ReactionNetwork& n, std::size_t c) {
  return complex_to_string(n.complexes()[c], n.species());
}

void cmd_validate(const RunConfig& c, RunReport& rep, Text& t) {
  const ReactionNetwork n = load(c);
  const StoichiometricBasis sb = stoichiometric_basis(n);
  std::vector<std::string> candidates, enzymes;
  for (std::size_t s : intermediate_candidates(n)) candidates.push_back(n.species()[s]);
  for (std::size_t s : detect_enzymes(n)) enzymes.push_back(n.species()[s]);
  const std::vector<std::string> inter = selected_intermediates(n, c);
  if (!inter.empty()) validate_intermediates(n, inter);

  rep.results = Json{{"species", n.species()},
                     {"parameters", n.rate_symbols()},
                     {"num_species", n.num_species()},
                     {"num_complexes", n.complexes().size()},
                     {"num_reactions", n.reactions().size()},
                     {"stoichiometric_dimension", sb.dimension},
                     {"declared_intermediates", n.declared_intermediates()},
                     {"intermediates", inter},
                     {"intermediate_candidates", candidates},
                     {"enzymes", enzymes}};
  t.line("species", std::to_string(n.num_species()));
  t.line("complexes", std::to_string(n.complexes().size()));
  t.line("reactions", std::to_string(n.reactions().size()));
  t.line("dim(S)", std::to_string(sb.dimension));
  t.line("intermediates", inter.empty() ? "(none)" : join(inter));
  t.line("intermediate candidates", candidates.empty() ? "(none)" : join(candidates));
  t.line("enzymes", enzymes.empty() ? "(none)" : join(enzymes));
}

void cmd_reduce(const RunConfig& c, RunReport& rep, Text& t) {
  const ReactionNetwork n = load(c);
  IntermediateReduction r = reduce_for(n, c, rep);
  const auto& ext = r.extended;
  const std::vector<std::string> ext_rates = ext.rate_symbols();
  const auto& params = ext.ring()->params();

  Json reactions = Json::array();
  std::vector<std::string> phi_lines;
  for (std::size_t k = 0; k < r.correspondence.size(); ++k) {
    const CoreReaction& cr = r.correspondence[k];
    const std::string phi = to_string(r.phi[k], params);
    reactions.push_back(Json{{"rate", rate_of(r, k)},
                             {"reactant", complex_name(ext, cr.reactant)},
                             {"product", complex_name(ext, cr.product)},
                             {"direct", cr.direct ? Json(ext_rates[*cr.direct]) : Json(nullptr)},
                             {"phi", phi}});
    phi_lines.push_back(rate_of(r, k) + " = " + phi);
  }

  Json mu = Json::array();
  std::vector<std::string> mu_lines;
  for (std::size_t i = 0; i < r.intermediates.size(); ++i)
    for (std::size_t j = 0; j < r.mu.complexes.size(); ++j) {
      const ParamScalar& v = r.mu.values[i][j];
      if (v.is_zero()) continue;
      const std::string cx = complex_name(ext, r.mu.complexes[j]);
      const std::string s = to_string(v, params);
      mu.push_back(Json{{"intermediate", ext.species()[r.intermediates.members[i]]}, {"complex", cx}, {"value", s}});
      mu_lines.push_back("mu[" + ext.species()[r.intermediates.members[i]] + ", " + cx + "] = " + s);
    }

  std::vector<std::string> h;
  for (const auto& p : r.h_polys) h.push_back(to_string(p));

  std::vector<std::string> r_prime;
  for (std::size_t k : r.r_prime) r_prime.push_back(rate_of(r, k));
  const OverlapClasses oc = overlap_classes(r);
  Json classes = Json::array();
  std::vector<std::string> class_lines;
  for (const auto& cls : oc.classes) {
    std::vector<std::string> names;
    for (std::size_t k : cls) names.push_back(rate_of(r, k));
    classes.push_back(names);
    class_lines.push_back("{" + join(names) + "}");
  }

  const std::vector<std::string> inter_names = intermediate_species(r);
  rep.results = Json{{"intermediates", inter_names},
                     {"extended", ring_json(ext.ring())},
                     {"core", Json{{"network", render_network(r.core)},
                                   {"species", r.core.species()},
                                   {"parameters", r.core.ring()->params()},
                                   {"variables", r.core.ring()->vars()},
                                   {"reactions", reactions}}},
                     {"mu", mu},
                     {"h", h},
                     {"r_prime", r_prime},
                     {"overlap_classes", classes}};

  t.line("intermediates", inter_names.empty() ? "(none)" : join(inter_names));
  t.raw("core network:\n");
  std::istringstream core_text(render_network(r.core));
  for (std::string l; std::getline(core_text, l);) t.raw("  " + l + "\n");
  t.list("mu", mu_lines);
  t.list("phi", phi_lines);
  t.list("H", h);
  t.line("new core reactions", r_prime.empty() ? "(none)" : join(r_prime));
  t.list("overlap classes", class_lines);

  if (c.tree_check) {
    const std::size_t cap = c.tree_cap ? *c.tree_cap : tree_cap();
    Json tc{{"cap", cap}};
    if (r.intermediates.size() > cap) {
      tc["status"] = "skipped";
      rep.warnings.push_back("spanning-tree check skipped: " + std::to_string(r.intermediates.size()) +
                             " intermediates exceed the cap " + std::to_string(cap));
    } else {
      std::size_t mismatches = 0;
      for (std::size_t i = 0; i < r.intermediates.size(); ++i)
        for (std::size_t j = 0; j < r.mu.complexes.size(); ++j)
          if (mu_spanning_tree(ext, r.intermediates, i, r.mu.complexes[j], cap) != r.mu.values[i][j]) ++mismatches;
      tc["status"] = mismatches ? "mismatch" : "agree";
      tc["mismatches"] = mismatches;
      if (mismatches) throw ComputationError("spanning-tree values disagree with the linear solve");
    }
    rep.results["tree_check"] = tc;
    t.line("spanning-tree check", tc["status"].get<std::string>());
  }
}

void cmd_gb(const RunConfig& c, RunReport& rep, Text& t) {
  const ReactionNetwork n = load(c);
  const std::vector<std::string>& all = n.ring()->vars();
  MonomialOrder order = MonomialOrder::grevlex(all);
  if (c.order == "block") {
    const std::vector<std::string> inter = selected_intermediates(n, c);
    if (inter.empty()) throw InputError("block order needs intermediates (header, --intermediates or --auto)");
    const IntermediateSet y = validate_intermediates(n, inter);
    std::vector<std::string> lead, rest;
    std::set<std::size_t> members(y.members.begin(), y.members.end());
    for (std::size_t s = 0; s < all.size(); ++s) (members.count(s) ? lead : rest).push_back(all[s]);
    order = MonomialOrder::block_extend(plain_order("grevlex", c.vars, rest), lead);
  } else {
    order = plain_order(c.order, c.vars, all);
  }
  BuchbergerOptions opts;
  opts.deadline = deadline_from(c.timeout);
  const auto start = Clock::now();
  const GroebnerBasis g = buchberger(steady_state_ideal(n, c.minimal), order, opts);
  const double ms = ms_since(start);
  rep.timings["groebner"] = ms;
  rep.results = Json{{"ring", ring_json(n.ring())}, {"basis", basis_json(g.polys, order)}};
  t.line("order", order.describe());
  t.line("size", std::to_string(g.polys.size()));
  t.list("basis", poly_strings(g.polys, order));
  if (c.time) t.line("time_ms", ms_text(ms));
}

MonomialOrder core_order_for(const IntermediateReduction& r, const RunConfig& c) {
  if (c.order == "block") throw InputError("the block order is built from the core order; pass lex or grevlex");
  return plain_order(c.order, c.vars, r.core.ring()->vars());
}

void cmd_lift(const RunConfig& c, RunReport& rep, Text& t) {
  const ReactionNetwork n = load(c);
  IntermediateReduction r = reduce_for(n, c, rep);
  const MonomialOrder core_order = core_order_for(r, c);
  open_gate(r, c, rep);
  LiftOptions opts;
  opts.deadline = deadline_from(c.timeout);
  opts.compare_direct = c.compare_direct;
  opts.direct_deadline = deadline_from(c.direct_timeout);
  const LiftReport lr = lift_groebner(r, core_order, opts);
  rep.timings["core_gb"] = lr.timings.core_gb_ms;
  rep.timings["h"] = lr.timings.h_ms;
  rep.timings["lift_reduction"] = lr.timings.reduction_ms;
  if (lr.timings.direct_ms) rep.timings["direct"] = *lr.timings.direct_ms;

  rep.results = Json{{"intermediates", intermediate_species(r)},
                     {"gate", gate_name(r.gate)},
                     {"core_ring", ring_json(r.core.ring())},
                     {"extended_ring", ring_json(r.extended.ring())},
                     {"core_basis", basis_json(lr.core_basis.polys, lr.core_basis.order)},
                     {"lifted_basis", basis_json(lr.lifted_basis.polys, lr.order_used)}};
  t.line("intermediates", r.intermediates.empty() ? "(none)" : join(intermediate_species(r)));
  t.line("gate", gate_name(r.gate));
  t.line("core order", lr.core_basis.order.describe());
  t.line("core size", std::to_string(lr.core_basis.polys.size()));
  t.list("core basis", poly_strings(lr.core_basis.polys, lr.core_basis.order));
  t.line("lifted order", lr.order_used.describe());
  t.line("lifted size", std::to_string(lr.lifted_basis.polys.size()));
  t.list("lifted basis", poly_strings(lr.lifted_basis.polys, lr.order_used));
  if (c.compare_direct) {
    Json d{{"timed_out", lr.direct_timed_out}};
    if (lr.direct_basis) d["size"] = lr.direct_basis->polys.size();
    if (lr.matches_direct) d["matches"] = *lr.matches_direct;
    rep.results["direct"] = d;
    t.line("direct", lr.direct_timed_out ? std::string("timed out")
                                         : "size " + std::to_string(lr.direct_basis->polys.size()) +
                                               (*lr.matches_direct ? ", identical" : ", DIFFERENT"));
  }
  if (c.time) {
    t.line("core_gb_ms", ms_text(lr.timings.core_gb_ms));
    t.line("lift_ms", ms_text(lr.timings.h_ms + lr.timings.reduction_ms));
    if (lr.timings.direct_ms) t.line("direct_ms", ms_text(*lr.timings.direct_ms));
  }
}

void cmd_invariants(const RunConfig& c, RunReport& rep, Text& t) {
  if (c.keep.empty()) throw InputError("invariants needs --keep");
  const ReactionNetwork n = load(c);
  IntermediateReduction r = reduce_for(n, c, rep);
  open_gate(r, c, rep);
  const auto start = Clock::now();
  const InvariantsResult inv = invariants(r, c.keep, deadline_from(c.timeout));
  rep.timings["invariants"] = ms_since(start);
  const std::vector<std::string> core = poly_strings(inv.core_invariants, inv.order);
  std::vector<std::string> ext;
  for (const auto& f : inv.invariants) ext.push_back(to_string(f));
  rep.results = Json{{"keep", c.keep},
                     {"gate", gate_name(r.gate)},
                     {"order", inv.order.describe()},
                     {"core_ring", ring_json(r.core.ring())},
                     {"extended_ring", ring_json(r.extended.ring())},
                     {"core_invariants", core},
                     {"invariants", ext}};
  t.line("keep", join(c.keep));
  t.line("order", inv.order.describe());
  t.list("core invariants", core);
  t.list("invariants", ext);
}

void cmd_binomial(const RunConfig& c, RunReport& rep, Text& t) {
  const ReactionNetwork n = load(c);
  IntermediateReduction r = reduce_for(n, c, rep);
  BinomialityOptions opts;
  if (!c.order.empty() || !c.vars.empty()) opts.core_order = core_order_for(r, c);
  opts.skip_shortcut = c.skip_shortcut;
  opts.deadline = deadline_from(c.timeout);
  open_gate(r, c, rep);
  const auto start = Clock::now();
  const BinomialityVerdict v = binomiality(r, opts);
  rep.timings["binomiality"] = ms_since(start);
  const MonomialOrder block = MonomialOrder::block_extend(v.order, r.intermediate_variables());

  Json witnesses = Json::array();
  std::vector<std::string> wl;
  for (const auto& w : v.witnesses) {
    Json j{{"intermediate", w.intermediate}, {"inputs", w.inputs}};
    j["terms"] = w.terms ? Json(*w.terms) : Json(nullptr);
    j["remainder"] = w.remainder ? Json(to_string(*w.remainder, block)) : Json(nullptr);
    witnesses.push_back(j);
    wl.push_back(w.intermediate + ": " + std::to_string(w.inputs) + "-input" +
                 (w.remainder ? ", remainder " + to_string(*w.remainder, block) : std::string()));
  }
  rep.results = Json{{"verdict", to_string(v.verdict)},
                     {"core_binomial", v.core_binomial},
                     {"shortcut", to_string(v.shortcut_used)},
                     {"gate", gate_name(r.gate)},
                     {"core_ring", ring_json(r.core.ring())},
                     {"extended_ring", ring_json(r.extended.ring())},
                     {"core_basis", basis_json(v.core_basis.polys, v.order)},
                     {"witnesses", witnesses},
                     {"offending", v.offending ? Json(to_string(*v.offending, block)) : Json(nullptr)}};
  t.line("verdict", to_string(v.verdict));
  t.line("core binomial", v.core_binomial ? "yes" : "no");
  t.line("shortcut", to_string(v.shortcut_used));
  t.line("order", v.order.describe());
  t.list("core basis", poly_strings(v.core_basis.polys, v.order));
  t.list("witnesses", wl);
  if (v.offending) t.line("offending remainder", to_string(*v.offending, block));
}

void cmd_indep(const RunConfig& c, RunReport& rep, Text& t) {
  const ReactionNetwork n = load(c);
  IntermediateReduction r = reduce_for(n, c, rep);
  IndependenceOptions opts = independence_options(c);
  opts.full_jacobian = true;
  const auto start = Clock::now();
  const IndependenceVerdict v = check_independence(r, opts);
  rep.timings["independence"] = ms_since(start);
  for (const auto& note : v.notes) rep.warnings.push_back(note);

  Json classes = Json::array();
  std::vector<std::string> lines;
  for (const auto& cv : v.classes) {
    std::vector<std::string> names;
    for (std::size_t k : cv.reactions) names.push_back(rate_of(r, k));
    Json j{{"reactions", names}, {"method", to_string(cv.method)}, {"independent", cv.independent}};
    j["rank"] = cv.rank ? Json(*cv.rank) : Json(nullptr);
    j["elimination"] = cv.elimination ? Json(*cv.elimination) : Json(nullptr);
    classes.push_back(j);
    std::string l = "{" + join(names) + "}: " + to_string(cv.method);
    if (cv.rank) l += ", rank " + std::to_string(*cv.rank);
    if (cv.elimination) l += std::string(", elimination ") + (*cv.elimination ? "independent" : "dependent");
    l += cv.independent ? ", pass" : ", FAIL";
    lines.push_back(l);
  }
  rep.results = Json{{"independent", v.independent},
                     {"classes", classes},
                     {"full_rank", v.full_rank ? Json(*v.full_rank) : Json(nullptr)},
                     {"num_phi", r.phi.size()}};
  t.line("verdict", v.independent ? "independent" : "dependent");
  t.list("classes", lines);
  if (v.full_rank) t.line("full Jacobian rank", std::to_string(*v.full_rank) + " of " + std::to_string(r.phi.size()));
}

struct RouteResult {
  std::string name;
  std::string status = "skipped";
  std::optional<GroebnerBasis> basis;
  double ms = 0;
};

RouteResult direct_route(const std::string& name, const std::vector<XPoly>& gens, const MonomialOrder& order,
                         const Deadline& deadline) {
  RouteResult out{name};
  BuchbergerOptions opts;
  opts.deadline = deadline;
  const auto start = Clock::now();
  try {
    out.basis = buchberger(gens, order, opts);
    out.status = "done";
  } catch (const Timeout&) {
    out.status = "timeout";
  }
  out.ms = ms_since(start);
  return out;
}

void cmd_bench(const RunConfig& c, RunReport& rep, Text& t) {
  const ReactionNetwork n = load(c);
  IntermediateReduction r = reduce_for(n, c, rep);
  const MonomialOrder core_order = core_order_for(r, c);
  open_gate(r, c, rep);
  const MonomialOrder block = MonomialOrder::block_extend(core_order, r.intermediate_variables());
  const std::vector<XPoly> gens = steady_state_ideal(r.extended, true);
  const MonomialOrder grevlex = MonomialOrder::grevlex(r.extended.ring()->vars());

  auto lifted = [&] {
    RouteResult out{"lifted"};
    LiftOptions opts;
    opts.deadline = deadline_from(c.timeout);
    opts.verify = false;
    const auto start = Clock::now();
    out.basis = lift_groebner(r, core_order, opts).lifted_basis;
    out.ms = ms_since(start);
    out.status = "done";
    return out;
  };
  auto direct = [&](const std::string& name, const MonomialOrder& order) {
    if (c.skip_direct) return RouteResult{name};
    return direct_route(name, gens, order, deadline_from(c.direct_timeout));
  };

  std::vector<RouteResult> routes;
  if (c.parallel) {
    auto a = std::async(std::launch::async, direct, "direct_grevlex", grevlex);
    auto b = std::async(std::launch::async, direct, "direct_block", block);
    auto l = std::async(std::launch::async, lifted);
    routes = {a.get(), b.get(), l.get()};
  } else {
    routes.push_back(direct("direct_grevlex", grevlex));
    routes.push_back(direct("direct_block", block));
    routes.push_back(lifted());
  }

  Json rj = Json::array();
  const MonomialOrder* orders[] = {&grevlex, &block, &block};
  for (std::size_t i = 0; i < routes.size(); ++i) {
    const auto& rr = routes[i];
    Json j{{"name", rr.name}, {"status", rr.status}, {"order", orders[i]->describe()}};
    j["size"] = rr.basis ? Json(rr.basis->polys.size()) : Json(nullptr);
    rj.push_back(j);
    if (rr.status != "skipped") rep.timings[rr.name] = rr.ms;
    if (rr.status == "timeout") rep.warnings.push_back(rr.name + " route timed out");
    std::string l = rr.status == "done" ? "size " + std::to_string(rr.basis->polys.size()) : rr.status;
    if (c.time && rr.status != "skipped") l += ", " + ms_text(rr.ms) + " ms";
    t.line(rr.name, l);
  }
  std::optional<bool> identical;
  if (routes[1].basis && routes[2].basis) identical = routes[1].basis->polys == routes[2].basis->polys;
  rep.results = Json{{"intermediates", intermediate_species(r)},
                     {"gate", gate_name(r.gate)},
                     {"routes", rj},
                     {"block_and_lifted_identical", identical ? Json(*identical) : Json(nullptr)}};
  if (identical) t.line("block and lifted bases", *identical ? "identical" : "DIFFERENT");
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const IndependenceNotVerified*>(&e)) return "IndependenceNotVerified";
  if (dynamic_cast<const SingularIntermediateSystem*>(&e)) return "SingularIntermediateSystem";
  if (dynamic_cast<const IntermediateError*>(&e)) return "IntermediateError";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const KeepContainsIntermediate*>(&e)) return "KeepContainsIntermediate";
  if (dynamic_cast<const CapExceeded*>(&e)) return "CapExceeded";
  if (dynamic_cast<const Timeout*>(&e)) return "Timeout";
  if (dynamic_cast<const InputError*>(&e)) return "InputError";
  if (dynamic_cast<const GateError*>(&e)) return "GateError";
  if (dynamic_cast<const ComputationError*>(&e)) return "ComputationError";
  return "Error";
}

}  // namespace

void validate_config(const RunConfig& c) {
  if (c.input.empty()) throw InputError("no input file");
  if (c.mode == IntermediateMode::explicit_list && c.intermediates.empty())
    throw InputError("--intermediates needs at least one species");
  if (c.mode != IntermediateMode::explicit_list && !c.intermediates.empty())
    throw InputError("explicit intermediates conflict with the selected intermediate mode");
  if (c.tree_cap && *c.tree_cap == 0) throw InputError("the tree cap must be positive");
  if (c.elimination_cap && *c.elimination_cap == 0) throw InputError("the elimination cap must be positive");
  for (const auto& t : {c.timeout, c.direct_timeout})
    if (t && *t <= 0) throw InputError("timeouts must be positive");
  if (!c.order.empty() && c.order != "lex" && c.order != "grevlex" && c.order != "block")
    throw InputError("unknown order '" + c.order + "' (expected lex, grevlex or block)");
}

RunReport run(const RunConfig& config) {
  RunReport rep;
  rep.command = to_string(config.command);
  rep.input = config.input;
  Text t;
  const auto start = Clock::now();
  try {
    validate_config(config);
    switch (config.command) {
      case Command::validate:
        cmd_validate(config, rep, t);
        break;
      case Command::reduce:
        cmd_reduce(config, rep, t);
        break;
      case Command::gb:
        cmd_gb(config, rep, t);
        break;
      case Command::lift:
        cmd_lift(config, rep, t);
        break;
      case Command::invariants:
        cmd_invariants(config, rep, t);
        break;
      case Command::binomial:
        cmd_binomial(config, rep, t);
        break;
      case Command::indep:
        cmd_indep(config, rep, t);
        break;
      case Command::bench:
        cmd_bench(config, rep, t);
        break;
    }
  } catch (const std::exception& e) {
    rep.error_kind = error_kind(e);
    rep.error_message = e.what();
    if (dynamic_cast<const InputError*>(&e))
      rep.exit_code = 1;
    else if (dynamic_cast<const GateError*>(&e))
      rep.exit_code = 3;
    else
      rep.exit_code = 2;
    rep.results = Json::object();
  }
  rep.timings["total"] = ms_since(start);
  rep.text = t.str();
  return rep;
}

nlohmann::ordered_json to_json(const RunReport& rep, bool with_time) {
  Json j{{"schema_version", schema_version}, {"command", rep.command}, {"input", rep.input}};
  if (rep.exit_code == 0)
    j["results"] = rep.results;
  else
    j["error"] = Json{{"kind", *rep.error_kind}, {"message", *rep.error_message}, {"exit_code", rep.exit_code}};
  if (with_time) j["timings_ms"] = rep.timings;
  j["warnings"] = rep.warnings;
  return j;
}

int emit(const RunReport& rep, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.json) {
    out << to_json(rep, config.time).dump(2) << '\n';
  } else {
    out << rep.text;
    for (const auto& w : rep.warnings) out << "warning: " << w << '\n';
  }
  if (rep.exit_code != 0) err << "crn " << rep.command << ": " << *rep.error_message << '\n';
  return rep.exit_code;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::validate:
      return "validate";
    case Command::reduce:
      return "reduce";
    case Command::gb:
      return "gb";
    case Command::lift:
      return "lift";
    case Command::invariants:
      return "invariants";
    case Command::binomial:
      return "binomial";
    case Command::indep:
      return "indep";
    case Command::bench:
      break;
  }
  return "bench";
}

std::optional<Command> parse_command(const std::string& name) {
  for (Command c : {Command::validate, Command::reduce, Command::gb, Command::lift, Command::invariants,
                    Command::binomial, Command::indep, Command::bench})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

}  // namespace crn::cli
