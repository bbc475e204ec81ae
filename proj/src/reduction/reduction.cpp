#include "crn/reduction/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "crn/algebra/matrix.hpp"
#include "crn/errors.hpp"
#include "crn/groebner/groebner.hpp"
#include "crn/network/steady_state.hpp"

namespace crn {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Monomial complex_monomial(const Complex& c, std::size_t nvars) {
  Monomial m(nvars);
  for (const auto& [s, e] : c.entries()) m[s] = static_cast<Exponent>(e);
  return m;
}

/// Reaction graph on complexes with intermediate complexes marked.
struct Graph {
  std::vector<std::size_t> position;             // complex -> intermediate position or npos
  std::vector<std::size_t> intermediate_complex;  // intermediate position -> complex
  std::vector<std::vector<std::size_t>> out;     // complex -> reactions

  Graph(const ReactionNetwork& n, const IntermediateSet& y)
      : position(n.complexes().size(), npos), intermediate_complex(y.size(), npos), out(n.complexes().size()) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      auto c = n.complex_index(Complex::single(y.members[i]));
      if (!c) throw InputError("intermediate '" + n.species()[y.members[i]] + "' is not a complex");
      position[*c] = i;
      intermediate_complex[i] = *c;
    }
    for (std::size_t r = 0; r < n.reactions().size(); ++r) out[n.reactions()[r].reactant].push_back(r);
  }

  bool intermediate(std::size_t complex) const { return position[complex] != npos; }
};

struct Subsystem {
  ParamMatrix a;
  std::vector<XPoly> b;
};

/// A y = b, the steady-state equations of the intermediates.
Subsystem build_subsystem(const ReactionNetwork& n, const IntermediateSet& y) {
  const Graph g(n, y);
  const RingPtr& ring = n.ring();
  const std::size_t m = y.size();
  Subsystem s{ParamMatrix(m, m, ring->nparams()), std::vector<XPoly>(m, XPoly(ring))};
  for (std::size_t r = 0; r < n.reactions().size(); ++r) {
    const auto& rx = n.reactions()[r];
    const ParamScalar k = ParamScalar::variable(ring->nparams(), r);
    const std::size_t ri = g.position[rx.reactant];
    const std::size_t pi = g.position[rx.product];
    if (ri != npos) s.a(ri, ri) -= k;
    if (pi == npos) continue;
    if (ri != npos)
      s.a(pi, ri) += k;
    else
      s.b[pi] -= XPoly::monomial(ring, complex_monomial(n.complexes()[rx.reactant], ring->nvars()), k);
  }
  return s;
}

void check_candidate(const ReactionNetwork& n, std::size_t s) {
  const std::string& name = n.species()[s];
  const Complex self = Complex::single(s);
  for (const auto& c : n.complexes())
    if (c != self && c.coefficient(s) != 0)
      throw IntermediateError(IntermediateError::Kind::nonzero_coefficient_elsewhere, name,
                              "species '" + name + "' occurs in the complex " + complex_to_string(c, n.species()) +
                                  " and cannot be an intermediate");
  auto idx = n.complex_index(self);
  if (!idx)
    throw IntermediateError(IntermediateError::Kind::not_a_complex, name,
                            "species '" + name + "' is not a complex of the network");
  bool outflow = false;
  bool inflow = false;
  for (const auto& r : n.reactions()) {
    outflow = outflow || r.reactant == *idx;
    inflow = inflow || r.product == *idx;
  }
  if (!outflow)
    throw IntermediateError(IntermediateError::Kind::no_outflow, name,
                            "intermediate '" + name + "' is not the reactant of any reaction");
  if (!inflow)
    throw IntermediateError(IntermediateError::Kind::no_inflow, name,
                            "intermediate '" + name + "' is not the product of any reaction");
}

std::size_t column_of(const MuTable& mu, std::size_t complex) {
  auto it = std::lower_bound(mu.complexes.begin(), mu.complexes.end(), complex);
  if (it == mu.complexes.end() || *it != complex)
    throw InputError("complex " + std::to_string(complex) + " is not a non-intermediate complex");
  return static_cast<std::size_t>(it - mu.complexes.begin());
}

std::string core_prefix(const ReactionNetwork& n, std::size_t count) {
  std::set<std::string> taken;
  for (const auto& k : n.rate_symbols()) taken.insert(k);
  for (const auto& v : n.variables()) taken.insert(v);
  for (const auto& s : n.species()) taken.insert(s);
  std::string prefix = "k";
  for (;;) {
    bool clash = false;
    for (std::size_t i = 1; i <= count && !clash; ++i) clash = taken.count(prefix + std::to_string(i)) > 0;
    if (!clash) return prefix;
    prefix += "_";
  }
}

}  // namespace

std::optional<std::size_t> IntermediateSet::position(std::size_t species) const {
  auto it = std::find(members.begin(), members.end(), species);
  if (it == members.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

bool intermediate_system_solvable(const ReactionNetwork& network, const IntermediateSet& y) {
  if (y.empty()) return true;
  return rank(build_subsystem(network, y).a) == y.size();
}

IntermediateSet validate_intermediates(const ReactionNetwork& network, const std::vector<std::string>& names) {
  IntermediateSet set;
  for (const auto& name : names) {
    auto s = network.species_index(name);
    if (!s)
      throw IntermediateError(IntermediateError::Kind::unknown_species, name,
                              "intermediate '" + name + "' is not a species of the network");
    if (set.position(*s)) throw InputError("intermediate '" + name + "' listed twice");
    check_candidate(network, *s);
    set.members.push_back(*s);
  }
  if (!intermediate_system_solvable(network, set))
    throw SingularIntermediateSystem("the steady-state equations of the intermediates have no unique solution");
  return set;
}

std::vector<std::size_t> intermediate_candidates(const ReactionNetwork& network) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < network.num_species(); ++s) {
    try {
      check_candidate(network, s);
      out.push_back(s);
    } catch (const IntermediateError&) {
    }
  }
  return out;
}

std::vector<std::string> detect_intermediates(const ReactionNetwork& network) {
  IntermediateSet set{intermediate_candidates(network)};
  while (!set.empty() && !intermediate_system_solvable(network, set)) set.members.erase(set.members.begin());
  std::vector<std::string> names;
  for (std::size_t s : set.members) names.push_back(network.species()[s]);
  return names;
}

const ParamScalar& MuTable::at(std::size_t i, std::size_t complex) const {
  return values.at(i)[column_of(*this, complex)];
}

std::vector<std::size_t> non_intermediate_complexes(const ReactionNetwork& network, const IntermediateSet& y) {
  const Graph g(network, y);
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < network.complexes().size(); ++c)
    if (!g.intermediate(c)) out.push_back(c);
  return out;
}

MuTable solve_mu(const ReactionNetwork& network, const IntermediateSet& y) {
  MuTable mu;
  mu.complexes = non_intermediate_complexes(network, y);
  if (y.empty()) return mu;
  Subsystem s = build_subsystem(network, y);
  std::vector<XPoly> sol;
  try {
    sol = solve_linear(s.a, s.b);
  } catch (const SingularSystem&) {
    throw SingularIntermediateSystem("the steady-state equations of the intermediates have no unique solution");
  }
  const RingPtr& ring = network.ring();
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::vector<ParamScalar> row;
    row.reserve(mu.complexes.size());
    for (std::size_t c : mu.complexes)
      row.push_back(sol[i].coefficient(complex_monomial(network.complexes()[c], ring->nvars())));
    mu.values.push_back(std::move(row));
  }
  return mu;
}

std::size_t tree_cap() {
  const char* env = std::getenv("CRN_TREE_CAP");
  if (!env || !*env) return 8;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) throw InputError("CRN_TREE_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

ParamScalar mu_spanning_tree(const ReactionNetwork& network, const IntermediateSet& y, std::size_t i,
                             std::size_t complex, std::size_t cap) {
  const std::size_t m = y.size();
  if (m > cap)
    throw CapExceeded("spanning-tree enumeration is limited to " + std::to_string(cap) + " intermediates, got " +
                      std::to_string(m));
  if (i >= m) throw InputError("intermediate position out of range");
  const Graph g(network, y);
  if (complex >= network.complexes().size() || g.intermediate(complex))
    throw InputError("complex is not a non-intermediate complex");
  const std::size_t np = network.ring()->nparams();
  const std::size_t star = m;

  struct Edge {
    std::size_t to;
    ParamPoly label;
  };
  std::vector<std::vector<Edge>> out(m + 1);
  for (std::size_t j = 0; j < m; ++j) {
    ParamPoly beta(np);
    for (std::size_t r : g.out[g.intermediate_complex[j]]) {
      const std::size_t target = network.reactions()[r].product;
      const ParamPoly k = ParamPoly::variable(np, r);
      if (g.intermediate(target))
        out[j].push_back({g.position[target], k});
      else
        beta += k;
    }
    if (!beta.is_zero()) out[j].push_back({star, beta});
  }
  for (std::size_t r : g.out[complex]) {
    const std::size_t target = network.reactions()[r].product;
    if (g.intermediate(target)) out[star].push_back({g.position[target], ParamPoly::variable(np, r)});
  }

  // Sum over spanning trees oriented towards `root` of the product of edge labels.
  auto weight = [&](std::size_t root) {
    ParamPoly total(np);
    std::vector<std::size_t> others;
    for (std::size_t v = 0; v <= m; ++v)
      if (v != root) others.push_back(v);
    for (std::size_t v : others)
      if (out[v].empty()) return total;
    std::vector<std::size_t> choice(m + 1, 0);
    std::vector<std::size_t> parent(m + 1, npos);
    for (;;) {
      for (std::size_t v : others) parent[v] = out[v][choice[v]].to;
      bool tree = true;
      for (std::size_t v : others) {
        std::size_t u = v;
        std::size_t steps = 0;
        while (u != root && steps <= m) {
          u = parent[u];
          ++steps;
        }
        if (u != root) {
          tree = false;
          break;
        }
      }
      if (tree) {
        ParamPoly p = ParamPoly::constant(np, 1);
        for (std::size_t v : others) p = p * out[v][choice[v]].label;
        total += p;
      }
      std::size_t k = 0;
      while (k < others.size()) {
        const std::size_t v = others[k];
        if (++choice[v] < out[v].size()) break;
        choice[v] = 0;
        ++k;
      }
      if (k == others.size()) break;
    }
    return total;
  };

  const ParamPoly den = weight(star);
  if (den.is_zero())
    throw SingularIntermediateSystem("no spanning tree is rooted at the outside vertex");
  return ParamScalar::fraction(weight(i), den);
}

std::vector<std::string> IntermediateReduction::intermediate_variables() const {
  std::vector<std::string> out;
  for (std::size_t s : intermediates.members) out.push_back(extended.variables()[s]);
  return out;
}

std::vector<std::size_t> inputs_of(const IntermediateReduction& r, std::size_t i) {
  const ReactionNetwork& n = r.extended;
  const Graph g(n, r.intermediates);
  // Intermediates from which Y_i is reachable through intermediates.
  std::vector<bool> reaches(r.intermediates.size(), false);
  reaches.at(i) = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& rx : n.reactions()) {
      const std::size_t a = g.position[rx.reactant];
      const std::size_t b = g.position[rx.product];
      if (a != npos && b != npos && reaches[b] && !reaches[a]) grew = reaches[a] = true;
    }
  }
  std::set<std::size_t> inputs;
  for (const auto& rx : n.reactions()) {
    const std::size_t b = g.position[rx.product];
    if (b != npos && reaches[b] && !g.intermediate(rx.reactant)) inputs.insert(rx.reactant);
  }
  return {inputs.begin(), inputs.end()};
}

IntermediateReduction core_network(const ReactionNetwork& network, const IntermediateSet& y) {
  if (y.empty()) {
    IntermediateReduction r{network, y, network};
    for (std::size_t k = 0; k < network.reactions().size(); ++k)
      r.correspondence.push_back({network.reactions()[k].reactant, network.reactions()[k].product, k});
    r.mu.complexes = non_intermediate_complexes(network, y);
    return r;
  }
  const Graph g(network, y);
  std::map<std::pair<std::size_t, std::size_t>, std::optional<std::size_t>> pairs;
  for (std::size_t c = 0; c < network.complexes().size(); ++c) {
    if (g.intermediate(c)) continue;
    std::vector<bool> seen(y.size(), false);
    std::vector<std::size_t> stack;
    for (std::size_t rx : g.out[c]) {
      const std::size_t p = network.reactions()[rx].product;
      if (g.intermediate(p)) {
        if (!seen[g.position[p]]) {
          seen[g.position[p]] = true;
          stack.push_back(p);
        }
      } else {
        pairs[{c, p}] = rx;
      }
    }
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t rx : g.out[u]) {
        const std::size_t p = network.reactions()[rx].product;
        if (g.intermediate(p)) {
          if (!seen[g.position[p]]) {
            seen[g.position[p]] = true;
            stack.push_back(p);
          }
        } else if (p != c) {
          pairs.try_emplace({c, p}, std::nullopt);
        }
      }
    }
  }

  std::vector<std::size_t> species_map(network.num_species(), npos);
  std::vector<std::string> species;
  for (std::size_t s = 0; s < network.num_species(); ++s) {
    if (y.position(s)) continue;
    species_map[s] = species.size();
    species.push_back(network.species()[s]);
  }
  auto remap = [&](const Complex& c) {
    std::vector<std::pair<std::size_t, unsigned>> entries;
    for (const auto& [s, e] : c.entries()) entries.emplace_back(species_map[s], e);
    return Complex(std::move(entries));
  };

  const std::string prefix = core_prefix(network, pairs.size());
  std::vector<ReactionSpec> specs;
  std::vector<CoreReaction> correspondence;
  for (const auto& [key, direct] : pairs) {
    specs.push_back({remap(network.complexes()[key.first]), remap(network.complexes()[key.second]),
                     prefix + std::to_string(specs.size() + 1)});
    correspondence.push_back({key.first, key.second, direct});
  }
  IntermediateReduction r{network, y, ReactionNetwork(std::move(species), specs), std::move(correspondence)};
  for (std::size_t k = 0; k < r.correspondence.size(); ++k)
    if (!r.correspondence[k].direct) r.r_prime.push_back(k);
  r.mu.complexes = non_intermediate_complexes(network, y);
  return r;
}

std::vector<ParamScalar> phi_map(const IntermediateReduction& r) {
  const ReactionNetwork& n = r.extended;
  const std::size_t np = n.ring()->nparams();
  const Graph g(n, r.intermediates);
  std::vector<ParamScalar> phi;
  for (const auto& cr : r.correspondence) {
    ParamScalar v(np);
    if (cr.direct) v = ParamScalar::variable(np, *cr.direct);
    if (!r.intermediates.empty()) {
      const std::size_t col = column_of(r.mu, cr.reactant);
      for (std::size_t i = 0; i < r.intermediates.size(); ++i) {
        const ParamScalar& mu = r.mu.values.at(i)[col];
        if (mu.is_zero()) continue;
        for (std::size_t rx : g.out[g.intermediate_complex[i]])
          if (n.reactions()[rx].product == cr.product) v += ParamScalar::variable(np, rx) * mu;
      }
    }
    if (v.is_zero())
      throw ComputationError("phi of core reaction " + complex_to_string(n.complexes()[cr.reactant], n.species()) +
                             " -> " + complex_to_string(n.complexes()[cr.product], n.species()) + " vanishes");
    phi.push_back(std::move(v));
  }
  return phi;
}

XPoly mu_expression(const IntermediateReduction& r, std::size_t i) {
  const RingPtr& ring = r.extended.ring();
  std::vector<XPoly::Term> terms;
  for (std::size_t j = 0; j < r.mu.complexes.size(); ++j) {
    const ParamScalar& v = r.mu.values.at(i)[j];
    if (!v.is_zero())
      terms.push_back({complex_monomial(r.extended.complexes()[r.mu.complexes[j]], ring->nvars()), v});
  }
  return XPoly::from_terms(ring, std::move(terms));
}

std::vector<XPoly> h_polynomials(const IntermediateReduction& r) {
  const RingPtr& ring = r.extended.ring();
  std::vector<XPoly> h;
  for (std::size_t i = 0; i < r.intermediates.size(); ++i)
    h.push_back(XPoly::variable(ring, r.intermediates.members[i]) - mu_expression(r, i));
  return h;
}

IntermediateReduction reduce_network(const ReactionNetwork& network, const std::vector<std::string>& intermediates) {
  IntermediateSet y = validate_intermediates(network, intermediates);
  IntermediateReduction r = core_network(network, y);
  r.mu = solve_mu(network, y);
  const auto& names = network.ring()->params();
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < r.mu.complexes.size(); ++j) {
      const ParamScalar& v = r.mu.values[i][j];
      if (!v.is_zero() && !v.has_nonnegative_coefficients())
        r.warnings.push_back("mu for " + network.species()[y.members[i]] + " and " +
                             complex_to_string(network.complexes()[r.mu.complexes[j]], network.species()) +
                             " has a representation with negative coefficients: " + to_string(v, names));
    }
  r.phi = phi_map(r);
  for (std::size_t k = 0; k < r.phi.size(); ++k)
    if (!r.phi[k].has_nonnegative_coefficients())
      r.warnings.push_back("phi for " + r.core.rate_symbols()[k] +
                           " has a representation with negative coefficients: " + to_string(r.phi[k], names));
  r.h_polys = h_polynomials(r);
  return r;
}

std::vector<XPoly> phi_image(const IntermediateReduction& r, const std::vector<XPoly>& fs) {
  const ParamSubstitution subst(r.phi, r.extended.ring()->nparams());
  std::vector<XPoly> out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    if (f.ring()->params() != r.core.ring()->params())
      throw RingMismatch("Phi expects a polynomial over the core rate symbols");
    out.push_back(f.map_coefficients(r.extended.ring(), [&](const ParamScalar& c) { return subst(c); }));
  }
  return out;
}

XPoly phi_image(const IntermediateReduction& r, const XPoly& f) { return phi_image(r, std::vector<XPoly>{f})[0]; }

XPoly apply_phi(const IntermediateReduction& r, const XPoly& f) {
  if (!r.gate_open()) throw IndependenceNotVerified();
  return phi_image(r, f);
}

ReductionCheck verify_reduction(const IntermediateReduction& r, bool check_ideal) {
  ReductionCheck check;
  const ReactionNetwork& n = r.extended;

  check.support = true;
  for (std::size_t i = 0; i < r.intermediates.size(); ++i) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < r.mu.complexes.size(); ++j)
      if (!r.mu.values[i][j].is_zero()) support.push_back(r.mu.complexes[j]);
    if (support != inputs_of(r, i)) {
      check.support = false;
      check.failures.push_back("mu support of " + n.species()[r.intermediates.members[i]] +
                               " differs from its inputs");
    }
  }

  const std::vector<XPoly> ext = steady_state_polynomials(n);
  const std::vector<XPoly> core = phi_image(r, steady_state_polynomials(r.core));
  std::map<std::string, XPoly> assignment;
  for (std::size_t i = 0; i < r.intermediates.size(); ++i)
    assignment.emplace(n.variables()[r.intermediates.members[i]], mu_expression(r, i));
  check.substitution = true;
  std::vector<XPoly> non_intermediate;
  for (std::size_t s = 0; s < n.num_species(); ++s) {
    if (r.intermediates.position(s)) continue;
    non_intermediate.push_back(ext[s]);
    auto cs = r.core.species_index(n.species()[s]);
    const XPoly lhs = substitute(ext[s], assignment, n.ring());
    const XPoly rhs = cs ? core[*cs] : XPoly(n.ring());
    if (lhs != rhs) {
      check.substitution = false;
      check.failures.push_back("substitution identity fails for " + n.species()[s]);
    }
  }

  if (check_ideal) {
    std::vector<XPoly> gens = non_intermediate;
    gens.insert(gens.end(), r.h_polys.begin(), r.h_polys.end());
    check.ideal = ideals_equal(ext, gens, MonomialOrder::grevlex(n.variables()));
    if (!*check.ideal) check.failures.push_back("the extended ideal is not generated by the F and H polynomials");
  }
  return check;
}

}  // namespace crn
