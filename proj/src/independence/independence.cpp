#include "crn/independence/independence.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "crn/algebra/matrix.hpp"
#include "crn/errors.hpp"

namespace crn {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Groups 0..n-1 by root, groups ordered by their smallest element.
std::vector<std::vector<std::size_t>> groups(UnionFind& uf, std::size_t n) {
  std::map<std::size_t, std::size_t> slot;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = slot.try_emplace(uf.find(i), out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(i);
  }
  return out;
}

std::set<std::size_t> symbols_of(const ParamScalar& s) {
  std::set<std::size_t> out;
  for (const auto* p : {&s.num(), &s.den()})
    for (const auto& t : p->terms())
      for (std::size_t i = 0; i < t.mono.size(); ++i)
        if (t.mono[i]) out.insert(i);
  return out;
}

}  // namespace

OverlapClasses overlap_classes(const IntermediateReduction& r) {
  const ReactionNetwork& n = r.extended;
  const IntermediateSet& y = r.intermediates;
  std::vector<std::size_t> position(n.complexes().size(), y.size());
  for (std::size_t i = 0; i < y.size(); ++i) position[*n.complex_index(Complex::single(y.members[i]))] = i;
  auto inter = [&](std::size_t c) { return position[c] < y.size(); };

  OverlapClasses out;
  out.r_prime = r.r_prime;
  UnionFind comp(y.size());
  for (const auto& rx : n.reactions())
    if (inter(rx.reactant) && inter(rx.product)) comp.unite(position[rx.reactant], position[rx.product]);
  out.intermediate_components = groups(comp, y.size());
  std::vector<std::size_t> component_of(y.size());
  for (std::size_t k = 0; k < out.intermediate_components.size(); ++k)
    for (std::size_t i : out.intermediate_components[k]) component_of[i] = k;

  // Reactions leaving each intermediate.
  std::vector<std::vector<std::size_t>> leaving(y.size());
  for (std::size_t k = 0; k < n.reactions().size(); ++k)
    if (inter(n.reactions()[k].reactant)) leaving[position[n.reactions()[k].reactant]].push_back(k);

  for (std::size_t core_rx : r.r_prime) {
    const CoreReaction& cr = r.correspondence[core_rx];
    std::set<std::size_t> comps;
    for (const auto& rx : n.reactions()) {
      if (rx.reactant != cr.reactant || !inter(rx.product)) continue;
      std::vector<bool> seen(y.size(), false);
      std::vector<std::size_t> stack{position[rx.product]};
      seen[stack.back()] = true;
      bool reaches = false;
      while (!stack.empty() && !reaches) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t k : leaving[u]) {
          const std::size_t p = n.reactions()[k].product;
          if (p == cr.product) reaches = true;
          if (inter(p) && !seen[position[p]]) {
            seen[position[p]] = true;
            stack.push_back(position[p]);
          }
        }
      }
      if (reaches) comps.insert(component_of[position[rx.product]]);
    }
    out.reaction_components.emplace_back(comps.begin(), comps.end());
  }

  // Reactions sharing a component are joined through that component's node.
  const std::size_t nr = r.r_prime.size();
  UnionFind uf(nr + out.intermediate_components.size());
  for (std::size_t a = 0; a < nr; ++a)
    for (std::size_t k : out.reaction_components[a]) uf.unite(a, nr + k);
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t a = 0; a < nr; ++a) by_root[uf.find(a)].push_back(r.r_prime[a]);
  for (auto& [root, members] : by_root) out.classes.push_back(std::move(members));
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

std::size_t jacobian_rank(const std::vector<ParamScalar>& fs, std::size_t nparams) {
  if (fs.empty()) return 0;
  return rank(jacobian(fs, nparams));
}

IndependenceVerdict check_independence(const IntermediateReduction& r, const IndependenceOptions& options) {
  const std::size_t np = r.extended.ring()->nparams();
  const std::size_t cap = options.elimination_cap ? *options.elimination_cap : elimination_cap();
  IndependenceVerdict v;
  v.independent = true;
  const OverlapClasses oc = overlap_classes(r);
  for (const auto& cls : oc.classes) {
    options.deadline.check();
    ClassVerdict cv;
    cv.reactions = cls;
    std::vector<ParamScalar> fs;
    for (std::size_t k : cls) fs.push_back(r.phi.at(k));
    if (cls.size() == 1) {
      cv.method = ClassMethod::singleton;
      cv.independent = !fs[0].is_constant();
      if (options.jacobian_for_singletons) cv.rank = jacobian_rank(fs, np);
    } else {
      cv.method = ClassMethod::jacobian;
      cv.rank = jacobian_rank(fs, np);
      cv.independent = *cv.rank == cls.size();
    }
    if (options.cross_check) {
      if (fs.size() <= cap) {
        cv.elimination = independence_elimination_check(fs, cap, options.deadline);
        if (*cv.elimination != cv.independent)
          v.notes.push_back("elimination criterion disagrees with the Jacobian verdict on a class");
      } else {
        v.notes.push_back("elimination cross-check skipped for a class of " + std::to_string(fs.size()) +
                          " functions (cap " + std::to_string(cap) + ")");
      }
    }
    v.independent = v.independent && cv.independent;
    v.classes.push_back(std::move(cv));
  }
  if (options.full_jacobian) v.full_rank = jacobian_rank(r.phi, np);
  return v;
}

std::size_t elimination_cap() {
  const char* env = std::getenv("CRN_ELIM_CAP");
  if (!env || !*env) return 4;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) throw InputError("CRN_ELIM_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

bool independence_elimination_check(const std::vector<ParamScalar>& fs, std::size_t cap, const Deadline& deadline) {
  if (fs.size() > cap)
    throw CapExceeded("elimination check is limited to " + std::to_string(cap) + " functions, got " +
                      std::to_string(fs.size()));
  if (fs.empty()) return true;
  std::set<std::size_t> used;
  for (const auto& f : fs) {
    auto s = symbols_of(f);
    used.insert(s.begin(), s.end());
  }
  // Variables: the used parameters and u (eliminated), then T_1..T_m.
  std::vector<std::size_t> params(used.begin(), used.end());
  std::vector<std::string> names;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t p : params) {
    slot[p] = names.size();
    names.push_back("p" + std::to_string(p));
  }
  const std::size_t u = names.size();
  names.push_back("u");
  const std::size_t eliminated = names.size();
  std::vector<std::string> ts;
  for (std::size_t i = 0; i < fs.size(); ++i) ts.push_back("T" + std::to_string(i + 1));
  names.insert(names.end(), ts.begin(), ts.end());
  const RingPtr ring = make_ring({}, names);
  const std::size_t nv = names.size();

  auto lift = [&](const ParamPoly& p) {
    std::vector<XPoly::Term> terms;
    for (const auto& t : p.terms()) {
      Monomial m(nv);
      for (std::size_t i = 0; i < t.mono.size(); ++i)
        if (t.mono[i]) m[slot.at(i)] = t.mono[i];
      terms.push_back({m, ParamScalar::constant(0, t.coeff)});
    }
    return XPoly::from_terms(ring, std::move(terms));
  };

  std::vector<XPoly> gens;
  XPoly product = XPoly::constant(ring, Rational(1));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const XPoly g = lift(fs[i].den());
    gens.push_back(g * XPoly::variable(ring, eliminated + i) - lift(fs[i].num()));
    product = product * g;
  }
  gens.push_back(XPoly::constant(ring, Rational(1)) - XPoly::variable(ring, u) * product);

  // Degree block on the eliminated variables, then grevlex inside each block.
  OrderMatrix m;
  std::vector<long> first(nv, 0);
  for (std::size_t j = 0; j < eliminated; ++j) first[j] = 1;
  m.push_back(first);
  for (std::size_t j = eliminated; j-- > 1;) {
    std::vector<long> row(nv, 0);
    row[j] = -1;
    m.push_back(std::move(row));
  }
  std::vector<long> tdeg(nv, 0);
  for (std::size_t j = eliminated; j < nv; ++j) tdeg[j] = 1;
  m.push_back(tdeg);
  for (std::size_t j = nv; j-- > eliminated + 1;) {
    std::vector<long> row(nv, 0);
    row[j] = -1;
    m.push_back(std::move(row));
  }
  const MonomialOrder order = MonomialOrder::custom(names, m);
  BuchbergerOptions opts;
  opts.deadline = deadline;
  return elimination(buchberger(gens, order, opts), ts).empty();
}

void record_verdict(IntermediateReduction& r, const IndependenceVerdict& v) {
  r.gate = v.independent ? IndependenceGate::verified : IndependenceGate::refuted;
}

std::string to_string(ClassMethod m) { return m == ClassMethod::singleton ? "singleton" : "jacobian"; }

}  // namespace crn
