#include "crn/groebner/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "crn/errors.hpp"

namespace crn {

void Deadline::check() const {
  if (expired()) throw Timeout();
}

namespace {

using Terms = std::vector<XPoly::Term>;

std::uint64_t mask_of(const Monomial& m) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) bits |= std::uint64_t{1} << (i % 64);
  return bits;
}

struct Poly {
  Terms terms;
  std::uint64_t mask = 0;

  const Monomial& lm() const { return terms.front().mono; }
};

Poly make_poly(Terms terms) {
  Poly p{std::move(terms)};
  if (!p.terms.empty()) p.mask = mask_of(p.lm());
  return p;
}

void make_monic(Terms& t) {
  if (t.empty() || t.front().coeff.is_one()) return;
  const ParamScalar inv = t.front().coeff.inverse();
  t.front().coeff = ParamScalar::constant(inv.nvars(), 1);
  for (std::size_t i = 1; i < t.size(); ++i) t[i].coeff *= inv;
}

Terms times_monomial(const Terms& p, std::size_t from, const Monomial& m) {
  Terms out;
  out.reserve(p.size() - from);
  for (std::size_t i = from; i < p.size(); ++i) out.push_back({p[i].mono * m, p[i].coeff});
  return out;
}

// p[pfrom..] - c * m * g[gfrom..], merged in decreasing order.
Terms sub_scaled(const Terms& p, std::size_t pfrom, const ParamScalar& c, const Monomial& m, const Terms& g,
                 std::size_t gfrom, const BoundOrder& order) {
  Terms out;
  out.reserve(p.size() - pfrom + g.size() - gfrom);
  std::size_t i = pfrom;
  std::size_t j = gfrom;
  const bool unit = c.is_one();
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    const int cmp = i == p.size() ? -1 : order.compare(p[i].mono, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), unit ? -g[j].coeff : -(c * g[j].coeff)});
      ++j;
    } else {
      ParamScalar v = unit ? p[i].coeff - g[j].coeff : p[i].coeff - c * g[j].coeff;
      if (!v.is_zero()) out.push_back({std::move(gm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

const Poly* find_divisor(const Monomial& t, std::uint64_t tmask, const std::vector<const Poly*>& g) {
  for (const Poly* d : g)
    if ((d->mask & ~tmask) == 0 && d->lm().divides(t)) return d;
  return nullptr;
}

// Full normal form of p with respect to g (first matching divisor).
Terms normal_form(Terms p, const std::vector<const Poly*>& g, const BoundOrder& order, const Deadline& deadline) {
  Terms r;
  std::size_t start = 0;
  std::size_t steps = 0;
  while (start < p.size()) {
    if ((++steps & 63) == 0) deadline.check();
    const XPoly::Term& lt = p[start];
    const Poly* d = find_divisor(lt.mono, mask_of(lt.mono), g);
    if (!d) {
      r.push_back(std::move(p[start++]));
      continue;
    }
    const ParamScalar& lc = d->terms.front().coeff;
    const ParamScalar c = lc.is_one() ? lt.coeff : lt.coeff / lc;
    const Monomial m = lt.mono / d->lm();
    p = sub_scaled(p, start + 1, c, m, d->terms, 1, order);
    start = 0;
  }
  return r;
}

Terms spoly_terms(const Poly& f, const Poly& g, const BoundOrder& order) {
  const Monomial l = lcm(f.lm(), g.lm());
  const ParamScalar& cf = f.terms.front().coeff;
  const ParamScalar& cg = g.terms.front().coeff;
  Terms a = times_monomial(f.terms, 1, l / f.lm());
  if (!cf.is_one()) {
    const ParamScalar inv = cf.inverse();
    for (auto& t : a) t.coeff *= inv;
  }
  const ParamScalar c = cg.is_one() ? cg : cg.inverse();
  return sub_scaled(a, 0, c, l / g.lm(), g.terms, 1, order);
}

std::vector<Poly> prepare(const std::vector<XPoly>& gens, const BoundOrder& order) {
  std::vector<Poly> out;
  for (const auto& f : gens) {
    if (!same_ring(f.ring(), order.ring())) throw RingMismatch("generator is over a different ring");
    if (!f.is_zero()) out.push_back(make_poly(sorted_terms(f, order)));
  }
  return out;
}

XPoly to_xpoly(const RingPtr& ring, Terms t) { return XPoly::from_terms(ring, std::move(t)); }

// Minimal, monic, tail-reduced, sorted by increasing leading monomial.
std::vector<Poly> interreduce(std::vector<Poly> g, const BoundOrder& order, const Deadline& deadline) {
  for (auto& p : g) make_monic(p.terms);
  std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) { return order.compare(a.lm(), b.lm()) < 0; });
  std::vector<Poly> minimal;
  for (auto& p : g) {
    bool redundant = false;
    for (const auto& q : minimal)
      if (q.lm().divides(p.lm())) redundant = true;
    if (!redundant) minimal.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Poly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    Terms tail(minimal[i].terms.begin() + 1, minimal[i].terms.end());
    Terms reduced = normal_form(std::move(tail), others, order, deadline);
    reduced.insert(reduced.begin(), minimal[i].terms.front());
    minimal[i] = make_poly(std::move(reduced));
  }
  return minimal;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::size_t id;
};

}  // namespace

std::vector<XPoly::Term> sorted_terms(const XPoly& f, const BoundOrder& order) {
  Terms t = f.terms();
  std::sort(t.begin(), t.end(),
            [&](const XPoly::Term& a, const XPoly::Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return t;
}

const XPoly::Term& leading_term(const XPoly& f, const BoundOrder& order) {
  if (f.is_zero()) throw InputError("zero polynomial has no leading term");
  const XPoly::Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

std::string to_string(const XPoly& f, const MonomialOrder& order) {
  BoundOrder bo(order, f.ring());
  Terms t = sorted_terms(f, bo);
  return to_string(f.ring(), t);
}

Division divide(const XPoly& f, const std::vector<XPoly>& g, const MonomialOrder& order) {
  BoundOrder bo(order, f.ring());
  std::vector<Poly> divisors;
  for (const auto& d : g) {
    if (d.is_zero()) throw InputError("division by the zero polynomial");
    if (!same_ring(d.ring(), f.ring())) throw RingMismatch("divisor is over a different ring");
    divisors.push_back(make_poly(sorted_terms(d, bo)));
  }
  std::vector<Terms> q(g.size());
  Terms r;
  Terms p = sorted_terms(f, bo);
  std::size_t start = 0;
  while (start < p.size()) {
    const XPoly::Term& lt = p[start];
    const std::uint64_t tmask = mask_of(lt.mono);
    std::size_t k = 0;
    while (k < divisors.size() &&
           !((divisors[k].mask & ~tmask) == 0 && divisors[k].lm().divides(lt.mono)))
      ++k;
    if (k == divisors.size()) {
      r.push_back(std::move(p[start++]));
      continue;
    }
    const ParamScalar c = lt.coeff / divisors[k].terms.front().coeff;
    const Monomial m = lt.mono / divisors[k].lm();
    q[k].push_back({m, c});
    p = sub_scaled(p, start + 1, c, m, divisors[k].terms, 1, bo);
    start = 0;
  }
  Division out{{}, to_xpoly(f.ring(), std::move(r))};
  for (auto& t : q) out.quotients.push_back(to_xpoly(f.ring(), std::move(t)));
  return out;
}

XPoly remainder(const XPoly& f, const std::vector<XPoly>& g, const MonomialOrder& order) {
  BoundOrder bo(order, f.ring());
  std::vector<Poly> divisors = prepare(g, bo);
  if (divisors.size() != g.size()) throw InputError("division by the zero polynomial");
  std::vector<const Poly*> ptrs;
  for (const auto& d : divisors) ptrs.push_back(&d);
  return to_xpoly(f.ring(), normal_form(sorted_terms(f, bo), ptrs, bo, Deadline()));
}

XPoly s_polynomial(const XPoly& f, const XPoly& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw InputError("S-polynomial of the zero polynomial");
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch("S-polynomial of polynomials over different rings");
  BoundOrder bo(order, f.ring());
  return to_xpoly(f.ring(), spoly_terms(make_poly(sorted_terms(f, bo)), make_poly(sorted_terms(g, bo)), bo));
}

GroebnerBasis buchberger(const std::vector<XPoly>& gens, const MonomialOrder& order,
                         const BuchbergerOptions& options) {
  GroebnerBasis result{order, {}, options.reduce};
  std::vector<XPoly> nonzero;
  for (const auto& f : gens)
    if (!f.is_zero()) nonzero.push_back(f);
  if (nonzero.empty()) {
    result.reduced = true;
    return result;
  }
  const RingPtr ring = nonzero.front().ring();
  BoundOrder bo(order, ring);
  std::vector<Poly> input = prepare(nonzero, bo);
  BuchbergerStats local;
  BuchbergerStats& stats = options.stats ? *options.stats : local;
  const Deadline& deadline = options.deadline;

  std::vector<Poly> basis;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::size_t next_id = 0;

  auto active_ptrs = [&]() {
    std::vector<const Poly*> out;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (active[k]) out.push_back(&basis[k]);
    return out;
  };

  auto update = [&](Poly h) {
    const std::size_t hi = basis.size();
    const Monomial& hm = h.lm();
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (active[k]) c.push_back({k, lcm(hm, basis[k].lm()), hm.coprime(basis[k].lm())});
    std::vector<Cand> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (d[b].lcm.divides(c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(c[a]);
    }
    std::vector<Pair> kept;
    for (auto& p : pairs) {
      const bool drop = hm.divides(p.lcm) && lcm(basis[p.i].lm(), hm) != p.lcm &&
                        lcm(basis[p.j].lm(), hm) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs = std::move(kept);
    for (auto& e : d)
      if (!e.coprime) pairs.push_back({e.g, hi, std::move(e.lcm), next_id++});
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (active[k] && hm.divides(basis[k].lm())) active[k] = false;
    basis.push_back(std::move(h));
    active.push_back(true);
  };

  for (auto& f : input) {
    deadline.check();
    Terms h = normal_form(std::move(f.terms), active_ptrs(), bo, deadline);
    if (h.empty()) continue;
    make_monic(h);
    update(make_poly(std::move(h)));
  }

  while (!pairs.empty()) {
    deadline.check();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const int cmp = bo.compare(pairs[k].lcm, pairs[best].lcm);
      if (cmp < 0 || (cmp == 0 && pairs[k].id < pairs[best].id)) best = k;
    }
    Pair p = std::move(pairs[best]);
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();
    ++stats.pairs_considered;
    Terms s = spoly_terms(basis[p.i], basis[p.j], bo);
    ++stats.pairs_reduced;
    Terms h = normal_form(std::move(s), active_ptrs(), bo, deadline);
    if (h.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    make_monic(h);
    update(make_poly(std::move(h)));
  }

  std::vector<Poly> out;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (active[k]) out.push_back(std::move(basis[k]));
  if (options.reduce) out = interreduce(std::move(out), bo, deadline);
  for (auto& p : out) result.polys.push_back(to_xpoly(ring, std::move(p.terms)));
  return result;
}

GroebnerBasis reduce_basis(const GroebnerBasis& g) {
  GroebnerBasis out{g.order, {}, true};
  std::vector<XPoly> nonzero;
  for (const auto& f : g.polys)
    if (!f.is_zero()) nonzero.push_back(f);
  if (nonzero.empty()) return out;
  const RingPtr ring = nonzero.front().ring();
  BoundOrder bo(g.order, ring);
  for (auto& p : interreduce(prepare(nonzero, bo), bo, Deadline()))
    out.polys.push_back(to_xpoly(ring, std::move(p.terms)));
  return out;
}

bool is_groebner_basis(const std::vector<XPoly>& g, const MonomialOrder& order) {
  std::vector<XPoly> nonzero;
  for (const auto& f : g)
    if (!f.is_zero()) nonzero.push_back(f);
  if (nonzero.empty()) return true;
  BoundOrder bo(order, nonzero.front().ring());
  std::vector<Poly> polys = prepare(nonzero, bo);
  std::vector<const Poly*> ptrs;
  for (const auto& p : polys) ptrs.push_back(&p);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (polys[i].lm().coprime(polys[j].lm())) continue;
      if (!normal_form(spoly_terms(polys[i], polys[j], bo), ptrs, bo, Deadline()).empty()) return false;
    }
  return true;
}

bool ideal_membership(const XPoly& f, const GroebnerBasis& g) {
  if (f.is_zero()) return true;
  if (g.polys.empty()) return false;
  return remainder(f, g.polys, g.order).is_zero();
}

bool ideals_equal(const std::vector<XPoly>& a, const std::vector<XPoly>& b, const MonomialOrder& order) {
  const GroebnerBasis ga = buchberger(a, order);
  for (const auto& f : b)
    if (!ideal_membership(f, ga)) return false;
  const GroebnerBasis gb = buchberger(b, order);
  for (const auto& f : a)
    if (!ideal_membership(f, gb)) return false;
  return true;
}

std::vector<XPoly> elimination(const GroebnerBasis& g, const std::vector<std::string>& keep) {
  const auto& vars = g.order.variables();
  std::set<std::string> kept(keep.begin(), keep.end());
  for (const auto& k : keep)
    if (std::find(vars.begin(), vars.end(), k) == vars.end())
      throw InputError("kept variable '" + k + "' is not a variable of the order");
  std::vector<std::string> eliminated;
  for (const auto& v : vars)
    if (!kept.count(v)) eliminated.push_back(v);
  if (!g.order.eliminates(eliminated))
    throw NotEliminationOrder(g.order.describe() + " is not an elimination order for the requested variables");
  std::vector<XPoly> out;
  for (const auto& f : g.polys) {
    bool uses = false;
    for (const auto& v : eliminated)
      if (auto idx = f.ring()->var_index(v); idx && f.uses_var(*idx)) uses = true;
    if (!uses) out.push_back(f);
  }
  return out;
}

bool is_binomial_reduced(const GroebnerBasis& g) {
  return std::all_of(g.polys.begin(), g.polys.end(), [](const XPoly& f) { return f.size() <= 2; });
}

}  // namespace crn
