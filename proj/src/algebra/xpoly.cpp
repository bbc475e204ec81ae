#include "crn/algebra/xpoly.hpp"

#include <algorithm>
#include <sstream>

#include "crn/errors.hpp"

namespace crn {

namespace {

bool term_greater(const XPoly::Term& a, const XPoly::Term& b) { return grevlex_compare(a.mono, b.mono) > 0; }

std::vector<XPoly::Term> merge(const std::vector<XPoly::Term>& a, const std::vector<XPoly::Term>& b,
                               bool negate_b) {
  std::vector<XPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = grevlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(negate_b ? XPoly::Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      ParamScalar s = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(negate_b ? XPoly::Term{b[j].mono, -b[j].coeff} : b[j]);
  return out;
}

}  // namespace

XPoly XPoly::constant(RingPtr ring, const ParamScalar& c) {
  XPoly p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

XPoly XPoly::constant(RingPtr ring, const Rational& c) {
  const std::size_t np = ring->nparams();
  return constant(std::move(ring), ParamScalar::constant(np, c));
}

XPoly XPoly::variable(RingPtr ring, std::size_t var) {
  XPoly p(ring);
  p.terms_.push_back({Monomial::unit(ring->nvars(), var), ParamScalar::constant(ring->nparams(), 1)});
  return p;
}

XPoly XPoly::monomial(RingPtr ring, const Monomial& m, const ParamScalar& c) {
  XPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

XPoly XPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  XPoly p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

void XPoly::check_ring(const XPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch("polynomials over different variable lists");
}

ParamScalar XPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return ParamScalar(ring_->nparams());
}

bool XPoly::uses_var(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

unsigned XPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

XPoly XPoly::operator-() const {
  XPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  check_ring(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  check_ring(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return XPoly(a.ring_);
  std::vector<XPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return XPoly::from_terms(a.ring_, std::move(prod));
}

XPoly XPoly::scaled(const ParamScalar& c) const {
  if (c.is_zero()) return XPoly(ring_);
  XPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

XPoly XPoly::times_term(const Monomial& m, const ParamScalar& c) const {
  if (c.is_zero()) return XPoly(ring_);
  XPoly p = *this;
  for (auto& t : p.terms_) {
    t.mono *= m;
    t.coeff *= c;
  }
  return p;
}

Rational XPoly::evaluate(std::span<const Rational> vars, std::span<const Rational> params) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff.evaluate(params);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      for (Exponent e = 0; e < t.mono[i]; ++e) v *= vars[i];
    sum += v;
  }
  return sum;
}

namespace {

std::vector<std::size_t> var_mapping(const Ring& from, const Ring& to, const std::vector<bool>& used) {
  std::vector<std::size_t> map(from.nvars(), to.nvars());
  for (std::size_t i = 0; i < from.nvars(); ++i) {
    auto j = to.var_index(from.vars()[i]);
    if (j) {
      map[i] = *j;
    } else if (used[i]) {
      throw RingMismatch("variable '" + from.vars()[i] + "' does not exist in the target ring");
    }
  }
  return map;
}

ParamPoly remap_params(const ParamPoly& p, const std::vector<std::size_t>& map, std::size_t n) {
  std::vector<ParamPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(n);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) m[map[i]] = t.mono[i];
    terms.push_back({std::move(m), t.coeff});
  }
  return ParamPoly::from_terms(n, std::move(terms));
}

}  // namespace

XPoly XPoly::map_coefficients(const RingPtr& target,
                              const std::function<ParamScalar(const ParamScalar&)>& f) const {
  std::vector<bool> used(ring_->nvars(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) used[i] = true;
  const auto vmap = var_mapping(*ring_, *target, used);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) m[vmap[i]] = t.mono[i];
    out.push_back({std::move(m), f(t.coeff)});
  }
  return from_terms(target, std::move(out));
}

XPoly XPoly::remap(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    XPoly p = *this;
    p.ring_ = target;
    return p;
  }
  std::vector<std::size_t> pmap(ring_->nparams());
  for (std::size_t i = 0; i < ring_->nparams(); ++i) {
    auto j = target->param_index(ring_->params()[i]);
    pmap[i] = j ? *j : target->nparams();
  }
  const std::size_t np = target->nparams();
  return map_coefficients(target, [&](const ParamScalar& c) {
    for (const auto* poly : {&c.num(), &c.den()})
      for (const auto& t : poly->terms())
        for (std::size_t i = 0; i < t.mono.size(); ++i)
          if (t.mono[i] && pmap[i] == np)
            throw RingMismatch("parameter '" + ring_->params()[i] + "' does not exist in the target ring");
    return ParamScalar::fraction(remap_params(c.num(), pmap, np), remap_params(c.den(), pmap, np));
  });
}

bool operator==(const XPoly& a, const XPoly& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

XPoly substitute(const XPoly& f, const std::map<std::string, XPoly>& assignment, const RingPtr& target) {
  const Ring& src = *f.ring();
  std::vector<const XPoly*> image(src.nvars(), nullptr);
  for (const auto& [name, poly] : assignment) {
    auto idx = src.var_index(name);
    if (!idx) throw InputError("substitution names unknown variable '" + name + "'");
    if (!same_ring(poly.ring(), target)) throw RingMismatch("substituted expression is not over the target ring");
    image[*idx] = &poly;
  }
  std::vector<std::size_t> pass(src.nvars(), target->nvars());
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    if (image[i]) continue;
    auto j = target->var_index(src.vars()[i]);
    if (j) pass[i] = *j;
  }
  if (!same_ring(f.ring(), target) && src.params() != target->params())
    throw RingMismatch("substitution must keep the parameter list");

  // Cache powers of the substituted polynomials.
  std::vector<std::vector<XPoly>> powers(src.nvars());
  auto power = [&](std::size_t var, Exponent e) -> const XPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(XPoly::constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * *image[var]);
    return cache[e];
  };

  XPoly result(target);
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < src.nvars(); ++i) {
      if (!t.mono[i] || image[i]) continue;
      if (pass[i] == target->nvars())
        throw RingMismatch("variable '" + src.vars()[i] + "' does not exist in the target ring");
      m[pass[i]] = t.mono[i];
    }
    XPoly term = XPoly::monomial(target, m, t.coeff);
    for (std::size_t i = 0; i < src.nvars(); ++i)
      if (t.mono[i] && image[i]) term = term * power(i, t.mono[i]);
    result += term;
  }
  return result;
}

std::string monomial_to_string(const Monomial& m, std::span<const std::string> names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const RingPtr& ring, std::span<const XPoly::Term> terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = t.coeff.leading_negative();
    const ParamScalar c = negative ? -t.coeff : t.coeff;
    const bool leading = first;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      std::string s = to_string(c, ring->params());
      const bool wrap = (negative || !leading) && needs_parentheses_as_factor(c);
      os << (wrap ? "(" + s + ")" : s);
      continue;
    }
    if (!c.is_one()) {
      std::string s = to_string(c, ring->params());
      if (needs_parentheses_as_factor(c)) s = "(" + s + ")";
      os << s << '*';
    }
    os << monomial_to_string(t.mono, ring->vars());
  }
  return os.str();
}

std::string to_string(const XPoly& f) { return to_string(f.ring(), f.terms()); }

}  // namespace crn
