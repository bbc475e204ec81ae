#include "crn/algebra/param_poly.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>

#include "crn/errors.hpp"

namespace crn {

namespace {

bool term_greater(const ParamPoly::Term& a, const ParamPoly::Term& b) {
  return grevlex_compare(a.mono, b.mono) > 0;
}

// Merge two sorted term lists, b scaled by `sign`.
std::vector<ParamPoly::Term> merge_terms(const std::vector<ParamPoly::Term>& a,
                                         const std::vector<ParamPoly::Term>& b, bool negate_b) {
  std::vector<ParamPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = grevlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = negate_b ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (negate_b) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

ParamPoly ParamPoly::constant(std::size_t nvars, const Rational& c) {
  ParamPoly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

ParamPoly ParamPoly::variable(std::size_t nvars, std::size_t var) {
  ParamPoly p(nvars);
  p.terms_.push_back({Monomial::unit(nvars, var), Rational(1)});
  return p;
}

ParamPoly ParamPoly::monomial(const Monomial& m, const Rational& c) {
  ParamPoly p(m.size());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

ParamPoly ParamPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  ParamPoly p(nvars);
  for (auto& t : terms) {
    assert(t.mono.size() == nvars);
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

void ParamPoly::check_compatible(const ParamPoly& o) const {
  if (nvars_ != o.nvars_) throw RingMismatch("parameter polynomials over different symbol lists");
}

unsigned ParamPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
  return d;
}

unsigned ParamPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::vector<bool> ParamPoly::support() const {
  std::vector<bool> s(nvars_, false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.mono[i]) s[i] = true;
  return s;
}

std::vector<ParamPoly> ParamPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Term u = t;
    u.mono[var] = 0;
    buckets[t.mono[var]].push_back(std::move(u));
  }
  std::vector<ParamPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(nvars_, std::move(b)));
  return out;
}

Monomial ParamPoly::monomial_content() const {
  if (terms_.empty()) return Monomial(nvars_);
  Monomial m = terms_[0].mono;
  for (const auto& t : terms_) m = gcd(m, t.mono);
  return m;
}

Rational ParamPoly::content() const {
  if (terms_.empty()) return Rational(0);
  Integer num = 0, den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  return c;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  check_compatible(o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  check_compatible(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return ParamPoly(a.nvars_);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  std::vector<ParamPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return ParamPoly::from_terms(a.nvars_, std::move(prod));
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  if (c == 0) return ParamPoly(nvars_);
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

ParamPoly ParamPoly::times_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return ParamPoly(nvars_);
  ParamPoly p = *this;
  for (auto& t : p.terms_) {
    t.mono *= m;
    t.coeff *= c;
  }
  return p;
}

ParamPoly ParamPoly::divided_by_monomial(const Monomial& m) const {
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.mono = t.mono / m;
  return p;
}

ParamPoly ParamPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Term u = t;
    u.coeff *= t.mono[var];
    u.mono[var] = static_cast<Exponent>(u.mono[var] - 1);
    out.push_back(std::move(u));
  }
  return from_terms(nvars_, std::move(out));
}

Rational ParamPoly::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (Exponent e = 0; e < t.mono[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return ParamPoly(a.nvars());
  if (b.is_constant()) return a.scaled(1 / b.constant_value());
  if (b.is_monomial()) {
    const auto& lt = b.leading();
    for (const auto& t : a.terms())
      if (!lt.mono.divides(t.mono)) return std::nullopt;
    return a.divided_by_monomial(lt.mono).scaled(1 / lt.coeff);
  }
  // Cheap degree rejection before the division loop.
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (b.degree_in(v) > a.degree_in(v)) return std::nullopt;
  if (b.total_degree() > a.total_degree()) return std::nullopt;

  std::vector<ParamPoly::Term> quotient;
  ParamPoly r = a;
  const auto& lb = b.leading();
  while (!r.is_zero()) {
    const auto& lr = r.leading();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = lr.mono / lb.mono;
    Rational c = lr.coeff / lb.coeff;
    r -= b.times_monomial(m, c);
    quotient.push_back({std::move(m), std::move(c)});
  }
  return ParamPoly::from_terms(a.nvars(), std::move(quotient));
}

ParamPoly pseudo_remainder(const ParamPoly& a, const ParamPoly& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  auto bc = b.coefficients_in(var);
  const ParamPoly& lcb = bc.back();
  ParamPoly r = a;
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(var);
    if (dr < db) break;
    auto rc = r.coefficients_in(var);
    const ParamPoly& lcr = rc.back();
    Monomial shift = Monomial::unit(a.nvars(), var, static_cast<Exponent>(dr - db));
    r = lcb * r - (lcr * b).times_monomial(shift, 1);
  }
  return r;
}

ParamPoly normalize_primitive(const ParamPoly& p) {
  if (p.is_zero()) return p;
  ParamPoly q = p.scaled(1 / p.content());
  if (q.leading_coeff() < 0) q = -q;
  return q;
}

namespace {

// ---- modular degree bounds -------------------------------------------------

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  __uint128_t r = static_cast<__uint128_t>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::optional<std::uint64_t> rational_mod(const Rational& q) {
  std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (d == 0) return std::nullopt;
  std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  return mulmod(n, invmod(d));
}

using UPoly = std::vector<std::uint64_t>;  // dense, index = degree

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::optional<UPoly> image(const ParamPoly& p, std::size_t keep, std::span<const std::uint64_t> point) {
  UPoly out(p.degree_in(keep) + 1, 0);
  for (const auto& t : p.terms()) {
    auto c = rational_mod(t.coeff);
    if (!c) return std::nullopt;
    std::uint64_t v = *c;
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (i != keep && t.mono[i]) v = mulmod(v, powmod(point[i], t.mono[i]));
    out[t.mono[keep]] = addmod(out[t.mono[keep]], v);
  }
  trim(out);
  return out;
}

std::size_t univariate_gcd_degree(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = invmod(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      const std::uint64_t f = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = submod(a[i + shift], mulmod(f, b[i]));
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Upper bound on deg_var(gcd(p, q)). Rigorous whenever the images keep their
// degrees; falls back to min degree otherwise.
unsigned gcd_degree_bound(const ParamPoly& p, const ParamPoly& q, std::size_t var, std::mt19937_64& rng) {
  const unsigned dp = p.degree_in(var);
  const unsigned dq = q.degree_in(var);
  std::vector<std::uint64_t> point(p.nvars());
  for (int attempt = 0; attempt < 3; ++attempt) {
    for (auto& x : point) x = rng() % (kPrime - 2) + 1;
    auto ip = image(p, var, point);
    auto iq = image(q, var, point);
    if (!ip || !iq) continue;
    if (ip->size() != dp + 1 || iq->size() != dq + 1) continue;
    return static_cast<unsigned>(univariate_gcd_degree(*ip, *iq));
  }
  return std::min(dp, dq);
}


// ---- heuristic gcd ---------------------------------------------------------
// Evaluate one variable at a large integer, recurse, and rebuild the gcd from
// the symmetric xi-adic digits; accepted only after trial division.

constexpr std::size_t kHeuristicBits = 400000;

Integer max_norm(const ParamPoly& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) {
    Integer a = abs(t.coeff.get_num());
    if (a > m) m = a;
  }
  return m;
}

Integer integer_content(const ParamPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ParamPoly evaluate_at(const ParamPoly& p, std::size_t var, const Integer& xi) {
  std::vector<Integer> powers{Integer(1)};
  std::vector<ParamPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    while (powers.size() <= t.mono[var]) powers.push_back(powers.back() * xi);
    Monomial m = t.mono;
    m[var] = 0;
    terms.push_back({std::move(m), t.coeff * Rational(powers[t.mono[var]])});
  }
  return ParamPoly::from_terms(p.nvars(), std::move(terms));
}

ParamPoly xi_adic_lift(const ParamPoly& g, std::size_t var, const Integer& xi) {
  const Integer half = xi / 2;
  std::vector<ParamPoly::Term> terms;
  for (const auto& t : g.terms()) {
    Integer c = t.coeff.get_num();
    Exponent e = 0;
    while (c != 0) {
      Integer digit;
      mpz_fdiv_r(digit.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (digit > half) digit -= xi;
      if (digit != 0) {
        Monomial m = t.mono;
        m[var] = e;
        terms.push_back({std::move(m), Rational(digit)});
      }
      c = (c - digit) / xi;
      ++e;
    }
  }
  return ParamPoly::from_terms(g.nvars(), std::move(terms));
}

// Integer-coefficient inputs; returns the full gcd including integer content.
std::optional<ParamPoly> heuristic_gcd(const ParamPoly& a, const ParamPoly& b) {
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) {
    Integer g = gcd(integer_content(a), integer_content(b));
    return ParamPoly::constant(n, Rational(g));
  }
  const auto sa = a.support();
  const auto sb = b.support();
  std::size_t var = n;
  for (std::size_t v = 0; v < n && var == n; ++v)
    if (sa[v] || sb[v]) var = v;
  const unsigned deg = std::max(a.degree_in(var), b.degree_in(var));
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 2;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * (deg + 1) > kHeuristicBits) return std::nullopt;
    auto gamma = heuristic_gcd(evaluate_at(a, var, xi), evaluate_at(b, var, xi));
    if (!gamma) return std::nullopt;
    ParamPoly g = xi_adic_lift(*gamma, var, xi);
    if (!g.is_zero()) {
      g = g.scaled(Rational(1) / Rational(integer_content(g)));
      if (divide_exact(a, g) && divide_exact(b, g)) {
        return g.scaled(Rational(gcd(integer_content(a), integer_content(b))));
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// ---- recursive gcd ---------------------------------------------------------

ParamPoly gcd_rec(const ParamPoly& p, const ParamPoly& q);

ParamPoly content_in(const ParamPoly& p, std::size_t var) {
  auto coeffs = p.coefficients_in(var);
  std::erase_if(coeffs, [](const ParamPoly& c) { return c.is_zero(); });
  std::sort(coeffs.begin(), coeffs.end(),
            [](const ParamPoly& a, const ParamPoly& b) { return a.size() < b.size(); });
  ParamPoly g = normalize_primitive(coeffs.front());
  for (std::size_t i = 1; i < coeffs.size() && !g.is_constant(); ++i) g = gcd_rec(g, coeffs[i]);
  return g;
}

ParamPoly primitive_in(const ParamPoly& p, std::size_t var) {
  ParamPoly c = content_in(p, var);
  if (c.is_constant()) return normalize_primitive(p);
  return normalize_primitive(*divide_exact(p, c));
}

// Both inputs nonzero.
ParamPoly gcd_rec(const ParamPoly& p0, const ParamPoly& q0) {
  const std::size_t n = p0.nvars();
  if (p0.is_constant() || q0.is_constant()) return ParamPoly::constant(n, 1);

  // Split off monomial contents.
  const Monomial mp = p0.monomial_content();
  const Monomial mq = q0.monomial_content();
  const ParamPoly mono_gcd = ParamPoly::monomial(gcd(mp, mq), 1);
  ParamPoly p = normalize_primitive(p0.divided_by_monomial(mp));
  ParamPoly q = normalize_primitive(q0.divided_by_monomial(mq));
  if (p.is_constant() || q.is_constant()) return mono_gcd;
  if (p == q) return mono_gcd * p;

  // A variable present in only one operand cannot occur in the gcd.
  const auto sp = p.support();
  const auto sq = q.support();
  for (std::size_t v = 0; v < n; ++v) {
    if (sp[v] && !sq[v]) return mono_gcd * gcd_rec(content_in(p, v), q);
    if (sq[v] && !sp[v]) return mono_gcd * gcd_rec(p, content_in(q, v));
  }

  std::mt19937_64 rng(0x5eed1234abcdULL);
  std::vector<unsigned> bound(n, 0);
  bool all_zero = true;
  bool p_divides_candidate = true;
  bool q_divides_candidate = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!sp[v]) continue;
    bound[v] = gcd_degree_bound(p, q, v, rng);
    if (bound[v] != 0) all_zero = false;
    if (bound[v] != p.degree_in(v)) p_divides_candidate = false;
    if (bound[v] != q.degree_in(v)) q_divides_candidate = false;
  }
  if (all_zero) return mono_gcd;

  // A variable absent from the gcd: reduce to the contents.
  for (std::size_t v = 0; v < n; ++v) {
    if (sp[v] && bound[v] == 0) {
      ParamPoly cp = content_in(p, v);
      if (cp.is_constant()) return mono_gcd;
      ParamPoly cq = content_in(q, v);
      if (cq.is_constant()) return mono_gcd;
      return mono_gcd * gcd_rec(cp, cq);
    }
  }

  if (p_divides_candidate && divide_exact(q, p)) return mono_gcd * p;
  if (q_divides_candidate && divide_exact(p, q)) return mono_gcd * q;

  if (auto h = heuristic_gcd(p, q)) return normalize_primitive(mono_gcd * *h);

  // Primitive PRS in the variable of least degree.
  std::size_t var = n;
  unsigned best = ~0u;
  for (std::size_t v = 0; v < n; ++v) {
    if (!sp[v]) continue;
    unsigned d = std::max(p.degree_in(v), q.degree_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }
  ParamPoly cp = content_in(p, var);
  ParamPoly cq = content_in(q, var);
  ParamPoly c = gcd_rec(cp, cq);
  ParamPoly a = cp.is_constant() ? p : normalize_primitive(*divide_exact(p, cp));
  ParamPoly b = cq.is_constant() ? q : normalize_primitive(*divide_exact(q, cq));
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (true) {
    ParamPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      b = ParamPoly::constant(n, 1);
      break;
    }
    a = std::move(b);
    b = primitive_in(r, var);
  }
  ParamPoly g = b.is_constant() ? b : primitive_in(b, var);
  return normalize_primitive(mono_gcd * c * g);
}

}  // namespace

ParamPoly param_gcd(const ParamPoly& p, const ParamPoly& q) {
  if (p.nvars() != q.nvars()) throw RingMismatch("gcd of polynomials over different symbol lists");
  if (p.is_zero()) return normalize_primitive(q);
  if (q.is_zero()) return normalize_primitive(p);
  return normalize_primitive(gcd_rec(p, q));
}

std::string to_string(const ParamPoly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (t.mono.is_one() || c != 1) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (!t.mono[i]) continue;
      if (need_star) os << '*';
      os << names[i];
      if (t.mono[i] > 1) os << '^' << t.mono[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace crn
