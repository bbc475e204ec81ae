#include "crn/algebra/param_scalar.hpp"

#include <algorithm>

#include "crn/errors.hpp"

namespace crn {

ParamScalar ParamScalar::constant(std::size_t nvars, const Rational& c) {
  Rational r = c;
  r.canonicalize();
  return ParamScalar(ParamPoly::constant(nvars, Rational(r.get_num())),
                     ParamPoly::constant(nvars, Rational(r.get_den())), 0);
}

ParamScalar ParamScalar::variable(std::size_t nvars, std::size_t var) {
  return ParamScalar(ParamPoly::variable(nvars, var), ParamPoly::constant(nvars, 1), 0);
}

ParamScalar ParamScalar::from_poly(const ParamPoly& p) {
  return finish(p, ParamPoly::constant(p.nvars(), 1));
}

ParamScalar ParamScalar::finish(ParamPoly num, ParamPoly den) {
  const std::size_t n = num.nvars();
  if (num.is_zero()) return ParamScalar(n);
  if (den.is_constant()) {
    // Constant denominator: fold it into the coefficients first.
    num = num.scaled(1 / den.constant_value());
    den = ParamPoly::constant(n, 1);
  }
  const Rational cn = num.content();
  const Rational cd = den.content();
  Rational ratio = cn / cd;
  ratio.canonicalize();
  ParamPoly pn = num.scaled(Rational(ratio.get_num()) / cn);
  ParamPoly pd = den.scaled(Rational(ratio.get_den()) / cd);
  if (pd.leading_coeff() < 0) {
    pn = -pn;
    pd = -pd;
  }
  return ParamScalar(std::move(pn), std::move(pd), 0);
}

ParamScalar ParamScalar::fraction(const ParamPoly& num, const ParamPoly& den) {
  if (num.nvars() != den.nvars()) throw RingMismatch("fraction over different symbol lists");
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return ParamScalar(num.nvars());
  if (den.is_constant()) return finish(num, den);
  ParamPoly g = param_gcd(num, den);
  if (g.is_constant()) return finish(num, den);
  return finish(*divide_exact(num, g), *divide_exact(den, g));
}

ParamScalar ParamScalar::operator-() const { return ParamScalar(-num_, den_, 0); }

ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return ParamScalar::finish(a.num_ + b.num_, a.den_);
    return ParamScalar::fraction(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_constant() && b.den_.is_constant())
    return ParamScalar::finish(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  // Henrici: with g = gcd(b1, b2) only g can share factors with the new numerator.
  ParamPoly g = param_gcd(a.den_, b.den_);
  if (g.is_constant()) {
    ParamPoly num = a.num_ * b.den_ + b.num_ * a.den_;
    return ParamScalar::finish(std::move(num), a.den_ * b.den_);
  }
  ParamPoly ad = *divide_exact(a.den_, g);
  ParamPoly bd = *divide_exact(b.den_, g);
  ParamPoly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return ParamScalar(a.nvars());
  ParamPoly den = ad * b.den_;
  ParamPoly h = param_gcd(num, g);
  if (!h.is_constant()) {
    num = *divide_exact(num, h);
    den = *divide_exact(den, h);
  }
  return ParamScalar::finish(std::move(num), std::move(den));
}

ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return a + (-b); }

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero() || b.is_zero()) return ParamScalar(a.nvars());
  if (a.is_constant()) return b.scaled(a.constant_value());
  if (b.is_constant()) return a.scaled(b.constant_value());
  ParamPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant()) {
    ParamPoly g = param_gcd(an, bd);
    if (!g.is_constant()) {
      an = *divide_exact(an, g);
      bd = *divide_exact(bd, g);
    }
  }
  if (!ad.is_constant()) {
    ParamPoly g = param_gcd(bn, ad);
    if (!g.is_constant()) {
      bn = *divide_exact(bn, g);
      ad = *divide_exact(ad, g);
    }
  }
  return ParamScalar::finish(an * bn, ad * bd);
}

ParamScalar ParamScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return finish(den_, num_);
}

ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) { return a * b.inverse(); }

ParamScalar ParamScalar::scaled(const Rational& c) const {
  if (c == 0) return ParamScalar(nvars());
  return finish(num_.scaled(c), den_);
}

ParamScalar ParamScalar::derivative(std::size_t var) const {
  if (den_.is_constant()) return finish(num_.derivative(var), den_);
  ParamPoly top = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return fraction(top, den_ * den_);
}

Rational ParamScalar::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw DivisionByZero();
  return num_.evaluate(point) / d;
}

bool ParamScalar::has_nonnegative_coefficients() const {
  for (const auto& t : num_.terms())
    if (t.coeff < 0) return false;
  for (const auto& t : den_.terms())
    if (t.coeff < 0) return false;
  return true;
}

namespace {

bool single_factor(const ParamPoly& p) {
  // A bare symbol power or an integer; anything else is parenthesized in a denominator.
  if (!p.is_monomial()) return false;
  const auto& t = p.leading();
  if (t.mono.is_one()) return t.coeff > 0 && t.coeff.get_den() == 1;
  return t.coeff == 1 && t.mono.support_size() == 1;
}

}  // namespace

bool needs_parentheses_as_factor(const ParamScalar& s) {
  if (s.num().size() > 1) return s.den().is_one();
  return false;
}

std::string to_string(const ParamScalar& s, std::span<const std::string> names) {
  if (s.den().is_one()) return to_string(s.num(), names);
  std::string top = to_string(s.num(), names);
  if (s.num().size() > 1) top = "(" + top + ")";
  std::string bottom = to_string(s.den(), names);
  if (!single_factor(s.den())) bottom = "(" + bottom + ")";
  return top + "/" + bottom;
}

}  // namespace crn

namespace crn {

ParamSubstitution::ParamSubstitution(std::vector<ParamScalar> values, std::size_t target_nparams)
    : values_(std::move(values)), target_nparams_(target_nparams) {
  for (const auto& v : values_)
    if (v.nvars() != target_nparams_) throw RingMismatch("substituted value over a different symbol list");
}

const ParamPoly& ParamSubstitution::power(bool numerator, std::size_t var, unsigned e) const {
  auto key = std::make_tuple(numerator, var, e);
  auto it = powers_.find(key);
  if (it != powers_.end()) return it->second;
  ParamPoly p = ParamPoly::constant(target_nparams_, 1);
  if (e > 0) {
    const ParamPoly& base = numerator ? values_[var].num() : values_[var].den();
    p = power(numerator, var, e - 1) * base;
  }
  return powers_.emplace(key, std::move(p)).first->second;
}

ParamPoly ParamSubstitution::cleared(const ParamPoly& p, const std::vector<unsigned>& degrees) const {
  ParamPoly out(target_nparams_);
  for (const auto& t : p.terms()) {
    ParamPoly term = ParamPoly::constant(target_nparams_, t.coeff);
    for (std::size_t j = 0; j < values_.size(); ++j) {
      const unsigned e = t.mono[j];
      if (e > 0) term = term * power(true, j, e);
      if (degrees[j] > e && !values_[j].den().is_one()) term = term * power(false, j, degrees[j] - e);
    }
    out += term;
  }
  return out;
}

ParamScalar ParamSubstitution::operator()(const ParamScalar& s) const {
  if (s.nvars() != values_.size()) throw RingMismatch("substitution over a different symbol list");
  if (s.is_constant()) return ParamScalar::constant(target_nparams_, s.constant_value());
  std::vector<unsigned> degrees(values_.size());
  for (std::size_t j = 0; j < values_.size(); ++j)
    degrees[j] = std::max(s.num().degree_in(j), s.den().degree_in(j));
  return ParamScalar::fraction(cleared(s.num(), degrees), cleared(s.den(), degrees));
}

}  // namespace crn
