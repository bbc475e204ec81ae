#pragma once

#include <map>
#include <span>
#include <tuple>
#include <vector>
#include <string>

#include "crn/algebra/param_poly.hpp"

namespace crn {

/// Element of the rational function field Q(params), kept as a reduced
/// fraction num/den. Canonical form: gcd(num, den) = 1, both have integer
/// coefficients whose contents are coprime, and the leading coefficient of
/// den is positive. Zero is 0/1. Equality is therefore structural.
class ParamScalar {
 public:
  ParamScalar() : num_(0), den_(ParamPoly::constant(0, 1)) {}
  explicit ParamScalar(std::size_t nvars) : num_(nvars), den_(ParamPoly::constant(nvars, 1)) {}

  static ParamScalar constant(std::size_t nvars, const Rational& c);
  static ParamScalar variable(std::size_t nvars, std::size_t var);
  static ParamScalar from_poly(const ParamPoly& p);
  /// Reduces num/den to canonical form; throws DivisionByZero if den = 0.
  static ParamScalar fraction(const ParamPoly& num, const ParamPoly& den);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  ParamScalar operator-() const;
  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  /// Throws DivisionByZero when b = 0.
  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b);
  ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
  ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
  ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }

  ParamScalar inverse() const;
  ParamScalar scaled(const Rational& c) const;

  /// Formal partial derivative, quotient rule, re-reduced.
  ParamScalar derivative(std::size_t var) const;
  /// Throws DivisionByZero if the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;

  /// Every coefficient of num and den is >= 0 (after normalization).
  bool has_nonnegative_coefficients() const;
  /// Sign of the leading coefficient of num (for printing with an extracted minus).
  bool leading_negative() const { return !num_.is_zero() && num_.leading_coeff() < 0; }

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

 private:
  ParamScalar(ParamPoly num, ParamPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  /// num/den already coprime; fixes contents and sign.
  static ParamScalar finish(ParamPoly num, ParamPoly den);

  ParamPoly num_;
  ParamPoly den_;
};

/// Substitutes rational functions (over a target symbol list) for the
/// parameters of Q(params). Powers of the substituted values are cached, so
/// one instance should be reused across many coefficients.
class ParamSubstitution {
 public:
  ParamSubstitution(std::vector<ParamScalar> values, std::size_t target_nparams);

  std::size_t target_nparams() const { return target_nparams_; }
  const std::vector<ParamScalar>& values() const { return values_; }

  /// Throws DivisionByZero if the image of the denominator vanishes.
  ParamScalar operator()(const ParamScalar& s) const;

 private:
  /// num(P) after clearing denominators: sum c_t prod a_j^e b_j^(degrees_j - e).
  ParamPoly cleared(const ParamPoly& p, const std::vector<unsigned>& degrees) const;
  const ParamPoly& power(bool numerator, std::size_t var, unsigned e) const;

  std::vector<ParamScalar> values_;
  std::size_t target_nparams_;
  mutable std::map<std::tuple<bool, std::size_t, unsigned>, ParamPoly> powers_;
};

/// Canonical text, e.g. `kappa1/(kappa2 + kappa3)` or `(k1 - k2)/(2*k3)`.
std::string to_string(const ParamScalar& s, std::span<const std::string> names);
/// Whether to_string output needs parentheses when used as a factor.
bool needs_parentheses_as_factor(const ParamScalar& s);

}  // namespace crn
