#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "crn/algebra/monomial.hpp"

namespace crn {

using Rational = mpq_class;
using Integer = mpz_class;

/// Sparse multivariate polynomial with rational coefficients in the rate
/// parameters. Terms are kept sorted by descending grevlex (parameter 0
/// largest) with no zero coefficients.
class ParamPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  ParamPoly() = default;
  explicit ParamPoly(std::size_t nvars) : nvars_(nvars) {}

  static ParamPoly constant(std::size_t nvars, const Rational& c);
  static ParamPoly variable(std::size_t nvars, std::size_t var);
  static ParamPoly monomial(const Monomial& m, const Rational& c);
  /// Sorts and merges arbitrary terms into canonical form.
  static ParamPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }

  /// Constant term value; requires is_constant().
  Rational constant_value() const { return is_zero() ? Rational(0) : terms_[0].coeff; }
  const Term& leading() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;
  /// Per-variable flag: does the variable occur?
  std::vector<bool> support() const;
  /// Coefficients with respect to `var`: result[d] is the coefficient of var^d.
  std::vector<ParamPoly> coefficients_in(std::size_t var) const;
  /// Componentwise minimum of all term exponents.
  Monomial monomial_content() const;
  /// Positive rational gcd of the coefficients (0 for the zero polynomial).
  Rational content() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);

  ParamPoly scaled(const Rational& c) const;
  ParamPoly times_monomial(const Monomial& m, const Rational& c) const;
  /// Exact division by a monomial that divides every term.
  ParamPoly divided_by_monomial(const Monomial& m) const;

  ParamPoly derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b);
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

 private:
  void check_compatible(const ParamPoly& o) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Quotient a / b when b divides a exactly, otherwise nullopt.
std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b);

/// Pseudo-remainder of a by b viewed as univariate polynomials in `var`.
ParamPoly pseudo_remainder(const ParamPoly& a, const ParamPoly& b, std::size_t var);

/// Greatest common divisor, normalized to an integer-primitive polynomial with
/// positive leading coefficient. gcd(0, q) is normalized q; gcd(0, 0) = 0.
ParamPoly param_gcd(const ParamPoly& p, const ParamPoly& q);

/// p scaled to integer coefficients with unit content and positive leading coefficient.
ParamPoly normalize_primitive(const ParamPoly& p);

/// Canonical text: terms in descending grevlex, `*` between factors, `^` for powers.
std::string to_string(const ParamPoly& p, std::span<const std::string> names);

}  // namespace crn
