#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "crn/algebra/param_scalar.hpp"
#include "crn/algebra/ring.hpp"

namespace crn {

/// Polynomial in concentration variables with coefficients in Q(params).
/// Terms are stored in descending grevlex order of the ring's variable list.
class XPoly {
 public:
  struct Term {
    Monomial mono;
    ParamScalar coeff;
  };

  explicit XPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static XPoly constant(RingPtr ring, const ParamScalar& c);
  static XPoly constant(RingPtr ring, const Rational& c);
  static XPoly variable(RingPtr ring, std::size_t var);
  static XPoly monomial(RingPtr ring, const Monomial& m, const ParamScalar& c);
  static XPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  ParamScalar coefficient(const Monomial& m) const;
  bool uses_var(std::size_t var) const;
  unsigned total_degree() const;

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);

  XPoly scaled(const ParamScalar& c) const;
  XPoly times_term(const Monomial& m, const ParamScalar& c) const;

  /// Numeric value at the given variable and parameter values.
  Rational evaluate(std::span<const Rational> vars, std::span<const Rational> params) const;

  /// Re-expresses the polynomial in `target`, matching variables and
  /// parameters by name. Every used symbol must exist in the target.
  XPoly remap(const RingPtr& target) const;

  /// Applies `f` to every coefficient, producing a polynomial in `target`
  /// (variables matched by name). Terms whose image is zero are dropped.
  XPoly map_coefficients(const RingPtr& target,
                         const std::function<ParamScalar(const ParamScalar&)>& f) const;

  friend bool operator==(const XPoly& a, const XPoly& b);
  friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

 private:
  void check_ring(const XPoly& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Replaces the assigned variables of f by polynomials over `target`; other
/// variables pass through (matched by name in `target`). Throws InputError if
/// an assignment names a variable unknown to f's ring.
XPoly substitute(const XPoly& f, const std::map<std::string, XPoly>& assignment, const RingPtr& target);

/// Canonical text in the polynomial's stored (grevlex) term order.
std::string to_string(const XPoly& f);
/// Canonical text of the given terms in the given order (used for basis printing).
std::string to_string(const RingPtr& ring, std::span<const XPoly::Term> terms);
std::string monomial_to_string(const Monomial& m, std::span<const std::string> names);

}  // namespace crn
