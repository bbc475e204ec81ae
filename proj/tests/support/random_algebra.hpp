#pragma once

#include <random>

#include "crn/algebra/xpoly.hpp"

namespace crn::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  Monomial m(nvars);
  for (std::size_t i = 0; i < nvars; ++i) m[i] = static_cast<Exponent>(e(rng));
  return m;
}

inline ParamPoly random_param_poly(std::mt19937_64& rng, std::size_t nparams, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  std::vector<ParamPoly::Term> terms;
  for (int i = nt(rng); i > 0; --i) terms.push_back({random_monomial(rng, nparams, max_exp), random_rational(rng)});
  return ParamPoly::from_terms(nparams, std::move(terms));
}

inline ParamScalar random_scalar(std::mt19937_64& rng, std::size_t nparams) {
  ParamPoly den = random_param_poly(rng, nparams, 2, 1);
  while (den.is_zero()) den = random_param_poly(rng, nparams, 2, 1);
  return ParamScalar::fraction(random_param_poly(rng, nparams, 3, 2), den);
}

inline XPoly random_xpoly(std::mt19937_64& rng, const RingPtr& ring, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::vector<XPoly::Term> terms;
  for (int i = nt(rng); i > 0; --i)
    terms.push_back({random_monomial(rng, ring->nvars(), max_exp), random_scalar(rng, ring->nparams())});
  return XPoly::from_terms(ring, std::move(terms));
}

/// Sparse polynomial of total degree <= max_degree whose coefficients are small
/// rationals, occasionally multiplied by one parameter.
inline XPoly random_sparse_xpoly(std::mt19937_64& rng, const RingPtr& ring, int max_terms, int max_degree) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<XPoly::Term> terms;
  for (int i = nt(rng); i > 0; --i) {
    Monomial m(ring->nvars());
    for (int d = deg(rng); d > 0; --d) ++m[var(rng)];
    Rational c = random_rational(rng, 3);
    if (c == 0) c = 1;
    ParamScalar coeff = ParamScalar::constant(ring->nparams(), c);
    if (ring->nparams() > 0 && coin(rng) == 0) {
      std::uniform_int_distribution<std::size_t> par(0, ring->nparams() - 1);
      coeff *= ParamScalar::variable(ring->nparams(), par(rng));
    }
    terms.push_back({m, coeff});
  }
  return XPoly::from_terms(ring, std::move(terms));
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(1, 29);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(num(rng), den(rng));
  for (auto& r : v) r.canonicalize();
  return v;
}

}  // namespace crn::testing
