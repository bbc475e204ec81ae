#include "crn/network/steady_state.hpp"

#include <algorithm>

namespace crn {

std::vector<XPoly> steady_state_polynomials(const ReactionNetwork& network) {
  const RingPtr& ring = network.ring();
  const std::size_t n = network.num_species();
  std::vector<std::vector<XPoly::Term>> terms(n);
  for (std::size_t r = 0; r < network.reactions().size(); ++r) {
    const Complex& c = network.reactant(r);
    const Complex& cp = network.product(r);
    Monomial m(n);
    for (const auto& [s, e] : c.entries()) m[s] = static_cast<Exponent>(e);
    const ParamScalar k = ParamScalar::variable(ring->nparams(), r);
    for (std::size_t i = 0; i < n; ++i) {
      const int net = static_cast<int>(cp.coefficient(i)) - static_cast<int>(c.coefficient(i));
      if (net != 0) terms[i].push_back({m, k.scaled(Rational(net))});
    }
  }
  std::vector<XPoly> out;
  out.reserve(n);
  for (auto& t : terms) out.push_back(XPoly::from_terms(ring, std::move(t)));
  return out;
}

StoichiometricBasis stoichiometric_basis(const ReactionNetwork& network) {
  const std::size_t n = network.num_species();
  const std::size_t nr = network.reactions().size();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(nr));
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t i = 0; i < n; ++i)
      rows[i][r] = Rational(static_cast<int>(network.product(r).coefficient(i)) -
                            static_cast<int>(network.reactant(r).coefficient(i)));

  // Echelon rows with pivot 1, each expressed through the selected original rows.
  struct Echelon {
    std::vector<Rational> row;
    std::size_t pivot;
    std::vector<Rational> via;  // indexed by position in `selected`
  };
  std::vector<Echelon> echelon;
  StoichiometricBasis basis;

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> v = rows[i];
    std::vector<Rational> lambda(echelon.size());
    for (std::size_t j = 0; j < echelon.size(); ++j) {
      const Rational f = v[echelon[j].pivot];
      if (f == 0) continue;
      lambda[j] = f;
      for (std::size_t c = 0; c < nr; ++c) v[c] -= f * echelon[j].row[c];
    }
    std::size_t pivot = nr;
    for (std::size_t c = 0; c < nr && pivot == nr; ++c)
      if (v[c] != 0) pivot = c;
    if (pivot == nr) continue;
    const std::size_t slot = basis.selected.size();
    basis.selected.push_back(i);
    for (auto& e : echelon) e.via.resize(slot + 1);
    std::vector<Rational> via(slot + 1);
    via[slot] = 1;
    for (std::size_t j = 0; j < echelon.size(); ++j)
      for (std::size_t k = 0; k < slot; ++k) via[k] -= lambda[j] * echelon[j].via[k];
    const Rational inv = 1 / v[pivot];
    for (auto& x : v) x *= inv;
    for (auto& x : via) x *= inv;
    // Eliminate the new pivot from existing rows to keep the form reduced.
    for (auto& e : echelon) {
      const Rational f = e.row[pivot];
      if (f == 0) continue;
      for (std::size_t c = 0; c < nr; ++c) e.row[c] -= f * v[c];
      for (std::size_t k = 0; k <= slot; ++k) e.via[k] -= f * via[k];
    }
    echelon.push_back({std::move(v), pivot, std::move(via)});
  }

  basis.dimension = basis.selected.size();
  const std::size_t s = basis.dimension;
  basis.combination.assign(n, std::vector<Rational>(s));
  for (std::size_t k = 0; k < s; ++k) basis.combination[basis.selected[k]][k] = 1;
  // Non-selected rows: recompute against the final reduced echelon form.
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(basis.selected.begin(), basis.selected.end(), i) != basis.selected.end()) continue;
    for (const auto& e : echelon) {
      const Rational f = rows[i][e.pivot];
      if (f == 0) continue;
      for (std::size_t k = 0; k < s; ++k) basis.combination[i][k] += f * e.via[k];
    }
  }
  return basis;
}

std::vector<XPoly> steady_state_ideal(const ReactionNetwork& network, bool minimal) {
  std::vector<XPoly> f = steady_state_polynomials(network);
  if (!minimal) return f;
  std::vector<XPoly> out;
  for (std::size_t i : stoichiometric_basis(network).selected) out.push_back(f[i]);
  return out;
}

std::vector<std::size_t> detect_enzymes(const ReactionNetwork& network) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < network.num_species(); ++i) {
    bool occurs = false;
    bool balanced = true;
    for (std::size_t r = 0; r < network.reactions().size() && balanced; ++r) {
      const unsigned a = network.reactant(r).coefficient(i);
      const unsigned b = network.product(r).coefficient(i);
      if (a || b) occurs = true;
      if (a != b) balanced = false;
    }
    if (occurs && balanced) out.push_back(i);
  }
  return out;
}

}  // namespace crn
