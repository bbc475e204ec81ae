#pragma once

#include <vector>

#include "crn/algebra/xpoly.hpp"
#include "crn/network/network.hpp"

namespace crn {

/// F_i = sum over reactions c -> c' of (c'_i - c_i) k x^c, one per species.
std::vector<XPoly> steady_state_polynomials(const ReactionNetwork& network);

struct StoichiometricBasis {
  std::size_t dimension = 0;
  /// Species whose rows of the stoichiometric matrix form a row basis,
  /// chosen greedily in species order.
  std::vector<std::size_t> selected;
  /// combination[i][j]: coefficient of F_{selected[j]} in F_i.
  std::vector<std::vector<Rational>> combination;
};

StoichiometricBasis stoichiometric_basis(const ReactionNetwork& network);

/// All F_i, or only the selected basis rows when `minimal` is set.
std::vector<XPoly> steady_state_ideal(const ReactionNetwork& network, bool minimal);

/// Species occurring in some reaction with equal coefficient on both sides of every reaction.
std::vector<std::size_t> detect_enzymes(const ReactionNetwork& network);

}  // namespace crn
