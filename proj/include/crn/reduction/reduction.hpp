#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/algebra/param_scalar.hpp"
#include "crn/algebra/xpoly.hpp"
#include "crn/network/network.hpp"

namespace crn {

/// Ordered intermediate species of an extended network (species indices).
struct IntermediateSet {
  std::vector<std::size_t> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  /// Position of the species in the set, if it is a member.
  std::optional<std::size_t> position(std::size_t species) const;
};

/// Checks each member individually (sole complex, produced and consumed) and
/// the nonsingularity of the intermediate subsystem. Throws IntermediateError
/// naming the first offending species, or SingularIntermediateSystem.
IntermediateSet validate_intermediates(const ReactionNetwork& network, const std::vector<std::string>& names);

/// Species that individually qualify as intermediates.
std::vector<std::size_t> intermediate_candidates(const ReactionNetwork& network);

/// All candidates, dropping members in ascending species index until the
/// subsystem becomes nonsingular. May be empty.
std::vector<std::string> detect_intermediates(const ReactionNetwork& network);

/// True when the y-coefficient matrix of the subsystem has full rank.
bool intermediate_system_solvable(const ReactionNetwork& network, const IntermediateSet& y);

/// mu[i][j]: coefficient of x^c in the steady-state value of y_i, where c is
/// the j-th non-intermediate complex (extended complex index complexes[j]).
struct MuTable {
  std::vector<std::size_t> complexes;
  std::vector<std::vector<ParamScalar>> values;

  /// Throws InputError if `complex` is not a non-intermediate complex.
  const ParamScalar& at(std::size_t i, std::size_t complex) const;
};

/// Non-intermediate complex indices of the network, ascending.
std::vector<std::size_t> non_intermediate_complexes(const ReactionNetwork& network, const IntermediateSet& y);

/// Solves the intermediate subsystem for y over Q(kappa)[x].
MuTable solve_mu(const ReactionNetwork& network, const IntermediateSet& y);

/// Default 8; overridden by the CRN_TREE_CAP environment variable.
std::size_t tree_cap();

/// mu_{i,c} from rooted spanning trees of the graph on {Y_1..Y_m, *}:
/// the weight of trees rooted at Y_i over the weight of trees rooted at *.
/// Throws CapExceeded when there are more than `cap` intermediates.
ParamScalar mu_spanning_tree(const ReactionNetwork& network, const IntermediateSet& y, std::size_t i,
                             std::size_t complex, std::size_t cap = tree_cap());

/// One core reaction and where it comes from in the extended network.
struct CoreReaction {
  std::size_t reactant;  // extended complex indices
  std::size_t product;
  std::optional<std::size_t> direct;  // extended reaction c -> c', if present
};

enum class IndependenceGate { unverified, verified, assumed, refuted };

struct IntermediateReduction {
  ReactionNetwork extended;
  IntermediateSet intermediates;
  ReactionNetwork core;
  /// Indexed like core.reactions().
  std::vector<CoreReaction> correspondence;
  /// Core reactions without a direct counterpart, ascending.
  std::vector<std::size_t> r_prime;
  MuTable mu;
  /// phi[r] in Q(kappa), indexed like core.reactions().
  std::vector<ParamScalar> phi;
  /// One per intermediate, over extended.ring().
  std::vector<XPoly> h_polys;
  IndependenceGate gate = IndependenceGate::unverified;
  std::vector<std::string> warnings;

  /// Variable names of the intermediates, in set order.
  std::vector<std::string> intermediate_variables() const;
  bool gate_open() const { return gate == IndependenceGate::verified || gate == IndependenceGate::assumed; }
};

/// Non-intermediate complexes reaching Y_i through intermediates only, ascending.
std::vector<std::size_t> inputs_of(const IntermediateReduction& r, std::size_t i);

/// Core network and correspondence; mu, phi and h are left empty. Core rates
/// are k1, k2, ... in (reactant, product) order of extended complex indices
/// (the prefix gains underscores on a clash). With no intermediates the core
/// is the extended network itself.
IntermediateReduction core_network(const ReactionNetwork& network, const IntermediateSet& y);

/// phi for each core reaction: direct rate plus sum of kappa_{Y_i -> c'} mu_{i,c}.
std::vector<ParamScalar> phi_map(const IntermediateReduction& r);

/// H_i = y_i - sum_c mu_{i,c} x^c.
std::vector<XPoly> h_polynomials(const IntermediateReduction& r);

/// Validation, core, mu, phi and h in one step.
IntermediateReduction reduce_network(const ReactionNetwork& network, const std::vector<std::string>& intermediates);

/// Image of a core polynomial under Phi, ignoring the independence gate.
XPoly phi_image(const IntermediateReduction& r, const XPoly& f);
std::vector<XPoly> phi_image(const IntermediateReduction& r, const std::vector<XPoly>& fs);

/// Phi applied to a polynomial over the core ring. Throws
/// IndependenceNotVerified unless the gate is open.
XPoly apply_phi(const IntermediateReduction& r, const XPoly& f);

/// Steady-state value of y_i, sum_c mu_{i,c} x^c, over the extended ring.
XPoly mu_expression(const IntermediateReduction& r, std::size_t i);

struct ReductionCheck {
  bool support = false;
  bool substitution = false;
  std::optional<bool> ideal;  // unset when skipped
  std::vector<std::string> failures;

  bool passed() const { return support && substitution && ideal.value_or(true); }
};

/// Checks that mu is supported exactly on the inputs, that substituting the
/// mu expressions into each non-intermediate F gives Phi of the core F, and
/// (optionally) that the extended ideal is generated by those F and the H.
ReductionCheck verify_reduction(const IntermediateReduction& r, bool check_ideal = true);

}  // namespace crn
