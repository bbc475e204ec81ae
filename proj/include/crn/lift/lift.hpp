#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/groebner/groebner.hpp"
#include "crn/reduction/reduction.hpp"

namespace crn {

struct LiftTimings {
  double core_gb_ms = 0;
  double h_ms = 0;
  double reduction_ms = 0;
  std::optional<double> direct_ms;
};

struct LiftOptions {
  Deadline deadline;
  /// Also compute the reduced basis of the extended ideal directly under the block order.
  bool compare_direct = false;
  Deadline direct_deadline;
  /// Assert the Groebner criterion on the lifted basis.
  bool verify = true;
};

struct LiftReport {
  GroebnerBasis core_basis;
  GroebnerBasis lifted_basis;
  /// Block order: intermediate variables first (identity block), then the core order.
  MonomialOrder order_used;
  LiftTimings timings;
  std::optional<GroebnerBasis> direct_basis;
  /// Set when a direct basis was computed: term-for-term equality with the lifted basis.
  std::optional<bool> matches_direct;
  /// Set when the direct computation ran out of time.
  bool direct_timed_out = false;
};

/// The default core order: grevlex in core species order.
MonomialOrder default_core_order(const IntermediateReduction& r);

/// Reduced Groebner basis of the core steady-state ideal.
GroebnerBasis core_groebner_basis(const IntermediateReduction& r, const MonomialOrder& order,
                                  const Deadline& deadline = {});

/// Reduced Groebner basis of the extended ideal from the core basis G:
/// Phi(G) together with y_i - Rem(sum_c mu_{i,c} x^c, Phi(G)).
/// Throws IndependenceNotVerified unless the gate is open.
LiftReport lift_groebner(const IntermediateReduction& r, const MonomialOrder& core_order,
                         const LiftOptions& options = {});

/// Remainder of y_i's steady-state value on division by Phi(G) under the block order.
XPoly lifted_remainder(const IntermediateReduction& r, const std::vector<XPoly>& phi_g,
                       const MonomialOrder& block, std::size_t i);

struct InvariantsResult {
  /// Lex order on the core variables with the eliminated ones first.
  MonomialOrder order;
  std::vector<XPoly> core_invariants;
  std::vector<XPoly> invariants;  // Phi images
};

/// Elements of the extended ideal involving only the kept variables, as Phi
/// of the core elimination ideal. Throws KeepContainsIntermediate,
/// InputError for unknown variables, IndependenceNotVerified.
InvariantsResult invariants(const IntermediateReduction& r, const std::vector<std::string>& keep,
                            const Deadline& deadline = {});

enum class Verdict { binomial, not_binomial };
enum class Shortcut { one_input, full_remainder_check, none };

struct RemainderWitness {
  std::string intermediate;
  std::size_t inputs = 0;
  /// Unset when the one-input shortcut skipped the division.
  std::optional<std::size_t> terms;
  std::optional<XPoly> remainder;
};

struct BinomialityVerdict {
  Verdict verdict = Verdict::not_binomial;
  bool core_binomial = false;
  MonomialOrder order;
  GroebnerBasis core_basis;
  std::vector<RemainderWitness> witnesses;
  /// First remainder with more than one term, when that decides the verdict.
  std::optional<XPoly> offending;
  Shortcut shortcut_used = Shortcut::none;
};

struct BinomialityOptions {
  std::optional<MonomialOrder> core_order;
  /// Compute every remainder even when all intermediates are 1-input.
  bool skip_shortcut = false;
  Deadline deadline;
};

/// The extended ideal is binomial iff the core ideal is and every remainder
/// has at most one term; with only 1-input intermediates the remainders are
/// not needed. Throws IndependenceNotVerified unless the gate is open.
BinomialityVerdict binomiality(const IntermediateReduction& r, const BinomialityOptions& options = {});

std::string to_string(Verdict v);
std::string to_string(Shortcut s);

}  // namespace crn
