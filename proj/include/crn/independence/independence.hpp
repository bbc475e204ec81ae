#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/groebner/groebner.hpp"
#include "crn/reduction/reduction.hpp"

namespace crn {

struct OverlapClasses {
  /// Core reactions absent from the extended network.
  std::vector<std::size_t> r_prime;
  /// Partition of r_prime; each class sorted, classes ordered by first element.
  std::vector<std::vector<std::size_t>> classes;
  /// Intermediate positions grouped by connectivity of intermediate-to-intermediate reactions.
  std::vector<std::vector<std::size_t>> intermediate_components;
  /// For each element of r_prime: indices of the components its paths run through.
  std::vector<std::vector<std::size_t>> reaction_components;
};

/// Two reactions of r_prime overlap when paths realising them run through a
/// common component; classes are the transitive closure.
OverlapClasses overlap_classes(const IntermediateReduction& r);

enum class ClassMethod { singleton, jacobian };

struct ClassVerdict {
  std::vector<std::size_t> reactions;
  ClassMethod method = ClassMethod::singleton;
  std::optional<std::size_t> rank;
  bool independent = false;
  /// Result of the elimination cross-check when it ran.
  std::optional<bool> elimination;
};

struct IndependenceVerdict {
  bool independent = false;
  std::vector<ClassVerdict> classes;
  /// Jacobian rank of all phi functions, when requested.
  std::optional<std::size_t> full_rank;
  std::vector<std::string> notes;
};

struct IndependenceOptions {
  /// Run the elimination-ideal criterion on every class within the cap.
  bool cross_check = false;
  /// Also compute the Jacobian rank for singleton classes.
  bool jacobian_for_singletons = false;
  /// Report the Jacobian rank of the full list of phi functions.
  bool full_jacobian = false;
  std::optional<std::size_t> elimination_cap;
  Deadline deadline;
};

/// Jacobian rank of the functions with respect to all parameters.
std::size_t jacobian_rank(const std::vector<ParamScalar>& fs, std::size_t nparams);

/// Singleton classes pass without computation; larger classes pass when the
/// Jacobian of their phi functions has full row rank. Independent iff every class passes.
IndependenceVerdict check_independence(const IntermediateReduction& r, const IndependenceOptions& options = {});

/// Default 4; overridden by the CRN_ELIM_CAP environment variable.
std::size_t elimination_cap();

/// The functions f_i/g_i are algebraically independent over Q iff
/// <g_i T_i - f_i, 1 - u g_1...g_m> has zero intersection with Q[T].
/// Throws CapExceeded for more than `cap` functions, Timeout on the deadline.
bool independence_elimination_check(const std::vector<ParamScalar>& fs, std::size_t cap = elimination_cap(),
                                    const Deadline& deadline = {});

/// Sets the gate of r from the verdict (verified or refuted).
void record_verdict(IntermediateReduction& r, const IndependenceVerdict& v);

std::string to_string(ClassMethod m);

}  // namespace crn
