#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "crn/algebra/xpoly.hpp"
#include "crn/groebner/order.hpp"

namespace crn {

/// Optional wall-clock limit; expired() polls the clock.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() + budget;
    return d;
  }
  bool expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }
  /// Throws Timeout once the limit has passed.
  void check() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<XPoly> polys;
  bool reduced = false;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

struct BuchbergerOptions {
  Deadline deadline;
  /// Return the reduced basis (otherwise the raw completed set).
  bool reduce = true;
  BuchbergerStats* stats = nullptr;
};

/// Terms of f sorted decreasingly under the order.
std::vector<XPoly::Term> sorted_terms(const XPoly& f, const BoundOrder& order);
const XPoly::Term& leading_term(const XPoly& f, const BoundOrder& order);

/// Canonical text of f with terms listed in decreasing order.
std::string to_string(const XPoly& f, const MonomialOrder& order);

struct Division {
  std::vector<XPoly> quotients;
  XPoly remainder;
};

/// Multivariate division: f = sum q_i g_i + r with no term of r divisible by
/// any LM(g_i). The first divisor in list order whose leading monomial
/// divides the current leading term is used.
Division divide(const XPoly& f, const std::vector<XPoly>& g, const MonomialOrder& order);
XPoly remainder(const XPoly& f, const std::vector<XPoly>& g, const MonomialOrder& order);

XPoly s_polynomial(const XPoly& f, const XPoly& g, const MonomialOrder& order);

/// Buchberger's algorithm with the normal selection strategy (smallest lcm,
/// ties by pair creation), the coprime criterion and Gebauer-Moller pruning.
/// Zero generators are dropped; the zero ideal gives the empty basis.
GroebnerBasis buchberger(const std::vector<XPoly>& gens, const MonomialOrder& order,
                         const BuchbergerOptions& options = {});

/// Minimal, monic, inter-reduced basis sorted by increasing leading monomial.
GroebnerBasis reduce_basis(const GroebnerBasis& g);

/// True iff every S-polynomial reduces to zero (pairs with coprime leading
/// monomials are skipped).
bool is_groebner_basis(const std::vector<XPoly>& g, const MonomialOrder& order);

bool ideal_membership(const XPoly& f, const GroebnerBasis& g);
bool ideals_equal(const std::vector<XPoly>& a, const std::vector<XPoly>& b, const MonomialOrder& order);

/// Elements of g involving only the kept variables. Throws NotEliminationOrder
/// unless the order eliminates the complement of `keep`.
std::vector<XPoly> elimination(const GroebnerBasis& g, const std::vector<std::string>& keep);

/// Every element has at most two terms.
bool is_binomial_reduced(const GroebnerBasis& g);

}  // namespace crn
