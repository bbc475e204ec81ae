#pragma once

#include <memory>
#include <string>
#include <vector>

#include "crn/algebra/monomial.hpp"
#include "crn/algebra/ring.hpp"

namespace crn {

using OrderMatrix = std::vector<std::vector<long>>;

/// Monomial order given by an integer matrix M over an ordered variable list:
/// x^a > x^b iff the first nonzero entry of M(a - b) is positive.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block, custom };

  /// Unit-vector rows in the given variable order.
  static MonomialOrder lex(std::vector<std::string> vars);
  /// Rows (1,...,1), -e_n, -e_{n-1}, ..., -e_2.
  static MonomialOrder grevlex(std::vector<std::string> vars);
  /// Throws InvalidOrderMatrix unless M has full column rank and the first
  /// nonzero entry of every column is positive.
  static MonomialOrder custom(std::vector<std::string> vars, OrderMatrix matrix);
  /// The block order [[Id_m, 0], [0, Q]] with `leading` as the m new variables.
  static MonomialOrder block_extend(const MonomialOrder& inner, std::vector<std::string> leading);

  Kind kind() const { return kind_; }
  const std::vector<std::string>& variables() const { return vars_; }
  const OrderMatrix& matrix() const { return matrix_; }
  /// For block orders: number of leading identity variables and the inner order.
  std::size_t block_size() const { return block_; }
  const MonomialOrder* inner() const { return inner_.get(); }

  /// Compares exponent vectors indexed by this order's variable list.
  int compare(const Monomial& a, const Monomial& b) const;

  /// True if some prefix of rows vanishes on the kept variables and, on every
  /// eliminated variable, has a nonzero entry; then any monomial involving an
  /// eliminated variable exceeds every monomial in the kept variables alone.
  bool eliminates(const std::vector<std::string>& eliminated) const;

  std::string describe() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.vars_ == b.vars_ && a.matrix_ == b.matrix_;
  }

 private:
  MonomialOrder() = default;

  Kind kind_ = Kind::custom;
  std::vector<std::string> vars_;
  OrderMatrix matrix_;
  std::size_t block_ = 0;
  std::shared_ptr<const MonomialOrder> inner_;
};

/// A monomial order attached to a ring whose variables are a permutation of
/// the order's variables; compares monomials indexed by ring variables.
class BoundOrder {
 public:
  /// Throws InputError unless the ring variables are a permutation of the order's.
  BoundOrder(const MonomialOrder& order, const RingPtr& ring);

  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  const MonomialOrder& order() const { return order_; }
  const RingPtr& ring() const { return ring_; }

 private:
  BoundOrder(const MonomialOrder& order, std::vector<std::size_t> perm, std::size_t nvars);

  MonomialOrder order_;
  RingPtr ring_;
  MonomialOrder::Kind kind_;
  std::vector<std::size_t> perm_;  // order position -> ring variable
  std::size_t block_ = 0;
  std::shared_ptr<const BoundOrder> inner_;
  OrderMatrix columns_;  // matrix rows with columns permuted to ring order
};

}  // namespace crn
