#pragma once

#include <vector>

#include "crn/algebra/param_scalar.hpp"
#include "crn/algebra/xpoly.hpp"

namespace crn {

/// Dense rows x cols matrix over Q(params).
class ParamMatrix {
 public:
  ParamMatrix(std::size_t rows, std::size_t cols, std::size_t nparams);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nparams() const { return nparams_; }

  ParamScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ParamScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t nparams_;
  std::vector<ParamScalar> data_;
};

/// Unique solution of A y = b for square A, by fraction-free row elimination
/// followed by back-substitution over the parameter field.
/// Throws SingularSystem when det(A) vanishes identically.
std::vector<XPoly> solve_linear(const ParamMatrix& a, const std::vector<XPoly>& b);

/// Rank over the parameter field.
std::size_t rank(const ParamMatrix& a);

/// Jacobian d f_i / d param_j of the given functions.
ParamMatrix jacobian(const std::vector<ParamScalar>& fs, std::size_t nparams);

}  // namespace crn
