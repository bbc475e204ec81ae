#include "crn/algebra/matrix.hpp"

#include "crn/errors.hpp"

namespace crn {

ParamMatrix::ParamMatrix(std::size_t rows, std::size_t cols, std::size_t nparams)
    : rows_(rows), cols_(cols), nparams_(nparams), data_(rows * cols, ParamScalar(nparams)) {}

namespace {

using PolyRow = std::vector<ParamPoly>;

// Scales a row of fractions by the lcm of its denominators. The returned
// factor is what the row was multiplied by.
PolyRow clear_denominators(const ParamMatrix& a, std::size_t r, ParamPoly& factor) {
  const std::size_t np = a.nparams();
  factor = ParamPoly::constant(np, 1);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const ParamPoly& d = a(r, c).den();
    if (d.is_one()) continue;
    ParamPoly g = param_gcd(factor, d);
    factor = *divide_exact(factor * d, g);
  }
  PolyRow row;
  row.reserve(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const ParamScalar& e = a(r, c);
    if (e.is_zero()) {
      row.emplace_back(np);
    } else {
      row.push_back(e.num() * *divide_exact(factor, e.den()));
    }
  }
  return row;
}

// Divides the row by the gcd of its entries; returns that gcd.
ParamPoly remove_content(PolyRow& row, std::size_t np) {
  ParamPoly g(np);
  for (const auto& p : row) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? normalize_primitive(p) : param_gcd(g, p);
    if (g.is_one()) return g;
  }
  if (g.is_zero() || g.is_one()) return ParamPoly::constant(np, 1);
  for (auto& p : row)
    if (!p.is_zero()) p = *divide_exact(p, g);
  return g;
}

struct Eliminated {
  std::vector<PolyRow> rows;
  std::vector<std::size_t> pivot_col;  // per row, cols() when no pivot
  std::vector<XPoly> rhs;
};

// Row-echelon form by cross-multiplication with row-content removal. The
// right-hand sides, if present, receive the same row operations.
Eliminated eliminate(const ParamMatrix& a, const std::vector<XPoly>* b) {
  const std::size_t np = a.nparams();
  Eliminated e;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    ParamPoly factor;
    e.rows.push_back(clear_denominators(a, r, factor));
    if (b) e.rhs.push_back((*b)[r].scaled(ParamScalar::from_poly(factor)));
  }
  auto divide_rhs = [&](std::size_t r, const ParamPoly& g) {
    if (b && !g.is_one()) e.rhs[r] = e.rhs[r].scaled(ParamScalar::fraction(ParamPoly::constant(np, 1), g));
  };
  for (std::size_t r = 0; r < e.rows.size(); ++r) divide_rhs(r, remove_content(e.rows[r], np));

  std::size_t top = 0;
  e.pivot_col.assign(a.rows(), a.cols());
  for (std::size_t col = 0; col < a.cols() && top < a.rows(); ++col) {
    std::size_t piv = top;
    while (piv < a.rows() && e.rows[piv][col].is_zero()) ++piv;
    if (piv == a.rows()) continue;
    std::swap(e.rows[piv], e.rows[top]);
    if (b) std::swap(e.rhs[piv], e.rhs[top]);
    const ParamPoly p = e.rows[top][col];
    for (std::size_t r = top + 1; r < a.rows(); ++r) {
      const ParamPoly q = e.rows[r][col];
      if (q.is_zero()) continue;
      const ParamPoly g = param_gcd(p, q);
      const ParamPoly ps = *divide_exact(p, g);
      const ParamPoly qs = *divide_exact(q, g);
      for (std::size_t c = col; c < a.cols(); ++c) e.rows[r][c] = ps * e.rows[r][c] - qs * e.rows[top][c];
      if (b) {
        e.rhs[r] = e.rhs[r].scaled(ParamScalar::from_poly(ps)) - e.rhs[top].scaled(ParamScalar::from_poly(qs));
      }
      divide_rhs(r, remove_content(e.rows[r], np));
    }
    e.pivot_col[top] = col;
    ++top;
  }
  return e;
}

}  // namespace

std::vector<XPoly> solve_linear(const ParamMatrix& a, const std::vector<XPoly>& b) {
  if (a.rows() != a.cols() || b.size() != a.rows())
    throw InputError("solve_linear needs a square system with matching right-hand side");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  Eliminated e = eliminate(a, &b);
  for (std::size_t r = 0; r < n; ++r)
    if (e.pivot_col[r] != r) throw SingularSystem();

  const RingPtr& ring = b.front().ring();
  std::vector<XPoly> y(n, XPoly(ring));
  for (std::size_t r = n; r-- > 0;) {
    XPoly acc = e.rhs[r];
    for (std::size_t c = r + 1; c < n; ++c)
      if (!e.rows[r][c].is_zero()) acc -= y[c].scaled(ParamScalar::from_poly(e.rows[r][c]));
    y[r] = acc.scaled(ParamScalar::fraction(ParamPoly::constant(a.nparams(), 1), e.rows[r][r]));
  }
  return y;
}

std::size_t rank(const ParamMatrix& a) {
  Eliminated e = eliminate(a, nullptr);
  std::size_t r = 0;
  for (std::size_t c : e.pivot_col)
    if (c != a.cols()) ++r;
  return r;
}

ParamMatrix jacobian(const std::vector<ParamScalar>& fs, std::size_t nparams) {
  ParamMatrix j(fs.size(), nparams, nparams);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t v = 0; v < nparams; ++v) j(i, v) = fs[i].derivative(v);
  return j;
}

}  // namespace crn
