#include "crn/groebner/order.hpp"

#include <set>

#include "crn/algebra/param_poly.hpp"
#include "crn/errors.hpp"

namespace crn {

namespace {

void check_names(const std::vector<std::string>& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars)
    if (!seen.insert(v).second) throw InvalidOrderMatrix("variable '" + v + "' listed twice in the order");
}

std::size_t column_rank(const OrderMatrix& m, std::size_t n) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::string join(const std::vector<std::string>& v, std::size_t from = 0) {
  std::string s;
  for (std::size_t i = from; i < v.size(); ++i) {
    if (i > from) s += " > ";
    s += v[i];
  }
  return s;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::vector<std::string> vars) {
  check_names(vars);
  MonomialOrder o;
  o.kind_ = Kind::lex;
  const std::size_t n = vars.size();
  o.matrix_.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) o.matrix_[i][i] = 1;
  o.vars_ = std::move(vars);
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::string> vars) {
  check_names(vars);
  MonomialOrder o;
  o.kind_ = Kind::grevlex;
  const std::size_t n = vars.size();
  if (n > 0) {
    o.matrix_.push_back(std::vector<long>(n, 1));
    for (std::size_t j = n; j-- > 1;) {
      std::vector<long> row(n, 0);
      row[j] = -1;
      o.matrix_.push_back(std::move(row));
    }
  }
  o.vars_ = std::move(vars);
  return o;
}

MonomialOrder MonomialOrder::custom(std::vector<std::string> vars, OrderMatrix matrix) {
  check_names(vars);
  const std::size_t n = vars.size();
  for (const auto& row : matrix)
    if (row.size() != n)
      throw InvalidOrderMatrix("order matrix row has " + std::to_string(row.size()) + " entries, expected " +
                               std::to_string(n));
  if (column_rank(matrix, n) != n) throw InvalidOrderMatrix("order matrix does not have full rank");
  for (std::size_t c = 0; c < n; ++c) {
    long first = 0;
    for (const auto& row : matrix)
      if (row[c] != 0) {
        first = row[c];
        break;
      }
    if (first <= 0)
      throw InvalidOrderMatrix("first nonzero entry of the column of '" + vars[c] + "' is not positive");
  }
  MonomialOrder o;
  o.kind_ = Kind::custom;
  o.vars_ = std::move(vars);
  o.matrix_ = std::move(matrix);
  return o;
}

MonomialOrder MonomialOrder::block_extend(const MonomialOrder& inner, std::vector<std::string> leading) {
  std::vector<std::string> vars = leading;
  vars.insert(vars.end(), inner.vars_.begin(), inner.vars_.end());
  check_names(vars);
  const std::size_t m = leading.size();
  const std::size_t n = vars.size();
  MonomialOrder o;
  o.kind_ = Kind::block;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<long> row(n, 0);
    row[i] = 1;
    o.matrix_.push_back(std::move(row));
  }
  for (const auto& r : inner.matrix_) {
    std::vector<long> row(m, 0);
    row.insert(row.end(), r.begin(), r.end());
    o.matrix_.push_back(std::move(row));
  }
  o.vars_ = std::move(vars);
  o.block_ = m;
  o.inner_ = std::make_shared<const MonomialOrder>(inner);
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& row : matrix_) {
    long v = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      v += row[j] * (static_cast<long>(a[j]) - static_cast<long>(b[j]));
    if (v != 0) return v > 0 ? 1 : -1;
  }
  return 0;
}

bool MonomialOrder::eliminates(const std::vector<std::string>& eliminated) const {
  std::vector<bool> elim(vars_.size(), false);
  for (const auto& e : eliminated) {
    auto it = std::find(vars_.begin(), vars_.end(), e);
    if (it == vars_.end()) throw InputError("variable '" + e + "' is not in the order");
    elim[static_cast<std::size_t>(it - vars_.begin())] = true;
  }
  std::vector<bool> covered(vars_.size(), false);
  for (const auto& row : matrix_) {
    bool keeps_zero = true;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!elim[j] && row[j] != 0) keeps_zero = false;
    if (!keeps_zero) break;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) covered[j] = true;
  }
  for (std::size_t j = 0; j < vars_.size(); ++j)
    if (elim[j] && !covered[j]) return false;
  return true;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::lex:
      return "lex(" + join(vars_) + ")";
    case Kind::grevlex:
      return "grevlex(" + join(vars_) + ")";
    case Kind::block: {
      std::vector<std::string> lead(vars_.begin(), vars_.begin() + static_cast<std::ptrdiff_t>(block_));
      return "block(" + join(lead) + " | " + inner_->describe() + ")";
    }
    case Kind::custom:
      break;
  }
  std::string s = "matrix(" + join(vars_) + ";";
  for (const auto& row : matrix_) {
    s += " [";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
    s += "]";
  }
  return s + ")";
}

BoundOrder::BoundOrder(const MonomialOrder& order, const RingPtr& ring) : order_(order), ring_(ring) {
  const auto& vars = order.variables();
  if (vars.size() != ring->nvars())
    throw InputError("order has " + std::to_string(vars.size()) + " variables but the ring has " +
                     std::to_string(ring->nvars()));
  std::vector<std::size_t> perm;
  std::vector<bool> used(ring->nvars(), false);
  for (const auto& v : vars) {
    auto idx = ring->var_index(v);
    if (!idx || used[*idx]) throw InputError("order variable '" + v + "' does not match the ring");
    used[*idx] = true;
    perm.push_back(*idx);
  }
  *this = BoundOrder(order, std::move(perm), ring->nvars());
  ring_ = ring;
}

BoundOrder::BoundOrder(const MonomialOrder& order, std::vector<std::size_t> perm, std::size_t nvars)
    : order_(order), kind_(order.kind()), perm_(std::move(perm)), block_(order.block_size()) {
  if (kind_ == MonomialOrder::Kind::block) {
    std::vector<std::size_t> rest(perm_.begin() + static_cast<std::ptrdiff_t>(block_), perm_.end());
    inner_ = std::shared_ptr<const BoundOrder>(new BoundOrder(*order.inner(), std::move(rest), nvars));
  }
  if (kind_ == MonomialOrder::Kind::custom) {
    for (const auto& row : order.matrix()) {
      std::vector<long> r(nvars, 0);
      for (std::size_t j = 0; j < row.size(); ++j) r[perm_[j]] = row[j];
      columns_.push_back(std::move(r));
    }
  }
}

int BoundOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case MonomialOrder::Kind::lex:
      for (std::size_t v : perm_)
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
      return 0;
    case MonomialOrder::Kind::grevlex: {
      unsigned da = 0;
      unsigned db = 0;
      for (std::size_t v : perm_) {
        da += a[v];
        db += b[v];
      }
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t p = perm_.size(); p-- > 0;) {
        const std::size_t v = perm_[p];
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
      }
      return 0;
    }
    case MonomialOrder::Kind::block:
      for (std::size_t p = 0; p < block_; ++p) {
        const std::size_t v = perm_[p];
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
      }
      return inner_->compare(a, b);
    case MonomialOrder::Kind::custom:
      break;
  }
  for (const auto& row : columns_) {
    long s = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) s += row[j] * (static_cast<long>(a[j]) - static_cast<long>(b[j]));
    if (s != 0) return s > 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace crn
