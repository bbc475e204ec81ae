#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "crn/network/network.hpp"

namespace crn::testing {

/// Mass-action dynamics of a network at fixed positive rate values.
struct MassAction {
  const ReactionNetwork& network;
  std::vector<double> rates;

  Eigen::VectorXd fluxes(const Eigen::VectorXd& x) const {
    Eigen::VectorXd v(static_cast<Eigen::Index>(rates.size()));
    for (std::size_t r = 0; r < rates.size(); ++r) {
      double p = rates[r];
      for (const auto& [s, e] : network.reactant(r).entries()) p *= std::pow(x[static_cast<Eigen::Index>(s)], e);
      v[static_cast<Eigen::Index>(r)] = p;
    }
    return v;
  }

  Eigen::MatrixXd stoichiometry() const {
    const auto n = static_cast<Eigen::Index>(network.num_species());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(rates.size()));
    for (std::size_t r = 0; r < rates.size(); ++r)
      for (Eigen::Index s = 0; s < n; ++s)
        m(s, static_cast<Eigen::Index>(r)) = static_cast<double>(network.product(r).coefficient(static_cast<std::size_t>(s))) -
                                             static_cast<double>(network.reactant(r).coefficient(static_cast<std::size_t>(s)));
    return m;
  }

  Eigen::VectorXd rhs(const Eigen::VectorXd& x) const { return stoichiometry() * fluxes(x); }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
    const auto n = static_cast<Eigen::Index>(network.num_species());
    Eigen::MatrixXd dv = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rates.size()), n);
    for (std::size_t r = 0; r < rates.size(); ++r)
      for (const auto& [s, e] : network.reactant(r).entries()) {
        double p = rates[r] * e * std::pow(x[static_cast<Eigen::Index>(s)], e - 1);
        for (const auto& [t, f] : network.reactant(r).entries())
          if (t != s) p *= std::pow(x[static_cast<Eigen::Index>(t)], f);
        dv(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = p;
      }
    return stoichiometry() * dv;
  }
};

/// Integrates the dynamics from x0 (RK4), then polishes with Newton on the
/// steady-state equations completed by the conservation laws. Returns nullopt
/// when the trajectory diverges or does not settle.
inline std::optional<Eigen::VectorXd> numeric_steady_state(const MassAction& ma, Eigen::VectorXd x) {
  const double dt = 0.01;
  for (int step = 0; step < 200000; ++step) {
    const Eigen::VectorXd k1 = ma.rhs(x);
    if (k1.norm() < 1e-9) break;
    const Eigen::VectorXd k2 = ma.rhs(x + 0.5 * dt * k1);
    const Eigen::VectorXd k3 = ma.rhs(x + 0.5 * dt * k2);
    const Eigen::VectorXd k4 = ma.rhs(x + dt * k3);
    x += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    if (!x.allFinite() || x.norm() > 1e6) return std::nullopt;
  }
  const Eigen::MatrixXd n = ma.stoichiometry();
  const Eigen::MatrixXd w = Eigen::FullPivLU<Eigen::MatrixXd>(n.transpose()).kernel().transpose();
  const bool has_laws = w.rows() > 0 && !(w.rows() == 1 && w.isZero());
  const Eigen::VectorXd totals = has_laws ? Eigen::VectorXd(w * x) : Eigen::VectorXd();
  for (int it = 0; it < 50; ++it) {
    const Eigen::VectorXd f = ma.rhs(x);
    Eigen::VectorXd g(f.size() + (has_laws ? w.rows() : 0));
    Eigen::MatrixXd j(g.size(), x.size());
    g.head(f.size()) = f;
    j.topRows(f.size()) = ma.jacobian(x);
    if (has_laws) {
      g.tail(w.rows()) = w * x - totals;
      j.bottomRows(w.rows()) = w;
    }
    if (g.norm() < 1e-13) break;
    x -= j.colPivHouseholderQr().solve(g);
    if (!x.allFinite()) return std::nullopt;
  }
  if (ma.rhs(x).norm() > 1e-10 || (x.array() < -1e-9).any()) return std::nullopt;
  return x;
}

}  // namespace crn::testing
