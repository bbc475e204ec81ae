#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "crn/network/network.hpp"

namespace crn::testing {

inline Complex random_complex(std::mt19937_64& rng, std::size_t nspecies, unsigned max_degree) {
  std::uniform_int_distribution<std::size_t> pick(0, nspecies - 1);
  std::uniform_int_distribution<unsigned> deg(1, max_degree);
  std::vector<std::pair<std::size_t, unsigned>> entries;
  for (unsigned d = deg(rng); d > 0; --d) entries.emplace_back(pick(rng), 1);
  return Complex(std::move(entries));
}

/// Network on `nspecies` species X1.. with up to `max_reactions` random reactions.
inline ReactionNetwork random_network(std::mt19937_64& rng, std::size_t nspecies, std::size_t max_reactions,
                                      const std::string& prefix = "k") {
  std::vector<std::string> species;
  for (std::size_t i = 1; i <= nspecies; ++i) species.push_back("X" + std::to_string(i));
  std::uniform_int_distribution<int> zero(0, 9);
  std::set<std::pair<Complex, Complex>> seen;
  std::vector<ReactionSpec> specs;
  for (std::size_t t = 0; t < 4 * max_reactions && specs.size() < max_reactions; ++t) {
    Complex a = zero(rng) == 0 ? Complex() : random_complex(rng, nspecies, 2);
    Complex b = zero(rng) == 0 ? Complex() : random_complex(rng, nspecies, 2);
    if (a == b || !seen.insert({a, b}).second) continue;
    specs.push_back({a, b, prefix + std::to_string(specs.size() + 1)});
  }
  return ReactionNetwork(species, specs);
}

/// Extended network with core species X1..Xn followed by intermediates
/// Y1..Ym. Every Y_i has an outflow to a non-intermediate complex, so the
/// intermediate subsystem is nonsingular.
inline ReactionNetwork random_extended_network(std::mt19937_64& rng, std::size_t ncore, std::size_t m,
                                               std::size_t ncomplexes) {
  std::vector<std::string> species;
  for (std::size_t i = 1; i <= ncore; ++i) species.push_back("X" + std::to_string(i));
  std::vector<std::string> inter;
  for (std::size_t i = 1; i <= m; ++i) inter.push_back("Y" + std::to_string(i));
  species.insert(species.end(), inter.begin(), inter.end());

  std::vector<Complex> complexes;
  while (complexes.size() < ncomplexes) {
    Complex c = random_complex(rng, ncore, 2);
    if (std::find(complexes.begin(), complexes.end(), c) == complexes.end()) complexes.push_back(c);
  }
  auto y = [&](std::size_t i) { return Complex::single(ncore + i); };

  std::uniform_int_distribution<std::size_t> pick_c(0, ncomplexes - 1);
  std::uniform_int_distribution<std::size_t> pick_y(0, m - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::set<std::pair<Complex, Complex>> seen;
  std::vector<std::pair<Complex, Complex>> edges;
  auto add = [&](const Complex& a, const Complex& b) {
    if (a != b && seen.insert({a, b}).second) edges.emplace_back(a, b);
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (i == 0 || coin(rng)) {
      add(complexes[pick_c(rng)], y(i));
    } else {
      add(y(pick_y(rng) % i), y(i));
    }
    add(y(i), complexes[pick_c(rng)]);
  }
  std::uniform_int_distribution<int> extra(0, static_cast<int>(m + 1));
  for (int e = extra(rng); e > 0; --e) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 0:
        add(complexes[pick_c(rng)], y(pick_y(rng)));
        break;
      case 1:
        add(y(pick_y(rng)), complexes[pick_c(rng)]);
        break;
      case 2:
        add(y(pick_y(rng)), y(pick_y(rng)));
        break;
      default:
        add(complexes[pick_c(rng)], complexes[pick_c(rng)]);
        break;
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<ReactionSpec> specs;
  for (auto& [a, b] : edges) specs.push_back({a, b, "kappa" + std::to_string(specs.size() + 1)});
  return ReactionNetwork(species, specs, inter);
}

}  // namespace crn::testing
