#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crn/algebra/ring.hpp"

namespace crn {

/// Non-negative integer combination of species, stored sparsely as
/// (species index, coefficient > 0) pairs sorted by species index.
class Complex {
 public:
  Complex() = default;
  /// Entries may be unsorted and repeated; zero coefficients are dropped.
  explicit Complex(std::vector<std::pair<std::size_t, unsigned>> entries);

  static Complex single(std::size_t species, unsigned coeff = 1) { return Complex({{species, coeff}}); }

  const std::vector<std::pair<std::size_t, unsigned>>& entries() const { return entries_; }
  unsigned coefficient(std::size_t species) const;
  bool is_zero() const { return entries_.empty(); }
  /// The complex consists of exactly one copy of one species.
  std::optional<std::size_t> as_single_species() const;
  unsigned degree() const;

  friend auto operator<=>(const Complex&, const Complex&) = default;

 private:
  std::vector<std::pair<std::size_t, unsigned>> entries_;
};

struct Reaction {
  std::size_t reactant;  // index into ReactionNetwork::complexes()
  std::size_t product;
  std::string rate;

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

/// One reaction given by its complexes, used to build networks.
struct ReactionSpec {
  Complex reactant;
  Complex product;
  std::string rate;
};

/// Species, complexes and labeled reactions of a mass-action network. The
/// complexes are exactly the reactants and products, in first-appearance order.
class ReactionNetwork {
 public:
  /// Validates: unique non-empty species names, unique rate symbols, no
  /// duplicate reactions, reactant != product, declared intermediates are species.
  ReactionNetwork(std::vector<std::string> species, const std::vector<ReactionSpec>& reactions,
                  std::vector<std::string> declared_intermediates = {});

  std::size_t num_species() const { return species_.size(); }
  const std::vector<std::string>& species() const { return species_; }
  std::optional<std::size_t> species_index(const std::string& name) const;
  /// Concentration variable name of each species (lower-cased species name).
  const std::vector<std::string>& variables() const { return variables_; }

  const std::vector<Complex>& complexes() const { return complexes_; }
  std::optional<std::size_t> complex_index(const Complex& c) const;
  const std::vector<Reaction>& reactions() const { return reactions_; }
  std::vector<std::string> rate_symbols() const;
  const std::vector<std::string>& declared_intermediates() const { return declared_intermediates_; }

  const Complex& reactant(std::size_t r) const { return complexes_[reactions_[r].reactant]; }
  const Complex& product(std::size_t r) const { return complexes_[reactions_[r].product]; }

  /// Q(rate symbols)[species variables], both in declaration order.
  const RingPtr& ring() const { return ring_; }

  std::vector<ReactionSpec> reaction_specs() const;

  friend bool operator==(const ReactionNetwork& a, const ReactionNetwork& b);

 private:
  std::vector<std::string> species_;
  std::vector<std::string> variables_;
  std::vector<Complex> complexes_;
  std::vector<Reaction> reactions_;
  std::vector<std::string> declared_intermediates_;
  RingPtr ring_;
};

/// Renders a complex like `X1 + 2X2`, or `0` for the empty complex.
std::string complex_to_string(const Complex& c, const std::vector<std::string>& species);

}  // namespace crn
