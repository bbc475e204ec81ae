#include "crn/network/network.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "crn/errors.hpp"

namespace crn {

Complex::Complex(std::vector<std::pair<std::size_t, unsigned>> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [s, c] : entries) {
    if (c == 0) continue;
    if (!entries_.empty() && entries_.back().first == s) {
      entries_.back().second += c;
    } else {
      entries_.emplace_back(s, c);
    }
  }
}

unsigned Complex::coefficient(std::size_t species) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(species, 0u));
  return (it != entries_.end() && it->first == species) ? it->second : 0;
}

std::optional<std::size_t> Complex::as_single_species() const {
  if (entries_.size() == 1 && entries_[0].second == 1) return entries_[0].first;
  return std::nullopt;
}

unsigned Complex::degree() const {
  unsigned d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

ReactionNetwork::ReactionNetwork(std::vector<std::string> species, const std::vector<ReactionSpec>& reactions,
                                 std::vector<std::string> declared_intermediates)
    : species_(std::move(species)), declared_intermediates_(std::move(declared_intermediates)) {
  if (species_.empty()) throw InputError("empty network: no species and no reactions");
  std::set<std::string> names;
  for (const auto& s : species_) {
    if (s.empty()) throw InputError("empty species name");
    if (!names.insert(s).second) throw InputError("duplicate species '" + s + "'");
  }
  std::set<std::string> seen_intermediates;
  for (const auto& y : declared_intermediates_) {
    if (!names.count(y)) throw InputError("declared intermediate '" + y + "' is not a species");
    if (!seen_intermediates.insert(y).second) throw InputError("intermediate '" + y + "' declared twice");
  }

  std::set<std::string> rates;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& spec : reactions) {
    for (const Complex* c : {&spec.reactant, &spec.product})
      for (const auto& [s, coeff] : c->entries())
        if (s >= species_.size()) throw InputError("complex refers to an unknown species index");
    if (spec.reactant == spec.product)
      throw InputError("reaction " + complex_to_string(spec.reactant, species_) + " -> " +
                       complex_to_string(spec.product, species_) + " has equal reactant and product");
    if (spec.rate.empty()) throw InputError("reaction without a rate symbol");
    if (!rates.insert(spec.rate).second) throw InputError("duplicate rate symbol '" + spec.rate + "'");
    auto index_of = [&](const Complex& c) {
      auto it = std::find(complexes_.begin(), complexes_.end(), c);
      if (it != complexes_.end()) return static_cast<std::size_t>(it - complexes_.begin());
      complexes_.push_back(c);
      return complexes_.size() - 1;
    };
    const std::size_t r = index_of(spec.reactant);
    const std::size_t p = index_of(spec.product);
    if (!pairs.insert({r, p}).second)
      throw InputError("duplicate reaction " + complex_to_string(spec.reactant, species_) + " -> " +
                       complex_to_string(spec.product, species_));
    reactions_.push_back({r, p, spec.rate});
  }

  std::map<std::string, int> lower_count;
  std::vector<std::string> lower(species_.size());
  for (std::size_t i = 0; i < species_.size(); ++i) {
    for (char ch : species_[i]) lower[i] += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    ++lower_count[lower[i]];
  }
  for (std::size_t i = 0; i < species_.size(); ++i) {
    const bool clash = lower_count[lower[i]] > 1 || rates.count(lower[i]) || names.count(lower[i]);
    variables_.push_back(clash && lower[i] != species_[i] ? species_[i] : lower[i]);
  }
  ring_ = make_ring(rate_symbols(), variables_);
}

std::optional<std::size_t> ReactionNetwork::species_index(const std::string& name) const {
  auto it = std::find(species_.begin(), species_.end(), name);
  if (it == species_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - species_.begin());
}

std::optional<std::size_t> ReactionNetwork::complex_index(const Complex& c) const {
  auto it = std::find(complexes_.begin(), complexes_.end(), c);
  if (it == complexes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - complexes_.begin());
}

std::vector<std::string> ReactionNetwork::rate_symbols() const {
  std::vector<std::string> out;
  out.reserve(reactions_.size());
  for (const auto& r : reactions_) out.push_back(r.rate);
  return out;
}

std::vector<ReactionSpec> ReactionNetwork::reaction_specs() const {
  std::vector<ReactionSpec> out;
  out.reserve(reactions_.size());
  for (const auto& r : reactions_) out.push_back({complexes_[r.reactant], complexes_[r.product], r.rate});
  return out;
}

bool operator==(const ReactionNetwork& a, const ReactionNetwork& b) {
  return a.species_ == b.species_ && a.complexes_ == b.complexes_ && a.reactions_ == b.reactions_ &&
         a.declared_intermediates_ == b.declared_intermediates_;
}

std::string complex_to_string(const Complex& c, const std::vector<std::string>& species) {
  if (c.is_zero()) return "0";
  std::string s;
  for (const auto& [idx, coeff] : c.entries()) {
    if (!s.empty()) s += " + ";
    if (coeff != 1) s += std::to_string(coeff);
    s += species[idx];
  }
  return s;
}

}  // namespace crn
