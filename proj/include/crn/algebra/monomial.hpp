#pragma once

#include <algorithm>
#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>

namespace crn {

using Exponent = std::uint16_t;

/// Dense exponent vector over a fixed, ordered list of symbols.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 16>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : e_(exps) {}

  static Monomial unit(std::size_t nvars, std::size_t var, Exponent power = 1) {
    Monomial m(nvars);
    m.e_[var] = power;
    return m;
  }

  std::size_t size() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  unsigned degree() const {
    unsigned d = 0;
    for (Exponent x : e_) d += x;
    return d;
  }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
  }

  /// Number of symbols with a positive exponent.
  std::size_t support_size() const {
    return static_cast<std::size_t>(
        std::count_if(e_.begin(), e_.end(), [](Exponent x) { return x != 0; }));
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] != 0 && other.e_[i] != 0) return false;
    return true;
  }

  Monomial& operator*=(const Monomial& other) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = static_cast<Exponent>(e_[i] + other.e_[i]);
    return *this;
  }

  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  /// a / b; requires b | a.
  friend Monomial operator/(Monomial a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] = static_cast<Exponent>(a.e_[i] - b.e_[i]);
    return a;
  }

  friend Monomial lcm(Monomial a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] = std::max(a.e_[i], b.e_[i]);
    return a;
  }

  friend Monomial gcd(Monomial a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] = std::min(a.e_[i], b.e_[i]);
    return a;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Exponent x : e_) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }

 private:
  Storage e_;
};

/// Graded reverse lexicographic comparison with symbols ordered by index
/// (symbol 0 largest). Returns <0, 0, >0.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace crn
