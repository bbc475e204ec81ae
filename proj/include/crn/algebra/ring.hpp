#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace crn {

/// Ordered parameter symbols (the coefficient field Q(params)) and ordered
/// concentration variables of a polynomial ring Q(params)[vars].
class Ring {
 public:
  Ring(std::vector<std::string> params, std::vector<std::string> vars);

  std::size_t nparams() const { return params_.size(); }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& params() const { return params_; }
  const std::vector<std::string>& vars() const { return vars_; }

  std::optional<std::size_t> param_index(const std::string& name) const;
  std::optional<std::size_t> var_index(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.params_ == b.params_ && a.vars_ == b.vars_;
  }

 private:
  std::vector<std::string> params_;
  std::vector<std::string> vars_;
  std::unordered_map<std::string, std::size_t> param_lookup_;
  std::unordered_map<std::string, std::size_t> var_lookup_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> params, std::vector<std::string> vars);

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

}  // namespace crn
