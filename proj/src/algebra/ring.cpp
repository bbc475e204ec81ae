#include "crn/algebra/ring.hpp"

#include "crn/errors.hpp"

namespace crn {

Ring::Ring(std::vector<std::string> params, std::vector<std::string> vars)
    : params_(std::move(params)), vars_(std::move(vars)) {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (!param_lookup_.emplace(params_[i], i).second)
      throw InputError("duplicate parameter symbol '" + params_[i] + "'");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!var_lookup_.emplace(vars_[i], i).second)
      throw InputError("duplicate variable '" + vars_[i] + "'");
    if (param_lookup_.count(vars_[i]))
      throw InputError("symbol '" + vars_[i] + "' is both a parameter and a variable");
  }
}

std::optional<std::size_t> Ring::param_index(const std::string& name) const {
  auto it = param_lookup_.find(name);
  if (it == param_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Ring::var_index(const std::string& name) const {
  auto it = var_lookup_.find(name);
  if (it == var_lookup_.end()) return std::nullopt;
  return it->second;
}

RingPtr make_ring(std::vector<std::string> params, std::vector<std::string> vars) {
  return std::make_shared<const Ring>(std::move(params), std::move(vars));
}

}  // namespace crn
