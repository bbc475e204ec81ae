#pragma once

#include <string>

#include "crn/network/parser.hpp"

namespace crn::testing {

inline std::string corpus_path(const std::string& name) { return std::string(CRN_NETWORKS_DIR) + "/" + name; }

inline ReactionNetwork corpus(const std::string& name) { return load_network(corpus_path(name)); }

}  // namespace crn::testing
