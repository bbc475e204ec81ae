#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "crn/network/network.hpp"

namespace crn {

struct ParseOptions {
  /// Prefix of generated rate symbols (`<prefix><reaction position>`). When
  /// unset, `kappa` is used if the text declares intermediates, else `k`.
  std::optional<std::string> rate_prefix;
};

/// Parses the network text format:
///   species: X1 X2 ...        (optional; fixes the species order)
///   intermediates: Y1 ...     (optional)
///   A + 2B ->[k1] C           reactions separated by newlines or `;`
///   A <=>[k1][k2] B           reversible pair (forward label first)
///   A -> B -> C               chains split pairwise
///   0                         the empty complex
/// `#` starts a comment. Throws ParseError with line and column.
ReactionNetwork parse_network(std::string_view text, const ParseOptions& options = {});

ReactionNetwork load_network(const std::string& path, const ParseOptions& options = {});

/// Text in the same format that parses back to an equal network.
std::string render_network(const ReactionNetwork& network);

}  // namespace crn
