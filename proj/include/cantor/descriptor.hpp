#pragma once

// Tree descriptors for the command line. A tree argument is either
// "catalog:NAME" or a path to a descriptor file:
//
//   # comment
//   alphabet binary            (binary | omega)
//   pruned yes                 (yes | no, default yes)
//   rule avoid 0111,10         (binary cones removed; exact weights attached)
//   rule catalog fat-cantor-3
//   rule condition hechler s=2 f=const:1
//   window 4                   (omega only: largest symbol enumerated)
//   weights none               (drop the weight oracle)

#include <istream>
#include <string_view>

#include "cantor/tree.hpp"

namespace cantor {

/// Throws ParseError.
SymbolicTree parse_descriptor(std::istream& in);
/// "catalog:NAME" or a descriptor path.
SymbolicTree load_tree(std::string_view source);
/// The tree of nodes extending none of `avoided`, with exact weights.
SymbolicTree avoid_tree(std::vector<Node> avoided);

}  // namespace cantor
