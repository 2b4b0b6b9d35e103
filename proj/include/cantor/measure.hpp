#pragma once

// Exact Lebesgue measure on Cantor space: cylinder measures, relative level
// sizes w_{t,i} = |L_{t,i}|/2^i, and enclosures of w_t = μ([T]∩N_t)/μ(N_t).

#include <cstddef>
#include <optional>
#include <string>

#include "cantor/tree.hpp"

namespace cantor {

/// μ(N_t) = 2^{-|t|}
Rational basic_measure(const Node& t);

/// w_{t,i}. Zero when t is not an in-node.
Rational relative_level_size(const SymbolicTree& tree, const Node& t, std::size_t i,
                             std::size_t cap = kDefaultExplicitCap);

struct WeightReport {
  bool ok = true;
  std::size_t nodes_checked = 0;
  std::optional<Node> node;  // first violating node
  std::string violation;
};

/// Checks w_t = (w_{t0}+w_{t1})/2 and w_t ≤ w_{t,i} ≤ w_{t,i-1} for every
/// in-node of length < depth and every i with |t|+i ≤ depth.
WeightReport weight_consistency_check(const SymbolicTree& tree, std::size_t depth,
                                      std::size_t cap = kDefaultExplicitCap);

struct MeasureInterval {
  Rational lower;
  Rational upper;
};

/// Encloses w_t: upper = w_{t,depth}; lower = the oracle value when present,
/// otherwise the relative mass of certified full cones on that level.
MeasureInterval measure_interval(const SymbolicTree& tree, const Node& t, std::size_t depth,
                                 std::size_t cap = kDefaultExplicitCap);

/// Σ w_u·2^{-|u|} over a block-form node set; a block contributes 2^{-|prefix|}.
Rational block_mass(const SymbolicTree& tree, const std::vector<LevelEntry>& entries);

}  // namespace cantor
