#pragma once

// Symbolic trees: a tree is a membership rule on nodes, never materialized
// beyond the depth an operation asks for. Optional attachments:
//   - a weight oracle w_t = μ([T]∩N_t)/μ(N_t) (Binary only),
//   - a full-cone predicate certifying that every extension of a node is in
//     the tree (lets level operations count whole cones without enumerating),
//   - a symbol window (position → largest symbol enumerated), required to
//     enumerate Omega trees.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cantor/node.hpp"
#include "cantor/rational.hpp"

namespace cantor {

inline constexpr std::size_t kDefaultExplicitCap = std::size_t{1} << 16;

class SymbolicTree {
 public:
  using Membership = std::function<bool(const Node&)>;
  using WeightOracle = std::function<Rational(const Node&)>;
  using FullCone = std::function<bool(const Node&)>;
  using SymbolWindow = std::function<Symbol(std::size_t position)>;

  SymbolicTree(Alphabet alphabet, Membership membership, bool pruned = true);

  SymbolicTree with_weights(WeightOracle weights) const;
  SymbolicTree without_weights() const;
  SymbolicTree with_full_cone(FullCone full_cone) const;
  SymbolicTree with_symbol_window(SymbolWindow window) const;
  SymbolicTree with_name(std::string name) const;

  Alphabet alphabet() const noexcept { return impl_->alphabet; }
  bool pruned() const noexcept { return impl_->pruned; }
  const std::string& name() const noexcept { return impl_->name; }

  bool contains(const Node& t) const;

  bool has_weights() const noexcept { return static_cast<bool>(impl_->weights); }
  /// Throws InvalidArgument when no oracle is attached.
  Rational weight(const Node& t) const;

  bool has_full_cone() const noexcept { return static_cast<bool>(impl_->full_cone); }
  /// False when no predicate is attached or for Omega trees.
  bool full_cone(const Node& t) const;

  bool has_symbol_window() const noexcept { return static_cast<bool>(impl_->window); }
  /// Largest symbol enumerated at `position`; 1 for Binary trees.
  Symbol max_symbol(std::size_t position) const;

  const Membership& membership() const noexcept { return impl_->membership; }
  const WeightOracle& weight_oracle() const noexcept { return impl_->weights; }
  const FullCone& full_cone_predicate() const noexcept { return impl_->full_cone; }
  const SymbolWindow& symbol_window() const noexcept { return impl_->window; }

  /// In-children of t inside the symbol window, in increasing symbol order.
  std::vector<Node> children(const Node& t) const;

 private:
  struct Impl {
    Alphabet alphabet;
    Membership membership;
    bool pruned;
    WeightOracle weights;
    FullCone full_cone;
    SymbolWindow window;
    std::string name;
  };
  explicit SymbolicTree(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// The longest node within `depth_budget` comparable with every in-node up to
/// that depth. nullopt means unresolved: no split was seen within the budget.
/// Throws EmptyTree when the root is not an in-node.
std::optional<Node> stem(const SymbolicTree& tree, std::size_t depth_budget);

/// σ_s(x) = s⌢x
Node shift_node(const Node& s, const Node& x);

/// The tree of prefixes of s together with s⌢T. Weights transport exactly:
/// w'_{s⌢t} = w_t and w'_u = w_∅·2^{|u|-|s|} for u ⊑ s.
SymbolicTree shift_tree(const Node& s, const SymbolicTree& tree);

/// T_u = {t ∈ T : u ⊑ t or t ⊑ u}. Throws NodeNotInTree.
SymbolicTree restrict_to(const SymbolicTree& tree, const Node& u);

/// T/s = {t : s⌢t ∈ T}. Throws NodeNotInTree.
SymbolicTree quotient(const SymbolicTree& tree, const Node& s);

/// Pointwise intersection of two trees over the same alphabet.
SymbolicTree intersect(const SymbolicTree& a, const SymbolicTree& b);

/// A run of level nodes: every extension of `prefix` by `free_depth` symbols.
/// free_depth > 0 only when the prefix carries a full-cone certificate.
struct LevelEntry {
  Node prefix;
  std::size_t free_depth = 0;

  friend bool operator==(const LevelEntry&, const LevelEntry&) = default;
};

/// A level of a Binary tree in block form, plus its exact cardinality.
struct LevelBlocks {
  std::vector<LevelEntry> entries;
  Count size = 0;
};

/// L_{t,i} = Lev_{|t|+i}(T_t) in block form. `cap` bounds the number of
/// entries (not nodes); exceeding it throws EnumerationCapExceeded.
LevelBlocks level_blocks(const SymbolicTree& tree, const Node& t, std::size_t i,
                         std::size_t cap = kDefaultExplicitCap);

/// L_{t,i} as an explicit node list in length-lexicographic order. Works for
/// Binary trees and for Omega trees with a symbol window.
std::vector<Node> level(const SymbolicTree& tree, const Node& t, std::size_t i,
                        std::size_t cap = kDefaultExplicitCap);

/// |L_{t,i}|, counting full cones without expanding them.
Count level_size(const SymbolicTree& tree, const Node& t, std::size_t i,
                 std::size_t cap = kDefaultExplicitCap);

/// All in-nodes of length ≤ max_depth in length-lexicographic order. Omega
/// trees are enumerated inside `window` if given, otherwise the tree's own.
std::vector<Node> enumerate_nodes(const SymbolicTree& tree, std::size_t max_depth,
                                  std::size_t cap = kDefaultExplicitCap,
                                  const SymbolicTree::SymbolWindow& window = {});

}  // namespace cantor
