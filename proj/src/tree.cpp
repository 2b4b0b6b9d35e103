#include "cantor/tree.hpp"

#include <algorithm>
#include <utility>

#include "cantor/error.hpp"

namespace cantor {

SymbolicTree::SymbolicTree(Alphabet alphabet, Membership membership, bool pruned)
    : impl_(std::make_shared<const Impl>(Impl{alphabet, std::move(membership), pruned, {}, {}, {}, {}})) {}

SymbolicTree SymbolicTree::with_weights(WeightOracle weights) const {
  if (alphabet() != Alphabet::Binary) throw AlphabetMismatch("weight oracles exist only for binary trees");
  Impl copy = *impl_;
  copy.weights = std::move(weights);
  return SymbolicTree(std::make_shared<const Impl>(std::move(copy)));
}

SymbolicTree SymbolicTree::without_weights() const {
  Impl copy = *impl_;
  copy.weights = nullptr;
  return SymbolicTree(std::make_shared<const Impl>(std::move(copy)));
}

SymbolicTree SymbolicTree::with_full_cone(FullCone full_cone) const {
  Impl copy = *impl_;
  copy.full_cone = std::move(full_cone);
  return SymbolicTree(std::make_shared<const Impl>(std::move(copy)));
}

SymbolicTree SymbolicTree::with_symbol_window(SymbolWindow window) const {
  Impl copy = *impl_;
  copy.window = std::move(window);
  return SymbolicTree(std::make_shared<const Impl>(std::move(copy)));
}

SymbolicTree SymbolicTree::with_name(std::string name) const {
  Impl copy = *impl_;
  copy.name = std::move(name);
  return SymbolicTree(std::make_shared<const Impl>(std::move(copy)));
}

bool SymbolicTree::contains(const Node& t) const {
  if (!t.fits(impl_->alphabet)) return false;
  return impl_->membership(t);
}

Rational SymbolicTree::weight(const Node& t) const {
  if (!impl_->weights) throw InvalidArgument("tree '" + impl_->name + "' has no weight oracle");
  return impl_->weights(t);
}

bool SymbolicTree::full_cone(const Node& t) const {
  if (impl_->alphabet != Alphabet::Binary || !impl_->full_cone) return false;
  return impl_->full_cone(t);
}

Symbol SymbolicTree::max_symbol(std::size_t position) const {
  if (impl_->alphabet == Alphabet::Binary) return 1;
  if (!impl_->window) throw InvalidArgument("omega tree '" + impl_->name + "' has no symbol window");
  return impl_->window(position);
}

namespace {

std::vector<Node> children_in(const SymbolicTree& tree, const Node& t, const SymbolicTree::SymbolWindow& window) {
  Symbol top = 1;
  if (tree.alphabet() == Alphabet::Omega) {
    top = window ? window(t.length()) : tree.max_symbol(t.length());
  }
  std::vector<Node> out;
  for (Symbol s = 0; s <= top; ++s) {
    Node c = t.child(s);
    if (tree.contains(c)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Node> SymbolicTree::children(const Node& t) const { return children_in(*this, t, {}); }

std::optional<Node> stem(const SymbolicTree& tree, std::size_t depth_budget) {
  if (!tree.contains(Node{})) throw EmptyTree();
  Node s;
  while (s.length() < depth_budget) {
    std::vector<Node> kids = tree.children(s);
    if (kids.size() != 1) return s;
    s = std::move(kids.front());
  }
  return std::nullopt;
}

Node shift_node(const Node& s, const Node& x) { return concat(s, x); }

SymbolicTree shift_tree(const Node& s, const SymbolicTree& tree) {
  if (!s.fits(tree.alphabet())) throw AlphabetMismatch("shift node does not fit the tree's alphabet");
  const std::size_t k = s.length();
  SymbolicTree out(
      tree.alphabet(),
      [s, k, inner = tree](const Node& u) {
        if (u.length() <= k) return u.is_prefix_of(s) && inner.contains(Node{});
        return s.is_prefix_of(u) && inner.contains(u.drop(k));
      },
      tree.pruned());
  if (tree.has_weights()) {
    out = out.with_weights([s, k, inner = tree](const Node& u) -> Rational {
      if (u.length() <= k) {
        if (!u.is_prefix_of(s)) return Rational(0);
        return inner.weight(Node{}) * pow2(static_cast<long>(u.length()) - static_cast<long>(k));
      }
      if (!s.is_prefix_of(u)) return Rational(0);
      return inner.weight(u.drop(k));
    });
  }
  if (tree.has_full_cone()) {
    out = out.with_full_cone([s, k, inner = tree](const Node& u) {
      return u.length() >= k && s.is_prefix_of(u) && inner.full_cone(u.drop(k));
    });
  }
  if (tree.has_symbol_window()) {
    out = out.with_symbol_window([s, k, inner = tree](std::size_t pos) {
      return pos < k ? s[pos] : inner.max_symbol(pos - k);
    });
  }
  return out.with_name("shift(" + to_string(s, tree.alphabet()) + "," + tree.name() + ")");
}

SymbolicTree restrict_to(const SymbolicTree& tree, const Node& u) {
  if (!tree.contains(u)) throw NodeNotInTree("restrict: node '" + to_string(u, tree.alphabet()) + "' is not in the tree");
  SymbolicTree out(
      tree.alphabet(), [u, inner = tree](const Node& v) { return comparable(u, v) && inner.contains(v); },
      tree.pruned());
  if (tree.has_weights()) {
    Rational wu = tree.weight(u);
    out = out.with_weights([u, wu, inner = tree](const Node& v) -> Rational {
      if (u.is_prefix_of(v)) return inner.weight(v);
      if (v.is_prefix_of(u)) return wu * pow2(static_cast<long>(v.length()) - static_cast<long>(u.length()));
      return Rational(0);
    });
  }
  if (tree.has_full_cone()) {
    out = out.with_full_cone([u, inner = tree](const Node& v) { return u.is_prefix_of(v) && inner.full_cone(v); });
  }
  if (tree.has_symbol_window()) out = out.with_symbol_window(tree.symbol_window());
  return out.with_name("restrict(" + tree.name() + "," + to_string(u, tree.alphabet()) + ")");
}

SymbolicTree quotient(const SymbolicTree& tree, const Node& s) {
  if (!tree.contains(s)) throw NodeNotInTree("quotient: node '" + to_string(s, tree.alphabet()) + "' is not in the tree");
  SymbolicTree out(
      tree.alphabet(), [s, inner = tree](const Node& t) { return inner.contains(concat(s, t)); }, tree.pruned());
  if (tree.has_weights()) {
    out = out.with_weights([s, inner = tree](const Node& t) { return inner.weight(concat(s, t)); });
  }
  if (tree.has_full_cone()) {
    out = out.with_full_cone([s, inner = tree](const Node& t) { return inner.full_cone(concat(s, t)); });
  }
  if (tree.has_symbol_window()) {
    const std::size_t k = s.length();
    out = out.with_symbol_window([k, inner = tree](std::size_t pos) { return inner.max_symbol(pos + k); });
  }
  return out.with_name("quotient(" + tree.name() + "," + to_string(s, tree.alphabet()) + ")");
}

SymbolicTree intersect(const SymbolicTree& a, const SymbolicTree& b) {
  if (a.alphabet() != b.alphabet()) throw AlphabetMismatch("intersect: trees over different alphabets");
  SymbolicTree out(
      a.alphabet(), [a, b](const Node& t) { return a.contains(t) && b.contains(t); }, false);
  if (a.has_full_cone() && b.has_full_cone()) {
    out = out.with_full_cone([a, b](const Node& t) { return a.full_cone(t) && b.full_cone(t); });
  }
  if (a.alphabet() == Alphabet::Omega && a.has_symbol_window() && b.has_symbol_window()) {
    out = out.with_symbol_window([a, b](std::size_t pos) { return std::max(a.max_symbol(pos), b.max_symbol(pos)); });
  }
  return out.with_name("intersect(" + a.name() + "," + b.name() + ")");
}

LevelBlocks level_blocks(const SymbolicTree& tree, const Node& t, std::size_t i, std::size_t cap) {
  if (tree.alphabet() != Alphabet::Binary) throw AlphabetMismatch("level_blocks requires a binary tree");
  LevelBlocks out;
  if (!tree.contains(t)) return out;
  const std::size_t target = t.length() + i;
  std::vector<Node> stack{t};
  while (!stack.empty()) {
    Node u = std::move(stack.back());
    stack.pop_back();
    if (u.length() == target || tree.full_cone(u)) {
      const std::size_t free = target - u.length();
      out.size += pow2_count(free);
      out.entries.push_back({std::move(u), free});
      if (out.entries.size() > cap) {
        throw EnumerationCapExceeded("level above '" + to_string(t, Alphabet::Binary) + "' at height " +
                                     std::to_string(target) + " exceeds " + std::to_string(cap) + " entries");
      }
      continue;
    }
    for (Symbol s : {Symbol{1}, Symbol{0}}) {
      Node c = u.child(s);
      if (tree.contains(c)) stack.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Node> level(const SymbolicTree& tree, const Node& t, std::size_t i, std::size_t cap) {
  std::vector<Node> out;
  if (!tree.contains(t)) return out;
  const std::size_t target = t.length() + i;
  std::vector<Node> frontier{t};
  for (std::size_t depth = t.length(); depth < target; ++depth) {
    std::vector<Node> next;
    for (const Node& u : frontier) {
      for (Node& c : tree.children(u)) {
        next.push_back(std::move(c));
        if (next.size() > cap) {
          throw EnumerationCapExceeded("explicit level at height " + std::to_string(target) + " exceeds " +
                                       std::to_string(cap) + " nodes");
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

Count level_size(const SymbolicTree& tree, const Node& t, std::size_t i, std::size_t cap) {
  if (tree.alphabet() == Alphabet::Binary) return level_blocks(tree, t, i, cap).size;
  return Count(static_cast<unsigned long>(level(tree, t, i, cap).size()));
}

std::vector<Node> enumerate_nodes(const SymbolicTree& tree, std::size_t max_depth, std::size_t cap,
                                  const SymbolicTree::SymbolWindow& window) {
  std::vector<Node> out;
  if (!tree.contains(Node{})) return out;
  std::vector<Node> frontier{Node{}};
  out.push_back(Node{});
  for (std::size_t depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    for (const Node& u : frontier) {
      for (Node& c : children_in(tree, u, window)) next.push_back(std::move(c));
    }
    if (out.size() + next.size() > cap) {
      throw EnumerationCapExceeded("node enumeration to depth " + std::to_string(max_depth) + " exceeds " +
                                   std::to_string(cap) + " nodes");
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace cantor
