#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

/// Binary trees live in 2^{<ω}, Omega trees in ω^{<ω}.
enum class Alphabet { Binary, Omega };

using Symbol = std::uint32_t;

std::string_view to_string(Alphabet alphabet);

/// A finite sequence of symbols. Ordered length-lexicographically, which is
/// the order used for every deterministic output.
class Node {
 public:
  Node() = default;
  explicit Node(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Node(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  std::size_t length() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol back() const { return symbols_.back(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  /// this⌢⟨s⟩
  Node child(Symbol s) const;
  /// this↾n; n larger than the length returns the node unchanged.
  Node prefix(std::size_t n) const;
  /// The node obtained by dropping the first n symbols.
  Node drop(std::size_t n) const;
  /// this ⊑ other
  bool is_prefix_of(const Node& other) const noexcept;
  bool fits(Alphabet alphabet) const noexcept;

  friend bool operator==(const Node&, const Node&) = default;
  friend std::strong_ordering operator<=>(const Node& a, const Node& b);

 private:
  std::vector<Symbol> symbols_;
};

/// s⌢t
Node concat(const Node& s, const Node& t);
bool comparable(const Node& a, const Node& b) noexcept;
/// s∧t, the longest common initial segment.
Node common_prefix(const Node& a, const Node& b);

Node repeat(Symbol s, std::size_t n);

/// Binary nodes print as bitstrings ("" for the empty node), Omega nodes as
/// comma-separated naturals.
std::string to_string(const Node& node, Alphabet alphabet);

/// Accepts bitstrings for Binary, and comma lists for either alphabet.
/// "" and "-" denote the empty node.
Node parse_node(std::string_view text, Alphabet alphabet);

struct NodeHash {
  std::size_t operator()(const Node& n) const noexcept;
};

}  // namespace cantor
