#pragma once

// Independent brute-force oracles. Nothing here calls the level machinery:
// trees are queried only through contains().

#include <cstdint>
#include <vector>

#include "cantor/rational.hpp"
#include "cantor/tree.hpp"

namespace oracle {

using cantor::Node;
using cantor::Rational;
using cantor::Symbol;

/// All binary strings of length n extending t.
inline std::vector<Node> binary_extensions(const Node& t, std::size_t n) {
  std::vector<Node> out;
  if (n < t.length()) return out;
  const std::size_t free = n - t.length();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free); ++bits) {
    std::vector<Symbol> s = t.symbols();
    for (std::size_t k = 0; k < free; ++k) s.push_back(static_cast<Symbol>((bits >> (free - 1 - k)) & 1));
    out.emplace_back(std::move(s));
  }
  return out;
}

/// |{u ∈ T : |u| = n, t ⊑ u}|
inline std::size_t count_extensions(const cantor::SymbolicTree& tree, const Node& t, std::size_t n) {
  std::size_t c = 0;
  for (const Node& u : binary_extensions(t, n)) c += tree.contains(u) ? 1 : 0;
  return c;
}

/// |ext_n(t)| / 2^{n−|t|}
inline Rational count_ratio(const cantor::SymbolicTree& tree, const Node& t, std::size_t n) {
  return Rational(count_extensions(tree, t, n)) / Rational(cantor::pow2_count(n - t.length()));
}

/// a(1−b) < (1−a)b(b−a), written out again.
inline bool threshold(const Rational& a, const Rational& b) {
  const Rational lhs = a * (1 - b);
  const Rational rhs = (1 - a) * b * (b - a);
  return lhs < rhs;
}

}  // namespace oracle
