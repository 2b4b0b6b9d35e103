#pragma once

// Named trees and sets used throughout the tests, suites and CLI.
//
//   full                      all of 2^{<ω}
//   single-branch             the branch 0^ω (weights 0)
//   single-branch-8           0^ω cut at depth 8 (not pruned)
//   B-triple-ones-complement  complement of A = ⋃_m N_{0^m 111}, weighted
//   A-triple-ones             closure of the same A, weighted
//   fat-cantor, fat-cantor-K  consecutive blocks of sizes 2,3,…,K+1; no block
//                             may be all ones (K = 5 for the plain name)
//   A-odd-ones                f(2n+1) = 1 for all n (null, weights 0)
//   T-powers-plus-one         t(i) = 1 ⇒ i = 2^j+1 (null, weights 0)
//   A-even-values             ω-sequences with only even values
//   A-diagonal                the open set {y : ∃n y(n) = n}, presented by
//                             the tree of its complement
//   T-shift-diag              Hechler tree T_{∅,x} with x(n) = n+1

#include <string>
#include <string_view>
#include <vector>

#include "cantor/tree.hpp"

namespace cantor {

enum class SetPresentation {
  Closed,          // the set is [tree]
  OpenComplement,  // the set is the complement of [tree]
};

struct CatalogEntry {
  std::string name;
  SymbolicTree tree;
  SetPresentation presentation = SetPresentation::Closed;
  std::string description;
};

const std::vector<std::string>& catalog_names();

/// Throws InvalidArgument for unknown names.
CatalogEntry catalog_entry(std::string_view name);
SymbolicTree catalog_tree(std::string_view name);

SymbolicTree fat_cantor_tree(std::size_t blocks);

}  // namespace cantor
