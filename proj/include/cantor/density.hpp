#pragma once

// Finite certificates for shift density points: the strongly linked route
// (every branch of a condition is a density point of it) and the null-ideal
// route through exact relative measures ρ_n = μ(A∩N_{x↾n})/μ(N_{x↾n}).

#include <optional>
#include <string>
#include <vector>

#include "cantor/catalog.hpp"
#include "cantor/forcing.hpp"

namespace cantor {

enum class VerdictKind { Dense, NotDense, Unknown };

/// The n with n ≥ start and n ≡ residue (mod modulus).
struct NPattern {
  std::size_t modulus = 1;
  std::size_t residue = 0;
  std::size_t start = 0;

  bool contains(std::size_t n) const { return n >= start && n % modulus == residue % modulus; }
};

struct DensityVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::size_t depth = 0;  // n_x for Dense, the examined depth otherwise
  std::optional<ForcingCondition> witness;
  std::optional<NPattern> pattern;
  std::vector<Rational> rho;  // ρ_0 … ρ_horizon when computed
  std::string detail;
};

std::string to_string(VerdictKind kind);
/// One line: "dense n_x=…", "not-dense witness=… n≡r mod m n>=k", "unknown depth=…".
std::string to_string(const DensityVerdict& verdict);

/// Dense(|stem|) when u is in the tree above the stem, NotDense (witnessed by
/// the family's top condition) when u left the tree, Unknown below the stem.
/// Throws NotStronglyLinkedFamily.
DensityVerdict strongly_linked_density(const ForcingCondition& c, const Node& u);

struct TargetSet {
  SymbolicTree tree;
  SetPresentation presentation = SetPresentation::Closed;
  std::string name;
};

/// Catalog sets as density targets. "A-triple-ones" is the open set itself,
/// the complement of [B-triple-ones-complement].
TargetSet catalog_target(std::string_view name);

/// x = prefix ⌢ period ⌢ period ⌢ …; an empty period means zeros.
struct Point {
  Node prefix;
  Node period;

  Node restrict(std::size_t n) const;
  bool all_zero() const;
};

DensityVerdict null_density_test(const TargetSet& target, const Point& x, std::size_t horizon);

}  // namespace cantor
