#pragma once

// The nine tree-forcing condition families, their stems, shifts and the
// explicit meets of the strongly linked ones.
//
//   Cohen     C_s                                   (ω^{<ω})
//   Sacks     a perfect binary tree (declared)
//   Miller    a superperfect ω-tree (declared)
//   Hechler   T_{s,f}: t(n) ≥ f(n) for n ≥ |s|      (ω^{<ω})
//   EvDiff    T_{s,f_0..f_m}: t(n) ≠ f_i(n), n ≥ |s| (ω^{<ω})
//   LaverF    t(n) ∈ N for n ≥ |s|                  (ω^{<ω})
//   MathiasF  T_{s,N}: t(n) = 1 ⇒ n ∈ N             (2^{<ω})
//   SilverF   t(n) = f(n) on dom(f), free on N      (2^{<ω})
//   Random    a weighted binary tree with w > 0 above the stem

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cantor/natset.hpp"
#include "cantor/rule.hpp"
#include "cantor/tree.hpp"

namespace cantor {

enum class Family { Cohen, Sacks, Miller, Hechler, EvDiff, LaverF, MathiasF, SilverF, Random };

std::string_view to_string(Family family);

struct CohenCond {
  Node s;
};
struct SacksCond {
  SymbolicTree tree;
};
struct MillerCond {
  SymbolicTree tree;
};
struct HechlerCond {
  Node s;
  Rule f;
};
struct EvDiffCond {
  Node s;
  std::vector<Rule> fs;
};
struct LaverCond {
  Node s;
  NatSet successors;
};
struct MathiasCond {
  Node s;
  NatSet n;
};
struct SilverCond {
  NatSet free;  // ω ∖ dom(f)
  NatSet ones;  // {n ∈ dom(f) : f(n) = 1}
};
struct RandomCond {
  SymbolicTree tree;
};

using ForcingCondition = std::variant<CohenCond, SacksCond, MillerCond, HechlerCond, EvDiffCond, LaverCond,
                                      MathiasCond, SilverCond, RandomCond>;

// Canonical constructors: rules are masked below |s|, Mathias stems are
// extended by the zeros the set N forces. Throw InvalidArgument when the
// stem is not in its own tree.
ForcingCondition make_cohen(Node s);
ForcingCondition make_hechler(Node s, const Rule& f);
ForcingCondition make_evdiff(Node s, const std::vector<Rule>& fs);
ForcingCondition make_laver(Node s, NatSet successors);
ForcingCondition make_mathias(Node s, NatSet n);
ForcingCondition make_silver(NatSet free, NatSet ones);

Family family(const ForcingCondition& c);
Alphabet cond_alphabet(const ForcingCondition& c);
bool is_strongly_linked(const ForcingCondition& c);
bool shift_invariant(const ForcingCondition& c);

/// Throws AlphabetMismatch when t does not fit the family's alphabet.
bool cond_member(const ForcingCondition& c, const Node& t);

/// nullopt when a tree-presented condition does not split within the budget.
std::optional<Node> cond_stem(const ForcingCondition& c, std::size_t depth_budget = 64);

/// The condition as a symbolic tree; ω-families get a default symbol window
/// admitting two in-children per level past the stem.
SymbolicTree cond_tree(const ForcingCondition& c);

/// The member of the family whose tree is σ_s of c's tree. Throws
/// NotShiftInvariant for a fixed-set Mathias or Silver condition.
ForcingCondition cond_shift(const Node& s, const ForcingCondition& c);

/// The condition T_u, presented in the same family.
ForcingCondition cond_restrict(const ForcingCondition& c, const Node& u);

/// The member of the family with empty stem and the largest tree.
ForcingCondition top_condition(Family family);

struct MeetResult {
  std::optional<ForcingCondition> meet;
  Node witness;  // when incompatible: a node of exactly one of the two trees
};

/// Orients the pair by stem length and returns the explicit common extension,
/// or a witness of incompatibility. Throws NotStronglyLinkedFamily.
MeetResult strongly_linked_meet(const ForcingCondition& c1, const ForcingCondition& c2);

/// The window max(w1, w2) used when comparing two ω-conditions, widened past
/// the stems so that same-family intersections keep two successors.
SymbolicTree::SymbolWindow joint_window(const ForcingCondition& c1, const ForcingCondition& c2);

/// Whether the two trees share a node of length `depth`.
bool compatible_bruteforce(const ForcingCondition& c1, const ForcingCondition& c2, std::size_t depth,
                           std::size_t cap = kDefaultExplicitCap);

}  // namespace cantor
