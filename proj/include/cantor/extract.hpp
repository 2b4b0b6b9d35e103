#pragma once

// Certified extraction of density points: from a weighted tree T and q ∈ (0,1)
// build stages S_0, S_1, … of a perfect subtree S ⊆ T with μ([S]) ≥ q·μ([T])
// all of whose branches are density points of [T].
//
// Stage sets are kept in block form (see LevelEntry): a block stands for all
// extensions of its prefix to the stage height and only ever appears below a
// certified full cone, where every weight is 1.

#include <cstddef>
#include <optional>
#include <vector>

#include "cantor/tree.hpp"

namespace cantor {

/// The least dyadic b on the finest useful grid with a(1−b) < (1−a)b(b−a).
/// The grid exponent starts at 4, rises until the grid has a solution, and
/// keeps rising while that lowers the minimum (at most 32 more steps).
struct Threshold {
  Rational value;
  unsigned grid_exponent = 0;
};
Threshold threshold_search(const Rational& a);
Rational threshold_f(const Rational& a);

/// a(1−b) < (1−a)·b·(b−a)
bool threshold_holds(const Rational& a, const Rational& b);

struct Schedule {
  Rational q;
  Rational delta;  // (1−q)/2

  /// a_i = 1 − δ·2^{−(i+1)}
  Rational a(std::size_t i) const;
  /// Lower bound (1 − δ·2^{−K})² for ∏_{i≥K} a_i².
  Rational tail(std::size_t K) const;
  /// tail(0) = (1−δ)², which exceeds q.
  Rational certified_product() const { return tail(0); }
};

Schedule make_schedule(const Rational& q);

struct RatioResult {
  Rational infimum;        // inf of the satisfied c ∈ (0,1); 1 if none is
  Rational max_satisfied;  // the largest satisfied c (the set is (0, max])
  bool all_c_satisfied = false;
};

/// r_{t,i}: the c ∈ (0,1) with |{u ∈ L_{t,i} : w_u ≥ c}|/|L_{t,i}| ≥ c.
RatioResult large_weight_ratio(const SymbolicTree& tree, const Node& t, std::size_t i,
                               std::size_t cap = kDefaultExplicitCap);

/// s_{t,a,i}: fraction of v ∈ L_{t,i} with w_u ≥ a for every t ⊑ u ⊑ v.
Rational good_fraction(const SymbolicTree& tree, const Node& t, const Rational& a, std::size_t i,
                       std::size_t cap = kDefaultExplicitCap);

struct StageRecord {
  std::size_t index = 0;
  std::size_t height = 0;  // n_i
  std::vector<LevelEntry> nodes;  // S_i
  Rational a;
  std::optional<Rational> a_prime;   // a'_i
  std::optional<Rational> a_second;  // a''_i
  std::optional<Rational> b;
  std::optional<std::size_t> j;
};

struct ExtractionCertificate {
  Rational q;
  Rational delta;
  std::vector<StageRecord> stages;  // S_0 … S_K
  Rational measure_lower_bound;

  std::size_t stage_count() const { return stages.empty() ? 0 : stages.size() - 1; }
};

struct ExtractOptions {
  std::size_t j_cap = 24;
  std::size_t entry_cap = kDefaultExplicitCap;
  std::size_t b1_retries = 8;
};

/// Runs `stages` construction stages. Throws InvalidArgument on bad input and
/// LevelSearchExhausted when no j ≤ j_cap works.
ExtractionCertificate extract(const SymbolicTree& tree, const Rational& q, std::size_t stages,
                              const ExtractOptions& options = {});

}  // namespace cantor
