#include "cantor/measure.hpp"

#include "cantor/error.hpp"

namespace cantor {

Rational basic_measure(const Node& t) { return pow2(-static_cast<long>(t.length())); }

Rational relative_level_size(const SymbolicTree& tree, const Node& t, std::size_t i, std::size_t cap) {
  if (tree.alphabet() != Alphabet::Binary) throw AlphabetMismatch("measures exist only on binary trees");
  Rational r(level_size(tree, t, i, cap));
  return r * pow2(-static_cast<long>(i));
}

WeightReport weight_consistency_check(const SymbolicTree& tree, std::size_t depth, std::size_t cap) {
  if (tree.alphabet() != Alphabet::Binary) throw AlphabetMismatch("weights exist only on binary trees");
  WeightReport report;
  auto fail = [&](const Node& t, std::string what) {
    report.ok = false;
    report.node = t;
    report.violation = std::move(what);
    return report;
  };
  if (!tree.has_weights()) return fail(Node{}, "no weight oracle");
  const Rational w_root = tree.weight(Node{});
  if (w_root < 0 || w_root > 1) return fail(Node{}, "w_root outside [0,1]");
  if (depth == 0) return report;
  for (const Node& t : enumerate_nodes(tree, depth - 1, cap)) {
    ++report.nodes_checked;
    const Rational w = tree.weight(t);
    Rational sum = 0;
    for (Symbol s : {Symbol{0}, Symbol{1}}) {
      Node c = t.child(s);
      if (tree.contains(c)) sum += tree.weight(c);
    }
    if (w != sum / 2) {
      return fail(t, "recurrence: w=" + to_string(w) + " but children average " + to_string(Rational(sum / 2)));
    }
    Rational previous = 1;
    for (std::size_t i = 0; t.length() + i <= depth; ++i) {
      const Rational wi = relative_level_size(tree, t, i, cap);
      if (wi > previous) return fail(t, "w_{t," + std::to_string(i) + "} exceeds w_{t," + std::to_string(i - 1) + "}");
      if (w > wi) return fail(t, "w_t exceeds w_{t," + std::to_string(i) + "}=" + to_string(wi));
      previous = wi;
    }
  }
  return report;
}

MeasureInterval measure_interval(const SymbolicTree& tree, const Node& t, std::size_t depth, std::size_t cap) {
  if (tree.alphabet() != Alphabet::Binary) throw AlphabetMismatch("measures exist only on binary trees");
  const LevelBlocks blocks = level_blocks(tree, t, depth, cap);
  MeasureInterval out;
  out.upper = Rational(blocks.size) * pow2(-static_cast<long>(depth));
  if (tree.has_weights()) {
    out.lower = tree.contains(t) ? tree.weight(t) : Rational(0);
    return out;
  }
  Count full = 0;
  for (const LevelEntry& e : blocks.entries) {
    if (tree.full_cone(e.prefix)) full += pow2_count(e.free_depth);
  }
  out.lower = Rational(full) * pow2(-static_cast<long>(depth));
  return out;
}

Rational block_mass(const SymbolicTree& tree, const std::vector<LevelEntry>& entries) {
  Rational mass = 0;
  for (const LevelEntry& e : entries) {
    const Rational w = e.free_depth > 0 ? Rational(1) : tree.weight(e.prefix);
    mass += w * basic_measure(e.prefix);
  }
  return mass;
}

}  // namespace cantor
