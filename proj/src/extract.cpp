#include "cantor/extract.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cantor/error.hpp"
#include "cantor/measure.hpp"

namespace cantor {

bool threshold_holds(const Rational& a, const Rational& b) {
  return a * (1 - b) < (1 - a) * b * (b - a);
}

namespace {

// Least valid k/2^m in (a,1), if any. Validity is upward closed in b.
std::optional<Rational> grid_minimum(const Rational& a, unsigned m) {
  const Count denom = pow2_count(m);
  Count lo = 0;
  {
    Rational scaled = a * Rational(denom);
    mpz_fdiv_q(lo.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    lo += 1;
  }
  Count hi = denom - 1;
  auto at = [&](const Count& k) { return Rational(k, denom); };
  if (lo > hi || !threshold_holds(a, at(hi))) return std::nullopt;
  while (lo < hi) {
    Count mid = (lo + hi) / 2;
    if (threshold_holds(a, at(mid))) hi = mid;
    else lo = mid + 1;
  }
  Rational r = at(lo);
  r.canonicalize();
  return r;
}

}  // namespace

Threshold threshold_search(const Rational& a) {
  if (a <= 0 || a >= 1) throw InvalidArgument("threshold_f needs a ∈ (0,1)");
  unsigned m = 4;
  std::optional<Rational> best = grid_minimum(a, m);
  while (!best) best = grid_minimum(a, ++m);
  for (int step = 0; step < 32; ++step) {
    std::optional<Rational> finer = grid_minimum(a, m + 1);
    if (!finer || *finer >= *best) break;
    best = finer;
    ++m;
  }
  return {*best, m};
}

Rational threshold_f(const Rational& a) { return threshold_search(a).value; }

Rational Schedule::a(std::size_t i) const { return 1 - delta * pow2(-static_cast<long>(i + 1)); }

Rational Schedule::tail(std::size_t K) const {
  Rational root = 1 - delta * pow2(-static_cast<long>(K));
  return root * root;
}

Schedule make_schedule(const Rational& q) {
  if (q <= 0 || q >= 1) throw InvalidArgument("q must lie in (0,1)");
  Rational delta = (1 - q) / 2;
  return {q, delta};
}

namespace {

struct ScanItem {
  LevelEntry entry;
  Rational weight;
  Rational path_min;  // min of w_u over t ⊑ u ⊑ prefix
};

struct WeightedLevel {
  std::vector<ScanItem> items;
  Count size = 0;
};

WeightedLevel scan_level(const SymbolicTree& tree, const Node& t, std::size_t i, std::size_t cap) {
  WeightedLevel out;
  if (!tree.contains(t)) return out;
  const std::size_t target = t.length() + i;
  struct Frame {
    Node node;
    Rational path_min;
  };
  std::vector<Frame> stack;
  {
    Rational w = tree.weight(t);
    stack.push_back({t, w});
  }
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const Rational w = tree.weight(f.node);
    const Rational pm = std::min(f.path_min, w);
    if (f.node.length() == target || tree.full_cone(f.node)) {
      const std::size_t free = target - f.node.length();
      out.size += pow2_count(free);
      out.items.push_back({{std::move(f.node), free}, w, pm});
      if (out.items.size() > cap) {
        throw EnumerationCapExceeded("weighted level at height " + std::to_string(target) + " exceeds " +
                                     std::to_string(cap) + " entries");
      }
      continue;
    }
    for (Symbol s : {Symbol{1}, Symbol{0}}) {
      Node c = f.node.child(s);
      if (tree.contains(c)) stack.push_back({std::move(c), pm});
    }
  }
  return out;
}

RatioResult ratio_of(const WeightedLevel& level) {
  RatioResult r;
  r.infimum = 1;
  r.max_satisfied = 0;
  if (level.size == 0) return r;
  std::map<Rational, Count, std::greater<>> counts;
  for (const ScanItem& item : level.items) counts[item.weight] += pow2_count(item.entry.free_depth);
  Count cumulative = 0;
  for (const auto& [w, n] : counts) {
    cumulative += n;
    if (w <= 0) break;
    Rational frac(cumulative, level.size);
    frac.canonicalize();
    r.max_satisfied = std::max(r.max_satisfied, std::min(w, frac));
  }
  if (r.max_satisfied > 0) r.infimum = 0;
  r.all_c_satisfied = r.max_satisfied >= 1;
  return r;
}

Rational good_fraction_of(const WeightedLevel& level, const Rational& a) {
  if (level.size == 0) return 0;
  Count good = 0;
  for (const ScanItem& item : level.items)
    if (item.path_min >= a) good += pow2_count(item.entry.free_depth);
  Rational r(good, level.size);
  r.canonicalize();
  return r;
}

void require_weighted(const SymbolicTree& tree) {
  if (tree.alphabet() != Alphabet::Binary) throw AlphabetMismatch("weighted trees are binary");
  if (!tree.has_weights()) throw InvalidArgument("tree '" + tree.name() + "' has no weight oracle");
}

}  // namespace

RatioResult large_weight_ratio(const SymbolicTree& tree, const Node& t, std::size_t i, std::size_t cap) {
  require_weighted(tree);
  return ratio_of(scan_level(tree, t, i, cap));
}

Rational good_fraction(const SymbolicTree& tree, const Node& t, const Rational& a, std::size_t i,
                       std::size_t cap) {
  require_weighted(tree);
  return good_fraction_of(scan_level(tree, t, i, cap), a);
}

namespace {

Rational above(const Rational& lo) { return dyadic_between(lo, Rational(1)); }

StageRecord first_stage(const SymbolicTree& tree, const Schedule& sched, const Rational& root_mass,
                        const ExtractOptions& opt) {
  StageRecord rec;
  rec.index = 1;
  rec.a = sched.a(1);
  rec.a_prime = above(rec.a);
  rec.a_second = above(*rec.a_prime);
  Rational b = above(std::max({threshold_f(*rec.a_prime), threshold_f(*rec.a_second), *rec.a_second}));
  const Rational a0 = sched.a(0);
  for (std::size_t attempt = 0; attempt <= opt.b1_retries; ++attempt, b = above(b)) {
    for (std::size_t j = 1; j <= opt.j_cap; ++j) {
      WeightedLevel level = scan_level(tree, Node{}, j, opt.entry_cap);
      if (ratio_of(level).max_satisfied <= b) continue;
      std::vector<LevelEntry> chosen;
      Count kept = 0;
      for (ScanItem& item : level.items) {
        if (item.weight > b) {
          kept += pow2_count(item.entry.free_depth);
          chosen.push_back(std::move(item.entry));
        }
      }
      if (Rational(kept, level.size) <= b) continue;
      if (block_mass(tree, chosen) < a0 * a0 * root_mass) break;
      rec.height = j;
      rec.j = j;
      rec.b = b;
      rec.nodes = std::move(chosen);
      return rec;
    }
  }
  throw LevelSearchExhausted(1, "no j ≤ " + std::to_string(opt.j_cap) + " with r_{∅,j} > b_1 and enough mass");
}

StageRecord next_stage(const SymbolicTree& tree, const Schedule& sched, const StageRecord& prev,
                       const ExtractOptions& opt) {
  const std::size_t i = prev.index;
  StageRecord rec;
  rec.index = i + 1;
  rec.a = sched.a(i + 1);
  rec.a_prime = above(std::max(rec.a, Rational(1 - (*prev.a_prime - prev.a))));
  rec.a_second = above(*rec.a_prime);
  const Rational b = above(std::max({threshold_f(*rec.a_second), *rec.a_second, prev.a}));
  rec.b = b;
  const Rational& good_level = *prev.a_prime;
  const Rational cap_bound = (1 - *prev.a_prime) + (1 - b);
  const Rational prev_mass = block_mass(tree, prev.nodes);

  for (std::size_t j = 1; j <= opt.j_cap; ++j) {
    std::vector<LevelEntry> chosen;
    bool ok = true;
    for (const LevelEntry& t : prev.nodes) {
      if (t.free_depth > 0) {
        chosen.push_back({t.prefix, t.free_depth + j});
        continue;
      }
      WeightedLevel level = scan_level(tree, t.prefix, j, opt.entry_cap);
      if (ratio_of(level).max_satisfied <= b || good_fraction_of(level, *prev.a_second) <= *prev.a_prime) {
        ok = false;
        break;
      }
      Count kept = 0;
      for (ScanItem& item : level.items) {
        if (item.weight > b && item.path_min >= good_level) {
          kept += pow2_count(item.entry.free_depth);
          chosen.push_back(std::move(item.entry));
        }
      }
      if (Rational(level.size - kept, level.size) >= cap_bound) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (block_mass(tree, chosen) < prev.a * prev.a * prev_mass) continue;
    rec.j = j;
    rec.height = prev.height + j;
    rec.nodes = std::move(chosen);
    return rec;
  }
  throw LevelSearchExhausted(i + 1, "no j ≤ " + std::to_string(opt.j_cap) + " meets the r, s and mass conditions");
}

}  // namespace

ExtractionCertificate extract(const SymbolicTree& tree, const Rational& q, std::size_t stages,
                              const ExtractOptions& options) {
  require_weighted(tree);
  if (stages < 1) throw InvalidArgument("stages must be at least 1");
  const Schedule sched = make_schedule(q);
  if (!tree.contains(Node{})) throw EmptyTree();
  const Rational root_mass = tree.weight(Node{});
  if (root_mass <= 0) throw InvalidArgument("weighted tree needs w_root > 0");

  ExtractionCertificate cert;
  cert.q = sched.q;
  cert.delta = sched.delta;
  StageRecord root;
  root.a = sched.a(0);
  root.nodes.push_back({Node{}, 0});
  cert.stages.push_back(std::move(root));
  cert.stages.push_back(first_stage(tree, sched, root_mass, options));
  while (cert.stage_count() < stages) cert.stages.push_back(next_stage(tree, sched, cert.stages.back(), options));
  cert.measure_lower_bound = block_mass(tree, cert.stages.back().nodes) * sched.tail(stages);
  return cert;
}

}  // namespace cantor
