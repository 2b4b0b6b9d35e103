#include "cantor/suites.hpp"

#include <functional>

#include "cantor/catalog.hpp"
#include "cantor/condition_syntax.hpp"
#include "cantor/density.hpp"
#include "cantor/error.hpp"

namespace cantor {

bool SuiteReport::all_pass() const { return passed() == cases.size(); }

std::size_t SuiteReport::passed() const {
  std::size_t n = 0;
  for (const SuiteCase& c : cases) n += c.pass ? 1 : 0;
  return n;
}

std::string SuiteReport::summary() const {
  return std::string(all_pass() ? "PASS " : "FAIL ") + std::to_string(passed()) + "/" + std::to_string(cases.size());
}

namespace {

using Predicate = std::function<bool(const Node&)>;

constexpr std::size_t kExtra = 3;

// Records a failure once; later checks still count.
void expect(SuiteCase& c, bool holds, const std::string& what) {
  ++c.checks;
  if (!holds && c.pass) {
    c.pass = false;
    c.detail = what;
  }
}

// σ_{xn}(W) ∩ A has no node of length |xn|+3: once through the tree
// operators, once by enumerating every continuation with symbols ≤ bound.
void check_shifted_disjoint(SuiteCase& c, const SymbolicTree& W, const SymbolicTree& A, const Node& xn,
                            Symbol bound, const Predicate& w_member, const Predicate& a_member) {
  const SymbolicTree both = intersect(shift_tree(xn, W), A);
  const std::string at = " at x↾" + std::to_string(xn.length());
  expect(c, level(both, Node{}, xn.length() + kExtra).empty(), "operator level not empty" + at);
  std::vector<Symbol> digits(kExtra, 0);
  while (true) {
    const Node tail(digits);
    expect(c, !(w_member(tail) && a_member(concat(xn, tail))), "enumeration found a common node" + at);
    std::size_t k = 0;
    while (k < kExtra && digits[k] == bound) digits[k++] = 0;
    if (k == kExtra) break;
    ++digits[k];
  }
}

Predicate member_of(const ForcingCondition& c) {
  return [c](const Node& t) { return cond_member(c, t); };
}

Predicate member_of(const SymbolicTree& t) {
  return [t](const Node& u) { return t.contains(u); };
}

SuiteCase mathias_sacks_silver(std::size_t depth) {
  SuiteCase c{"mathias-sacks-silver", true, 0, ""};
  const SymbolicTree A = catalog_tree("A-odd-ones");
  const ForcingCondition mathias = make_mathias({}, parse_natset("mod:2:0"));
  const ForcingCondition silver = make_silver(parse_natset("mod:2:0"), parse_natset("none"));
  const SymbolicTree T = cond_tree(mathias);
  const ForcingCondition sacks = SacksCond{T};
  expect(c, cond_stem(mathias)->empty(), "witness stem is not empty");
  expect(c, enumerate_nodes(T, depth) == enumerate_nodes(cond_tree(silver), depth), "silver tree differs");
  for (const Node& t : enumerate_nodes(T, depth - 1)) {
    const bool splits = T.children(t).size() == 2;
    expect(c, splits == (t.length() % 2 == 0), "split(T) is not the even levels at " + to_string(t, Alphabet::Binary));
  }
  const Point x{{}, {1}};
  for (std::size_t n = 0; n <= depth; n += 2) {
    check_shifted_disjoint(c, cond_tree(sacks), A, x.restrict(n), 1, member_of(mathias), member_of(A));
  }
  if (c.pass) c.detail = "σ_{x↾n}(T_{∅,evens}) ∩ A = ∅ for even n ≤ " + std::to_string(depth);
  return c;
}

SuiteCase laver_miller(std::size_t depth) {
  SuiteCase c{"laver-miller", true, 0, ""};
  const SymbolicTree A = catalog_tree("A-even-values");
  const ForcingCondition laver = make_laver({}, parse_natset("mod:2:1"));
  const SymbolicTree T = cond_tree(laver);
  expect(c, cond_stem(laver)->empty(), "witness stem is not empty");
  const Node zeros = repeat(0, depth);
  for (std::size_t n = 0; n <= depth; ++n) {
    check_shifted_disjoint(c, T, A, zeros.prefix(n), 5, member_of(laver), member_of(A));
  }
  if (c.pass) c.detail = "σ_{x↾n}(odd values) ∩ A = ∅ for all n ≤ " + std::to_string(depth);
  return c;
}

SuiteCase hechler_constant_one(std::size_t depth) {
  SuiteCase c{"hechler-constant-one", true, 0, ""};
  const ForcingCondition T = make_hechler({}, Rule::constant(1));
  const ForcingCondition cone = make_cohen({0});
  expect(c, !compatible_bruteforce(T, cone, 1), "N_<0> meets T at depth 1");
  expect(c, !cond_stem(cone)->empty(), "N_<0> has empty stem");
  const Node ones = repeat(1, depth);
  for (std::size_t n = 0; n <= depth; ++n) {
    check_shifted_disjoint(c, cond_tree(cone), cond_tree(T), ones.prefix(n), 4, member_of(cone), member_of(T));
  }
  if (c.pass) c.detail = "σ_{x↾n}(N_<0>) ∩ [T_{∅,1}] = ∅ for all n ≤ " + std::to_string(depth);
  return c;
}

SuiteCase hechler_diagonal(std::size_t depth) {
  SuiteCase c{"hechler-diagonal", true, 0, ""};
  const ForcingCondition T = make_hechler({}, Rule::affine(1, 1));
  const SymbolicTree diag_free = catalog_tree("A-diagonal");  // complement of A
  const SymbolicTree shift_diag = catalog_tree("T-shift-diag");
  const std::size_t shallow = std::min<std::size_t>(depth, 8);
  expect(c, enumerate_nodes(cond_tree(T), shallow) == enumerate_nodes(shift_diag, shallow),
         "T_{∅,x} differs from the catalog tree");
  for (const Node& y : enumerate_nodes(cond_tree(T), depth)) {
    expect(c, diag_free.contains(y), "a node of T_{∅,x} meets the diagonal");
    for (std::size_t k = 0; k < y.length(); ++k) expect(c, y[k] >= k + 1, "y(n) < n+1");
  }
  // Every y ∈ [T] is a density point of A: past u(|s|) the node y↾n⌢<n>
  // lies in σ_{y↾n}(T_{s,u}/s) and N_{y↾n⌢<n>} ⊆ A.
  const std::vector<ForcingCondition> large{make_hechler({}, Rule::constant(0)), make_hechler({}, Rule::constant(3)),
                                            make_hechler({4}, Rule::affine(1, 1)),
                                            make_hechler({2, 7}, Rule::constant(5))};
  std::vector<Symbol> ys;
  for (std::size_t n = 0; n <= depth; ++n) ys.push_back(static_cast<Symbol>(n + 1));
  const Node y(ys);
  for (const ForcingCondition& B : large) {
    const HechlerCond& h = std::get<HechlerCond>(B);
    const SymbolicTree rest = quotient(cond_tree(B), h.s);
    for (std::size_t n = h.f(h.s.length()); n <= depth; ++n) {
      const Node t = y.prefix(n).child(static_cast<Symbol>(n));
      expect(c, shift_tree(y.prefix(n), rest).contains(t), "y↾n⌢<n> missing from the shifted condition");
      expect(c, cond_member(B, concat(h.s, Node{static_cast<Symbol>(n)})), "direct membership of <n> fails");
      expect(c, !diag_free.contains(t) && t[n] == n, "y↾n⌢<n> does not enter A");
    }
  }
  if (c.pass) c.detail = "[T_{∅,x}] ∩ A = ∅ and every y ∈ [T_{∅,x}] is a density point of A";
  return c;
}

SuiteCase convergence(std::size_t depth) {
  SuiteCase c{"convergence", true, 0, ""};
  const ForcingCondition E = make_evdiff({}, {Rule::constant(0)});
  const ForcingCondition cone0 = make_cohen({0});
  // All t with symbols ≤ 3 and length ≤ 4, in or out of T_{∅,0}.
  SymbolicTree everything(Alphabet::Omega, [](const Node&) { return true; });
  everything = everything.with_symbol_window([](std::size_t) { return Symbol{3}; });
  for (const Node& t : enumerate_nodes(everything, std::min<std::size_t>(depth, 4))) {
    check_shifted_disjoint(c, cond_tree(cone0), cond_tree(E), t, 4, member_of(cone0), member_of(E));
  }
  const Node ones = repeat(1, depth);
  for (std::size_t n = 0; n <= depth; ++n) {
    check_shifted_disjoint(c, cond_tree(cone0), cond_tree(E), ones.prefix(n), 4, member_of(cone0), member_of(E));
  }
  const NatSet evens = parse_natset("mod:2:0");
  const ForcingCondition M = make_mathias({}, evens);
  const ForcingCondition cone1 = make_mathias({1}, NatSet());
  const Node zeros = repeat(0, depth);
  for (std::size_t n = 0; n <= depth; ++n) {
    if (evens.contains(n)) continue;
    check_shifted_disjoint(c, cond_tree(cone1), cond_tree(M), zeros.prefix(n), 1, member_of(cone1), member_of(M));
  }
  if (c.pass) c.detail = "σ_t(N_<0>) misses T_{∅,0}; σ_{x↾n}(N_<1>) misses T_{∅,N} for n ∉ N";
  return c;
}

}  // namespace

SuiteReport counterexample_suite(std::size_t depth) {
  if (depth < 4) throw InvalidArgument("counterexample suite needs depth ≥ 4");
  SuiteReport report;
  report.cases.push_back(mathias_sacks_silver(depth));
  report.cases.push_back(laver_miller(depth));
  report.cases.push_back(hechler_constant_one(depth));
  report.cases.push_back(hechler_diagonal(depth));
  report.cases.push_back(convergence(depth));
  return report;
}

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Rule random_rule(std::mt19937_64& rng) {
  std::vector<Rule::Value> head(uniform(rng, 0, 1) ? uniform(rng, 1, 3) : 0);
  for (auto& v : head) v = uniform(rng, 0, 4);
  const Rule::Value c = uniform(rng, 0, 3);
  const Rule::Value s = uniform(rng, 0, 2) == 0 ? 1 : 0;
  return Rule(std::move(head), c, s);
}

NatSet random_cofinite(std::mt19937_64& rng, std::size_t top, const std::vector<bool>& keep = {}) {
  std::vector<std::size_t> excluded;
  for (std::size_t k = uniform(rng, 0, 3); k > 0; --k) {
    const std::size_t e = uniform(rng, 0, top);
    if (e < keep.size() && keep[e]) continue;
    excluded.push_back(e);
  }
  return NatSet::cofinite_excluding(excluded);
}

Node random_omega_node(std::mt19937_64& rng, std::size_t max_len, Symbol max_sym) {
  std::vector<Symbol> s(uniform(rng, 0, max_len));
  for (auto& v : s) v = static_cast<Symbol>(uniform(rng, 0, max_sym));
  return Node(std::move(s));
}

ForcingCondition random_with_stem(Family family, const Node& s, std::mt19937_64& rng) {
  switch (family) {
    case Family::Cohen: return make_cohen(s);
    case Family::Hechler: return make_hechler(s, random_rule(rng));
    case Family::EvDiff: {
      std::vector<Rule> fs(uniform(rng, 1, 3));
      for (auto& f : fs) f = random_rule(rng);
      return make_evdiff(s, fs);
    }
    case Family::LaverF: return make_laver(s, random_cofinite(rng, 5));
    case Family::MathiasF: {
      std::vector<bool> ones(s.length());
      for (std::size_t k = 0; k < s.length(); ++k) ones[k] = s[k] == 1;
      return make_mathias(s, random_cofinite(rng, 7, ones));
    }
    default: throw NotStronglyLinkedFamily(std::string(to_string(family)) + " has no random generator");
  }
}

}  // namespace

ForcingCondition random_condition(Family family, std::mt19937_64& rng) {
  if (family == Family::MathiasF) {
    NatSet n = random_cofinite(rng, 7);
    std::vector<Symbol> s(uniform(rng, 0, 3));
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = n.contains(k) ? static_cast<Symbol>(uniform(rng, 0, 1)) : 0;
    return make_mathias(Node(std::move(s)), n);
  }
  return random_with_stem(family, random_omega_node(rng, 3, 4), rng);
}

SuiteReport density_positive_suite(std::size_t depth, std::size_t samples, std::uint64_t seed) {
  SuiteReport report;
  std::mt19937_64 rng(seed);
  for (Family fam : {Family::Cohen, Family::Hechler, Family::EvDiff, Family::LaverF, Family::MathiasF}) {
    SuiteCase c{std::string(to_string(fam)), true, 0, ""};
    for (std::size_t k = 0; k < samples; ++k) {
      const ForcingCondition cond = random_condition(fam, rng);
      const SymbolicTree tree = cond_tree(cond);
      const Node stem = *cond_stem(cond);
      const std::string where = " in " + to_string(cond);
      for (const Node& t : enumerate_nodes(tree, depth, std::size_t{1} << 20)) {
        const DensityVerdict v = strongly_linked_density(cond, t);
        const VerdictKind want = stem.is_prefix_of(t) ? VerdictKind::Dense : VerdictKind::Unknown;
        expect(c, v.kind == want, "node " + to_string(t, tree.alphabet()) + " got " + to_string(v) + where);
        if (t.length() == depth) continue;
        const Symbol top = tree.alphabet() == Alphabet::Binary ? 1 : tree.max_symbol(t.length()) + 1;
        for (Symbol s = 0; s <= top; ++s) {
          const Node out = t.child(s);
          if (tree.contains(out)) continue;
          const DensityVerdict w = strongly_linked_density(cond, out);
          expect(c, w.kind == VerdictKind::NotDense,
                 "out-node " + to_string(out, tree.alphabet()) + " got " + to_string(w) + where);
        }
      }
    }
    if (c.pass) c.detail = std::to_string(samples) + " conditions, depth " + std::to_string(depth);
    report.cases.push_back(std::move(c));
  }
  SuiteCase wrong{"hechler-wrong-large-sets", true, 0, ""};
  const ForcingCondition T = make_hechler({}, Rule::constant(1));
  const ForcingCondition cone = make_cohen({0});
  expect(wrong, !compatible_bruteforce(T, cone, 1), "N_<0> meets T_{∅,1}");
  expect(wrong, !cond_member(T, Node{0}), "<0> is in T_{∅,1}");
  if (wrong.pass) wrong.detail = "with all positive sets large, N_<0> rejects every x ∈ [T_{∅,1}]";
  report.cases.push_back(std::move(wrong));
  return report;
}

SuiteCase meet_fuzz(Family family, std::size_t pairs, std::size_t depth, std::uint64_t seed) {
  SuiteCase c{std::string(to_string(family)), true, 0, ""};
  std::mt19937_64 rng(seed);
  constexpr std::size_t cap = std::size_t{1} << 20;
  std::size_t compatible = 0;
  for (std::size_t k = 0; k < pairs; ++k) {
    const ForcingCondition c1 = random_condition(family, rng);
    ForcingCondition c2 = random_condition(family, rng);
    if (uniform(rng, 0, 1) == 1) {
      // Grow a stem inside c1 so that about half the pairs are compatible.
      const SymbolicTree t1 = cond_tree(c1);
      Node u = *cond_stem(c1);
      for (std::size_t steps = uniform(rng, 0, 3); steps > 0; --steps) {
        const std::vector<Node> kids = t1.children(u);
        if (kids.empty()) break;
        u = kids[uniform(rng, 0, kids.size() - 1)];
      }
      c2 = random_with_stem(family, u, rng);
    }
    const std::string pair = " for " + to_string(c1) + " / " + to_string(c2);
    const MeetResult r = strongly_linked_meet(c1, c2);
    const bool brute = compatible_bruteforce(c1, c2, depth, cap);
    expect(c, r.meet.has_value() == brute, "verdict disagrees with brute force" + pair);
    if (r.meet) {
      ++compatible;
      const auto window = joint_window(c1, c2);
      const auto meet_nodes = enumerate_nodes(cond_tree(*r.meet), depth, cap, window);
      const auto both = enumerate_nodes(intersect(cond_tree(c1), cond_tree(c2)), depth, cap, window);
      expect(c, meet_nodes == both, "meet nodes differ from the intersection" + pair);
      expect(c, r.witness.is_prefix_of(*cond_stem(*r.meet)), "meet stem does not extend the longer stem" + pair);
    } else {
      expect(c, cond_member(c1, r.witness) != cond_member(c2, r.witness), "witness lies in both or neither" + pair);
    }
  }
  if (c.pass) {
    c.detail = std::to_string(pairs) + " pairs, " + std::to_string(compatible) + " compatible, depth " +
               std::to_string(depth);
  }
  return c;
}

}  // namespace cantor
