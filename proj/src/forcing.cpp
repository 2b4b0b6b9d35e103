#include "cantor/forcing.hpp"

#include <algorithm>

#include "cantor/catalog.hpp"
#include "cantor/error.hpp"

namespace cantor {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Cohen: return "cohen";
    case Family::Sacks: return "sacks";
    case Family::Miller: return "miller";
    case Family::Hechler: return "hechler";
    case Family::EvDiff: return "evdiff";
    case Family::LaverF: return "laver";
    case Family::MathiasF: return "mathias";
    case Family::SilverF: return "silver";
    case Family::Random: return "random";
  }
  return "?";
}

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

std::vector<bool> one_bits(const Node& s) {
  std::vector<bool> bits(s.length());
  for (std::size_t n = 0; n < s.length(); ++n) bits[n] = s[n] == 1;
  return bits;
}

bool mathias_ok(const Node& t, const NatSet& n) {
  for (std::size_t k = 0; k < t.length(); ++k)
    if (t[k] == 1 && !n.contains(k)) return false;
  return true;
}

bool silver_ok(const Node& t, const NatSet& free, const NatSet& ones) {
  for (std::size_t k = 0; k < t.length(); ++k)
    if (!free.contains(k) && (t[k] == 1) != ones.contains(k)) return false;
  return true;
}

// Least value at position `pos` with at least two allowed values ≤ it.
Symbol second_allowed(const std::vector<Rule>& fs, std::size_t pos) {
  int allowed = 0;
  for (Symbol v = 0;; ++v) {
    const bool hit = std::any_of(fs.begin(), fs.end(), [&](const Rule& f) { return f(pos) == v; });
    if (!hit && ++allowed == 2) return v;
  }
}

}  // namespace

ForcingCondition make_cohen(Node s) { return CohenCond{std::move(s)}; }

ForcingCondition make_hechler(Node s, const Rule& f) {
  const std::size_t k = s.length();
  return HechlerCond{std::move(s), f.masked_below(k)};
}

ForcingCondition make_evdiff(Node s, const std::vector<Rule>& fs) {
  std::vector<Rule> masked;
  for (const Rule& f : fs) masked.push_back(f.masked_below(s.length()));
  return EvDiffCond{std::move(s), std::move(masked)};
}

ForcingCondition make_laver(Node s, NatSet successors) {
  if (!successors.infinite() || successors.family() == SetFamily::Plain) {
    throw InvalidArgument("laver successor set must be an infinite member of a family");
  }
  return LaverCond{std::move(s), std::move(successors)};
}

ForcingCondition make_mathias(Node s, NatSet n) {
  if (!s.fits(Alphabet::Binary)) throw AlphabetMismatch("mathias stem must be binary");
  if (!n.infinite() || n.family() == SetFamily::Plain) {
    throw InvalidArgument("mathias set must be an infinite member of a family");
  }
  if (!mathias_ok(s, n)) {
    throw InvalidArgument("mathias stem " + to_string(s, Alphabet::Binary) + " is not in its own tree: it has a 1 outside N");
  }
  std::vector<Symbol> bits = s.symbols();
  while (!n.contains(bits.size())) bits.push_back(0);
  return MathiasCond{Node(std::move(bits)), std::move(n)};
}

ForcingCondition make_silver(NatSet free, NatSet ones) {
  if (!free.infinite() || free.family() == SetFamily::Plain) {
    throw InvalidArgument("silver needs an infinite set of free positions from a family");
  }
  return SilverCond{std::move(free), std::move(ones)};
}

Family family(const ForcingCondition& c) { return static_cast<Family>(c.index()); }

Alphabet cond_alphabet(const ForcingCondition& c) {
  return std::visit(Overload{[](const SacksCond&) { return Alphabet::Binary; },
                             [](const MathiasCond&) { return Alphabet::Binary; },
                             [](const SilverCond&) { return Alphabet::Binary; },
                             [](const RandomCond&) { return Alphabet::Binary; },
                             [](const auto&) { return Alphabet::Omega; }},
                    c);
}

bool is_strongly_linked(const ForcingCondition& c) {
  return std::visit(Overload{[](const CohenCond&) { return true; },
                             [](const HechlerCond&) { return true; },
                             [](const EvDiffCond&) { return true; },
                             [](const LaverCond& l) { return l.successors.family() == SetFamily::Frechet; },
                             [](const MathiasCond& m) { return m.n.family() == SetFamily::Frechet; },
                             [](const auto&) { return false; }},
                    c);
}

bool shift_invariant(const ForcingCondition& c) {
  return std::visit(Overload{[](const MathiasCond& m) { return m.n.shift_invariant_family(); },
                             [](const SilverCond& s) { return s.free.shift_invariant_family(); },
                             [](const auto&) { return true; }},
                    c);
}

bool cond_member(const ForcingCondition& c, const Node& t) {
  if (!t.fits(cond_alphabet(c))) {
    throw AlphabetMismatch(std::string(to_string(family(c))) + " conditions live in " +
                           std::string(to_string(cond_alphabet(c))));
  }
  auto beyond = [&t](const Node& s, auto&& ok) {
    if (!comparable(s, t)) return false;
    for (std::size_t n = s.length(); n < t.length(); ++n)
      if (!ok(n, t[n])) return false;
    return true;
  };
  return std::visit(
      Overload{[&](const CohenCond& x) { return comparable(x.s, t); },
               [&](const SacksCond& x) { return x.tree.contains(t); },
               [&](const MillerCond& x) { return x.tree.contains(t); },
               [&](const RandomCond& x) { return x.tree.contains(t); },
               [&](const HechlerCond& x) { return beyond(x.s, [&](std::size_t n, Symbol v) { return v >= x.f(n); }); },
               [&](const EvDiffCond& x) {
                 return beyond(x.s, [&](std::size_t n, Symbol v) {
                   return std::none_of(x.fs.begin(), x.fs.end(), [&](const Rule& f) { return f(n) == v; });
                 });
               },
               [&](const LaverCond& x) {
                 return beyond(x.s, [&](std::size_t, Symbol v) { return x.successors.contains(v); });
               },
               [&](const MathiasCond& x) { return comparable(x.s, t) && mathias_ok(t, x.n); },
               [&](const SilverCond& x) { return silver_ok(t, x.free, x.ones); }},
      c);
}

std::optional<Node> cond_stem(const ForcingCondition& c, std::size_t depth_budget) {
  return std::visit(Overload{[](const CohenCond& x) -> std::optional<Node> { return x.s; },
                             [](const HechlerCond& x) -> std::optional<Node> { return x.s; },
                             [](const EvDiffCond& x) -> std::optional<Node> { return x.s; },
                             [](const LaverCond& x) -> std::optional<Node> { return x.s; },
                             [](const MathiasCond& x) -> std::optional<Node> { return x.s; },
                             [](const SilverCond& x) -> std::optional<Node> {
                               std::vector<Symbol> bits;
                               while (!x.free.contains(bits.size())) bits.push_back(x.ones.contains(bits.size()) ? 1 : 0);
                               return Node(std::move(bits));
                             },
                             [&](const SacksCond& x) { return stem(x.tree, depth_budget); },
                             [&](const MillerCond& x) { return stem(x.tree, depth_budget); },
                             [&](const RandomCond& x) { return stem(x.tree, depth_budget); }},
                    c);
}

SymbolicTree cond_tree(const ForcingCondition& c) {
  if (const auto* x = std::get_if<SacksCond>(&c)) return x->tree;
  if (const auto* x = std::get_if<MillerCond>(&c)) return x->tree;
  if (const auto* x = std::get_if<RandomCond>(&c)) return x->tree;
  const Alphabet alphabet = cond_alphabet(c);
  SymbolicTree tree(alphabet, [c](const Node& t) { return t.fits(cond_alphabet(c)) && cond_member(c, t); });
  tree = tree.with_name(std::string(to_string(family(c))));
  if (alphabet == Alphabet::Binary) return tree;
  auto window = std::visit(
      Overload{[](const CohenCond& x) -> SymbolicTree::SymbolWindow {
                 return [s = x.s](std::size_t pos) { return pos < s.length() ? s[pos] : Symbol{1}; };
               },
               [](const HechlerCond& x) -> SymbolicTree::SymbolWindow {
                 return [x](std::size_t pos) {
                   return pos < x.s.length() ? x.s[pos] : static_cast<Symbol>(x.f(pos) + 1);
                 };
               },
               [](const EvDiffCond& x) -> SymbolicTree::SymbolWindow {
                 return [x](std::size_t pos) { return pos < x.s.length() ? x.s[pos] : second_allowed(x.fs, pos); };
               },
               [](const LaverCond& x) -> SymbolicTree::SymbolWindow {
                 const std::size_t first = x.successors.next_member(0);
                 const Symbol second = static_cast<Symbol>(x.successors.next_member(first + 1));
                 return [s = x.s, second](std::size_t pos) { return pos < s.length() ? s[pos] : second; };
               },
               [](const auto&) -> SymbolicTree::SymbolWindow { return {}; }},
      c);
  return tree.with_symbol_window(std::move(window));
}

ForcingCondition cond_shift(const Node& s, const ForcingCondition& c) {
  if (!s.fits(cond_alphabet(c))) throw AlphabetMismatch("shift node does not fit the condition's alphabet");
  const std::size_t k = s.length();
  return std::visit(
      Overload{[&](const CohenCond& x) { return make_cohen(concat(s, x.s)); },
               [&](const HechlerCond& x) { return make_hechler(concat(s, x.s), x.f.delayed(k)); },
               [&](const EvDiffCond& x) {
                 std::vector<Rule> fs;
                 for (const Rule& f : x.fs) fs.push_back(f.delayed(k));
                 return make_evdiff(concat(s, x.s), fs);
               },
               [&](const LaverCond& x) { return make_laver(concat(s, x.s), x.successors); },
               [&](const MathiasCond& x) {
                 if (!x.n.shift_invariant_family()) throw NotShiftInvariant("mathias condition over a fixed set");
                 return make_mathias(concat(s, x.s), x.n.shifted(k).with_head(one_bits(s)));
               },
               [&](const SilverCond& x) {
                 if (!x.free.shift_invariant_family()) throw NotShiftInvariant("silver condition over a fixed set");
                 return make_silver(x.free.shifted(k), x.ones.shifted(k).with_head(one_bits(s)));
               },
               [&](const SacksCond& x) -> ForcingCondition { return SacksCond{shift_tree(s, x.tree)}; },
               [&](const MillerCond& x) -> ForcingCondition { return MillerCond{shift_tree(s, x.tree)}; },
               [&](const RandomCond& x) -> ForcingCondition { return RandomCond{shift_tree(s, x.tree)}; }},
      c);
}

ForcingCondition cond_restrict(const ForcingCondition& c, const Node& u) {
  if (!cond_member(c, u)) throw NodeNotInTree("restrict: node is not in the condition's tree");
  auto deeper = [&u](const Node& s) { return u.length() > s.length() ? u : s; };
  return std::visit(
      Overload{[&](const CohenCond& x) { return make_cohen(deeper(x.s)); },
               [&](const HechlerCond& x) { return make_hechler(deeper(x.s), x.f); },
               [&](const EvDiffCond& x) { return make_evdiff(deeper(x.s), x.fs); },
               [&](const LaverCond& x) { return make_laver(deeper(x.s), x.successors); },
               [&](const MathiasCond& x) { return make_mathias(deeper(x.s), x.n); },
               [&](const SilverCond& x) {
                 std::vector<bool> none(u.length(), false);
                 return make_silver(x.free.with_head(none), x.ones.with_head(one_bits(u)));
               },
               [&](const SacksCond& x) -> ForcingCondition { return SacksCond{restrict_to(x.tree, u)}; },
               [&](const MillerCond& x) -> ForcingCondition { return MillerCond{restrict_to(x.tree, u)}; },
               [&](const RandomCond& x) -> ForcingCondition { return RandomCond{restrict_to(x.tree, u)}; }},
      c);
}

ForcingCondition top_condition(Family family) {
  switch (family) {
    case Family::Cohen: return make_cohen({});
    case Family::Hechler: return make_hechler({}, Rule::constant(0));
    case Family::EvDiff: return make_evdiff({}, {});
    case Family::LaverF: return make_laver({}, NatSet());
    case Family::MathiasF: return make_mathias({}, NatSet());
    case Family::SilverF: return make_silver(NatSet(), NatSet::periodic(1, {}, SetFamily::Plain));
    case Family::Sacks: return SacksCond{catalog_tree("full")};
    case Family::Random: return RandomCond{catalog_tree("full")};
    case Family::Miller:
      return MillerCond{SymbolicTree(Alphabet::Omega, [](const Node&) { return true; })
                            .with_symbol_window([](std::size_t) { return Symbol{1}; })
                            .with_name("miller-full")};
  }
  throw InvalidArgument("unknown family");
}

MeetResult strongly_linked_meet(const ForcingCondition& c1, const ForcingCondition& c2) {
  if (family(c1) != family(c2)) throw InvalidArgument("meet of conditions from different families");
  if (!is_strongly_linked(c1) || !is_strongly_linked(c2)) {
    throw NotStronglyLinkedFamily(std::string(to_string(family(c1))) + " conditions are not strongly linked");
  }
  const Node s1 = *cond_stem(c1), s2 = *cond_stem(c2);
  const bool swap = s1.length() > s2.length();
  const ForcingCondition& lo = swap ? c2 : c1;
  const ForcingCondition& hi = swap ? c1 : c2;
  const Node& stem_hi = swap ? s1 : s2;
  const Node& stem_lo = swap ? s2 : s1;
  if (!comparable(stem_lo, stem_hi) || !cond_member(lo, stem_hi)) return {std::nullopt, stem_hi};
  ForcingCondition meet = std::visit(
      Overload{[&](const CohenCond&) { return make_cohen(stem_hi); },
               [&](const HechlerCond& x) { return make_hechler(stem_hi, max(x.f, std::get<HechlerCond>(hi).f)); },
               [&](const EvDiffCond& x) {
                 std::vector<Rule> fs = x.fs;
                 for (const Rule& f : std::get<EvDiffCond>(hi).fs) fs.push_back(f);
                 return make_evdiff(stem_hi, fs);
               },
               [&](const LaverCond& x) {
                 return make_laver(stem_hi, x.successors.intersect(std::get<LaverCond>(hi).successors));
               },
               [&](const MathiasCond& x) { return make_mathias(stem_hi, x.n.intersect(std::get<MathiasCond>(hi).n)); },
               [&](const auto&) -> ForcingCondition { throw NotStronglyLinkedFamily("unreachable"); }},
      lo);
  return {std::move(meet), stem_hi};
}

SymbolicTree::SymbolWindow joint_window(const ForcingCondition& c1, const ForcingCondition& c2) {
  if (cond_alphabet(c1) != Alphabet::Omega || cond_alphabet(c2) != Alphabet::Omega) return {};
  const SymbolicTree t1 = cond_tree(c1), t2 = cond_tree(c2);
  SymbolicTree::SymbolWindow wide = [t1, t2](std::size_t pos) { return std::max(t1.max_symbol(pos), t2.max_symbol(pos)); };
  // Past both stems the intersection may need more room than either tree.
  const std::size_t stems = std::max(cond_stem(c1)->length(), cond_stem(c2)->length());
  if (const auto* e1 = std::get_if<EvDiffCond>(&c1)) {
    if (const auto* e2 = std::get_if<EvDiffCond>(&c2)) {
      std::vector<Rule> fs = e1->fs;
      fs.insert(fs.end(), e2->fs.begin(), e2->fs.end());
      return [wide, fs, stems](std::size_t pos) { return pos < stems ? wide(pos) : second_allowed(fs, pos); };
    }
  }
  if (const auto* l1 = std::get_if<LaverCond>(&c1)) {
    if (const auto* l2 = std::get_if<LaverCond>(&c2)) {
      const NatSet both = l1->successors.intersect(l2->successors);
      if (both.infinite()) {
        const Symbol second = static_cast<Symbol>(both.next_member(both.next_member(0) + 1));
        return [wide, second, stems](std::size_t pos) { return pos < stems ? wide(pos) : std::max(wide(pos), second); };
      }
    }
  }
  return wide;
}

bool compatible_bruteforce(const ForcingCondition& c1, const ForcingCondition& c2, std::size_t depth,
                           std::size_t cap) {
  if (cond_alphabet(c1) != cond_alphabet(c2)) throw AlphabetMismatch("conditions over different alphabets");
  const SymbolicTree both = intersect(cond_tree(c1), cond_tree(c2));
  for (const Node& t : enumerate_nodes(both, depth, cap, joint_window(c1, c2)))
    if (t.length() == depth) return true;
  return false;
}

}  // namespace cantor
