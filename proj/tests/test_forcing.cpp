#include <gtest/gtest.h>

#include <random>

#include "cantor/catalog.hpp"
#include "cantor/condition_syntax.hpp"
#include "cantor/error.hpp"
#include "cantor/suites.hpp"
#include "oracles.hpp"

using namespace cantor;

namespace {

const std::vector<Family> kLinked{Family::Cohen, Family::Hechler, Family::EvDiff, Family::LaverF, Family::MathiasF};

// Membership written out from the definitions of the families.
bool defined_member(const ForcingCondition& c, const Node& t) {
  const auto beyond = [&](const Node& s, auto&& ok) {
    if (!comparable(s, t)) return false;
    for (std::size_t n = s.length(); n < t.length(); ++n)
      if (!ok(n, t[n])) return false;
    return true;
  };
  if (const auto* x = std::get_if<CohenCond>(&c)) return comparable(x->s, t);
  if (const auto* x = std::get_if<HechlerCond>(&c)) return beyond(x->s, [&](std::size_t n, Symbol v) { return v >= x->f(n); });
  if (const auto* x = std::get_if<EvDiffCond>(&c))
    return beyond(x->s, [&](std::size_t n, Symbol v) {
      for (const Rule& f : x->fs)
        if (f(n) == v) return false;
      return true;
    });
  if (const auto* x = std::get_if<LaverCond>(&c))
    return beyond(x->s, [&](std::size_t, Symbol v) { return x->successors.contains(v); });
  if (const auto* x = std::get_if<MathiasCond>(&c)) {
    if (!comparable(x->s, t)) return false;
    for (std::size_t n = 0; n < t.length(); ++n)
      if (t[n] == 1 && !x->n.contains(n)) return false;
    return true;
  }
  ADD_FAILURE() << "no definition for " << to_string(c);
  return false;
}

std::vector<Node> probe_nodes(Alphabet alphabet, std::size_t depth, Symbol top) {
  std::vector<Node> out{Node{}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k].length() == depth) continue;
    for (Symbol s = 0; s <= (alphabet == Alphabet::Binary ? 1 : top); ++s) out.push_back(out[k].child(s));
  }
  return out;
}

}  // namespace

TEST(Forcing, MembershipMatchesDefinitions) {
  std::mt19937_64 rng(31);
  for (Family f : kLinked) {
    for (int k = 0; k < 40; ++k) {
      const ForcingCondition c = random_condition(f, rng);
      for (const Node& t : probe_nodes(cond_alphabet(c), 5, 5))
        ASSERT_EQ(cond_member(c, t), defined_member(c, t)) << to_string(c) << " at " << to_string(t, cond_alphabet(c));
    }
  }
}

TEST(Forcing, ConditionTreesSplitExactlyWhereTheFamilyAllows) {
  std::mt19937_64 rng(37);
  for (Family f : kLinked) {
    for (int k = 0; k < 20; ++k) {
      const ForcingCondition c = random_condition(f, rng);
      const SymbolicTree tree = cond_tree(c);
      const Node s = *cond_stem(c);
      for (const Node& t : enumerate_nodes(tree, s.length() + 4, std::size_t{1} << 20)) {
        const auto kids = tree.children(t);
        ASSERT_FALSE(kids.empty()) << to_string(c);
        bool splits = s.is_prefix_of(t);
        if (const auto* m = std::get_if<MathiasCond>(&c)) splits = splits && m->n.contains(t.length());
        if (splits) ASSERT_GE(kids.size(), 2u) << to_string(c) << " " << to_string(t, tree.alphabet());
        else ASSERT_EQ(kids.size(), 1u) << to_string(c) << " " << to_string(t, tree.alphabet());
      }
    }
  }
}

TEST(Forcing, StemsAndCanonicalForms) {
  EXPECT_EQ(*cond_stem(make_hechler({2, 3}, Rule::constant(1))), (Node{2, 3}));
  // Positions 0 and 1 are outside N, so the stem is forced to 00.
  EXPECT_EQ(*cond_stem(make_mathias({}, parse_natset("frechet-excl:0,1"))), (Node{0, 0}));
  EXPECT_EQ(*cond_stem(make_silver(parse_natset("mod:3:2"), parse_natset("plain-mod:3:0"))), (Node{1, 0}));
  EXPECT_EQ(std::get<HechlerCond>(make_hechler({4}, Rule::affine(1, 1))).f, Rule({0}, 2, 1));
  EXPECT_THROW(make_mathias({1, 0}, parse_natset("frechet-excl:0,4")), InvalidArgument);
  EXPECT_THROW(make_laver({}, parse_natset("plain-mod:2:0")), InvalidArgument);
  EXPECT_THROW(make_silver(parse_natset("none"), parse_natset("none")), InvalidArgument);
}

TEST(Forcing, FamilyFlags) {
  EXPECT_TRUE(is_strongly_linked(make_cohen({})));
  EXPECT_TRUE(is_strongly_linked(make_laver({}, NatSet())));
  EXPECT_FALSE(is_strongly_linked(make_laver({}, parse_natset("mod:2:0"))));
  EXPECT_FALSE(is_strongly_linked(make_mathias({}, parse_natset("mod:2:0"))));
  EXPECT_FALSE(is_strongly_linked(top_condition(Family::Sacks)));
  EXPECT_FALSE(is_strongly_linked(top_condition(Family::SilverF)));
  EXPECT_TRUE(shift_invariant(make_mathias({}, parse_natset("mod:2:0"))));
  EXPECT_FALSE(shift_invariant(make_mathias({}, parse_natset("fixed-mod:2:0"))));
  EXPECT_THROW(cond_shift(Node{0}, make_mathias({}, parse_natset("fixed-mod:2:0"))), NotShiftInvariant);
  EXPECT_THROW(cond_member(make_mathias({}, NatSet()), Node{2}), AlphabetMismatch);
}

TEST(Forcing, ShiftAndRestrictAgreeWithTreeOperators) {
  std::mt19937_64 rng(41);
  for (Family f : kLinked) {
    for (int k = 0; k < 20; ++k) {
      const ForcingCondition c = random_condition(f, rng);
      const Alphabet alpha = cond_alphabet(c);
      const Node s = alpha == Alphabet::Binary ? Node{1, 0} : Node{3, 0};
      const SymbolicTree shifted = shift_tree(s, cond_tree(c));
      const ForcingCondition sc = cond_shift(s, c);
      for (const Node& t : probe_nodes(alpha, 6, 5)) ASSERT_EQ(cond_member(sc, t), shifted.contains(t)) << to_string(c);
      const Node u = cond_tree(c).children(*cond_stem(c)).back();
      const ForcingCondition rc = cond_restrict(c, u);
      const SymbolicTree restricted = restrict_to(cond_tree(c), u);
      for (const Node& t : probe_nodes(alpha, 6, 5)) ASSERT_EQ(cond_member(rc, t), restricted.contains(t)) << to_string(c);
    }
  }
}

TEST(Forcing, SilverShiftMatchesTreeShift) {
  const ForcingCondition c = make_silver(parse_natset("mod:2:0"), parse_natset("plain-mod:4:1"));
  const Node s{1, 1, 0};
  const SymbolicTree shifted = shift_tree(s, cond_tree(c));
  const ForcingCondition sc = cond_shift(s, c);
  for (const Node& t : probe_nodes(Alphabet::Binary, 9, 1)) ASSERT_EQ(cond_member(sc, t), shifted.contains(t));
}

TEST(Meet, FrozenExamples) {
  const MeetResult r = strongly_linked_meet(parse_condition("hechler s= f=const:1"), parse_condition("hechler s=3 f=const:2"));
  ASSERT_TRUE(r.meet.has_value());
  const auto& h = std::get<HechlerCond>(*r.meet);
  EXPECT_EQ(h.s, Node{3});
  for (std::size_t n = 1; n < 20; ++n) EXPECT_EQ(h.f(n), 2u);

  const MeetResult clash = strongly_linked_meet(parse_condition("hechler s= f=const:4"), parse_condition("hechler s=3 f=const:2"));
  EXPECT_FALSE(clash.meet.has_value());
  EXPECT_EQ(clash.witness, Node{3});

  const MeetResult laver = strongly_linked_meet(parse_condition("laver s=1 N=frechet-excl:1,3,4"),
                                                parse_condition("laver s=1,2,2,2 N=frechet-excl:0,2,4"));
  ASSERT_TRUE(laver.meet.has_value());
  EXPECT_EQ(*cond_stem(*laver.meet), (Node{1, 2, 2, 2}));
  EXPECT_TRUE(compatible_bruteforce(parse_condition("laver s=1 N=frechet-excl:1,3,4"),
                                    parse_condition("laver s=1,2,2,2 N=frechet-excl:0,2,4"), 8));

  EXPECT_THROW(strongly_linked_meet(make_cohen({}), make_hechler({}, Rule::constant(0))), InvalidArgument);
  EXPECT_THROW(strongly_linked_meet(make_laver({}, parse_natset("mod:2:0")), make_laver({}, NatSet())),
               NotStronglyLinkedFamily);
}

TEST(Meet, FuzzAgainstIntersection) {
  for (Family f : kLinked) {
    const SuiteCase c = meet_fuzz(f, 60, 8, 99);
    EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  }
}

TEST(ConditionSyntax, RoundTrip) {
  for (const char* line : {"cohen s=2,0", "hechler s=2,3 f=const:1", "evdiff s= f0=const:0 f1=affine:1,1",
                           "laver s= N=frechet-excl:0", "mathias s=00 N=frechet-excl:0,3", "silver free=mod:2:1 ones=none"}) {
    const ForcingCondition c = parse_condition(line);
    EXPECT_EQ(to_string(parse_condition(to_string(c))), to_string(c)) << line;
  }
  EXPECT_EQ(to_string(parse_condition("cohen s=2,0")), "cohen s=2,0");
  EXPECT_EQ(family(parse_condition("sacks tree=catalog:full")), Family::Sacks);
  EXPECT_EQ(family(parse_condition("random tree=catalog:fat-cantor-3")), Family::Random);
}

TEST(ConditionSyntax, Errors) {
  EXPECT_THROW(parse_condition(""), ParseError);
  EXPECT_THROW(parse_condition("poodle s="), ParseError);
  EXPECT_THROW(parse_condition("hechler s=1 g=const:1"), ParseError);
  EXPECT_THROW(parse_condition("hechler s=1 f=wiggle"), ParseError);
  EXPECT_THROW(parse_condition("random tree=catalog:single-branch"), InvalidArgument);
  EXPECT_THROW(parse_condition("mathias s=10 N=frechet-excl:0,4"), InvalidArgument);
}
