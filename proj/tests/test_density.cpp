#include <gtest/gtest.h>

#include <random>

#include "cantor/catalog.hpp"
#include "cantor/condition_syntax.hpp"
#include "cantor/density.hpp"
#include "cantor/error.hpp"
#include "cantor/suites.hpp"

using namespace cantor;

TEST(StronglyLinked, FrozenVerdicts) {
  const ForcingCondition c = parse_condition("hechler s=2 f=const:1");
  const DensityVerdict in = strongly_linked_density(c, Node{2, 5});
  EXPECT_EQ(in.kind, VerdictKind::Dense);
  EXPECT_EQ(in.depth, 1u);
  EXPECT_EQ(to_string(in), "dense n_x=1");

  const DensityVerdict out = strongly_linked_density(c, Node{2, 0});
  EXPECT_EQ(out.kind, VerdictKind::NotDense);
  ASSERT_TRUE(out.witness.has_value());
  ASSERT_TRUE(out.pattern.has_value());
  EXPECT_EQ(out.pattern->start, 2u);  // first n with u↾n outside the tree

  EXPECT_EQ(strongly_linked_density(c, Node{}).kind, VerdictKind::Unknown);
  EXPECT_EQ(strongly_linked_density(c, Node{3}).kind, VerdictKind::NotDense);
  EXPECT_THROW(strongly_linked_density(top_condition(Family::Sacks), Node{}), NotStronglyLinkedFamily);
}

TEST(StronglyLinked, DenseNodesAreUpwardClosed) {
  std::mt19937_64 rng(43);
  for (Family f : {Family::Cohen, Family::Hechler, Family::EvDiff, Family::LaverF, Family::MathiasF}) {
    for (int k = 0; k < 20; ++k) {
      const ForcingCondition c = random_condition(f, rng);
      const SymbolicTree tree = cond_tree(c);
      for (const Node& u : enumerate_nodes(tree, 7, std::size_t{1} << 20)) {
        if (strongly_linked_density(c, u).kind != VerdictKind::Dense) continue;
        for (const Node& v : tree.children(u))
          ASSERT_EQ(strongly_linked_density(c, v).kind, VerdictKind::Dense) << to_string(c);
      }
    }
  }
}

TEST(StronglyLinked, DenseSetsAreMonotone) {
  // [T_{s,f≥2}] ⊆ [T_{s,f≥1}]
  const ForcingCondition small = parse_condition("hechler s=1 f=const:2");
  const ForcingCondition large = parse_condition("hechler s=1 f=const:1");
  for (const Node& u : enumerate_nodes(cond_tree(large), 6)) {
    if (strongly_linked_density(small, u).kind == VerdictKind::Dense)
      EXPECT_EQ(strongly_linked_density(large, u).kind, VerdictKind::Dense);
  }
}

TEST(NullDensity, TripleOnesComplementIsDenseAlongZeros) {
  const DensityVerdict v = null_density_test(catalog_target("B-triple-ones-complement"), Point{}, 10);
  EXPECT_EQ(v.kind, VerdictKind::Dense);
  EXPECT_EQ(v.depth, 0u);
  ASSERT_EQ(v.rho.size(), 11u);
  for (const Rational& r : v.rho) EXPECT_EQ(r, Rational(3, 4));
}

TEST(NullDensity, TripleOnesIsNotAShiftDensityPoint) {
  const DensityVerdict v = null_density_test(catalog_target("A-triple-ones"), Point{}, 10);
  EXPECT_EQ(v.kind, VerdictKind::NotDense);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(to_string(*v.witness), "random tree=catalog:B-triple-ones-complement");
  const SymbolicTree b = cond_tree(*v.witness);
  EXPECT_GE(b.weight(Node{}), Rational(1, 2));
  for (const Rational& r : v.rho) EXPECT_EQ(r, Rational(1, 4));
  for (std::size_t n = 0; n <= 10; ++n) {
    ASSERT_TRUE(v.pattern->contains(n));
    // σ_{0^n}(B) stays inside B, the complement of A.
    for (const Node& t : level(shift_tree(repeat(0, n), b), Node{}, n + 3)) ASSERT_TRUE(b.contains(t));
  }
}

TEST(NullDensity, FullSpaceAndEmptyNeighbourhoods) {
  const DensityVerdict full = null_density_test(catalog_target("full"), Point{{1, 0}, {1}}, 6);
  EXPECT_EQ(full.kind, VerdictKind::Dense);
  EXPECT_EQ(full.depth, 0u);
  for (const Rational& r : full.rho) EXPECT_EQ(r, Rational(1));
  // 111 leaves B at depth 3.
  const DensityVerdict gone = null_density_test(catalog_target("B-triple-ones-complement"), Point{{}, {1}}, 6);
  EXPECT_EQ(gone.kind, VerdictKind::NotDense);
  EXPECT_EQ(gone.pattern->start, 3u);
  // Past 111 the point sits inside the open set A.
  EXPECT_EQ(null_density_test(catalog_target("A-triple-ones"), Point{{}, {1}}, 6).kind, VerdictKind::Dense);
}

TEST(NullDensity, HorizonOnlyEvidenceIsUnknown) {
  const DensityVerdict v = null_density_test(catalog_target("fat-cantor"), Point{}, 4);
  EXPECT_EQ(v.kind, VerdictKind::Unknown);
  EXPECT_EQ(v.depth, 4u);
  EXPECT_EQ(to_string(v), "unknown depth=4");
}

TEST(NullDensity, VerdictsAreConsistentAcrossTheCatalog) {
  for (const char* name : {"full", "B-triple-ones-complement", "A-triple-ones", "fat-cantor-3", "A-odd-ones"}) {
    const TargetSet target = catalog_target(name);
    for (const Node& prefix : enumerate_nodes(catalog_tree("full"), 4)) {
      for (const Node& period : {Node{}, Node{1}, Node{0, 1}}) {
        const DensityVerdict v = null_density_test(target, Point{prefix, period}, 8);
        if (v.kind == VerdictKind::Dense && !v.rho.empty())
          for (std::size_t n = v.depth; n < v.rho.size(); ++n) EXPECT_GT(v.rho[n], Rational(1, 2)) << name;
        if (v.kind == VerdictKind::NotDense) EXPECT_TRUE(v.witness.has_value()) << name;
      }
    }
  }
}

TEST(Suites, CounterexamplesPassAtDepthTen) {
  const SuiteReport r = counterexample_suite(10);
  EXPECT_EQ(r.summary(), "PASS 5/5");
  for (const SuiteCase& c : r.cases) EXPECT_GT(c.checks, 0u) << c.name;
  EXPECT_THROW(counterexample_suite(3), InvalidArgument);
}

TEST(Suites, PositiveSuiteSmallSample) {
  const SuiteReport r = density_positive_suite(7, 10, 5);
  for (const SuiteCase& c : r.cases) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}

TEST(Suites, ReportSummary) {
  SuiteReport r;
  r.cases.push_back({"a", true, 1, ""});
  r.cases.push_back({"b", false, 1, "broken"});
  EXPECT_FALSE(r.all_pass());
  EXPECT_EQ(r.summary(), "FAIL 1/2");
}
