#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kneading/atlas.hpp"
#include "kneading/errors.hpp"
#include "kneading/hubbard_tree.hpp"

using namespace kneading;

namespace {

KneadingSequence seq(const char* text) { return KneadingSequence::parse(text); }

std::set<std::string> names(const HubbardTree& t, const std::vector<VertexId>& ids) {
  std::set<std::string> out;
  for (auto v : ids) out.insert(t.vertices[v].name());
  return out;
}

std::vector<std::string> edge_names(const HubbardTree& t) {
  std::vector<std::string> out;
  for (const auto& [a, b] : t.edges) out.push_back(t.vertices[a].name() + "-" + t.vertices[b].name());
  return out;
}

VertexId named(const HubbardTree& t, const std::string& name) {
  for (VertexId v = 0; v < t.size(); ++v) {
    if (t.vertices[v].name() == name) return v;
  }
  throw std::out_of_range(name);
}

}  // namespace

TEST(MarkedPoints, Counts) {
  EXPECT_EQ(marked_points(seq("10110*")).size(), 9u);
  EXPECT_EQ(marked_points(seq("10*")).size(), 3u);
  EXPECT_EQ(marked_points(seq("1*")).size(), 2u);
  EXPECT_EQ(marked_points(seq("1011010110*")).size(), 16u);
}

TEST(BuildTree, EvilPeriodSix) {
  const auto t = build_tree(seq("10110*"));
  EXPECT_EQ(t.size(), 9u);
  EXPECT_EQ(t.edges.size(), 8u);
  EXPECT_EQ(names(t, t.endpoints()), (std::set<std::string>{"c1", "c2", "c3", "c4", "c5"}));
  EXPECT_EQ(edge_names(t), (std::vector<std::string>{"c0-z3_1", "c0-z3_2", "c1-z3_0", "c2-z3_1", "c3-z3_2", "c4-z3_0",
                                                     "c5-z3_1", "z3_0-z3_2"}));
  EXPECT_TRUE(verify_axioms(t).ok());
}

TEST(BuildTree, TamePeriodEleven) {
  const auto t = build_tree(seq("1011010110*"));
  EXPECT_TRUE(verify_axioms(t).ok());
  EXPECT_EQ(t.edges.size() + 1, t.size());
  std::size_t periodic = 0, preperiodic = 0;
  for (const auto& p : t.vertices) {
    periodic += p.role == PointRole::periodic_branch;
    preperiodic += p.role == PointRole::preperiodic_branch;
  }
  EXPECT_EQ(periodic, 5u);
  EXPECT_EQ(preperiodic, 3u);
  for (auto v : t.endpoints()) EXPECT_EQ(t.vertices[v].role, PointRole::critical_orbit);
  const auto z = named(t, "z5_0");
  EXPECT_EQ(t.degree(z), 3u);
  // The characteristic point sits on the arc from c0 to c1.
  const auto arc = t.path(t.critical, t.critical_value());
  EXPECT_NE(std::find(arc.begin(), arc.end(), z), arc.end());
}

TEST(BuildTree, SmallTrees) {
  const auto two = build_tree(seq("1*"));
  EXPECT_EQ(edge_names(two), (std::vector<std::string>{"c0-c1"}));
  // Period 3 has three critical-orbit points; c0 sits between c1 and c2.
  const auto three = build_tree(seq("10*"));
  EXPECT_EQ(edge_names(three), (std::vector<std::string>{"c0-c1", "c0-c2"}));
  EXPECT_TRUE(verify_axioms(three).ok());
}

TEST(BuildTree, AlphaWithFourArms) {
  const auto t = build_tree(seq("111*"));
  const auto alpha = named(t, "z1_0");
  EXPECT_EQ(t.degree(alpha), 4u);
  const auto orbits = classify_orbits(t);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].characteristic, alpha);
  EXPECT_EQ(orbits[0].type, OrbitType::tame);
  EXPECT_EQ(orbits[0].permutation.cycles().size(), 1u);
  EXPECT_EQ(orbits[0].permutation.cycles()[0].size(), 4u);
}

TEST(VerifyAxioms, DeletedEdgeIsCaught) {
  auto t = build_tree(seq("10110*"));
  t.edges.erase(t.edges.begin() + 3);
  const auto report = verify_axioms(t);
  EXPECT_FALSE(report.ok());
  ASSERT_NE(report.find("tree"), nullptr);
  EXPECT_FALSE(report.find("tree")->passed);
}

TEST(VerifyAxioms, ReportsEveryCheck) {
  const auto report = verify_axioms(build_tree(seq("1011010110*")));
  for (const char* name : {"tree", "dynamics", "endpoints_on_critical_orbit", "critical_value_is_endpoint",
                           "critical_point_degree", "distinct_itineraries", "at_most_two_preimages", "expansivity",
                           "branch_degree_constant_on_cycles", "branch_period_below_critical_period",
                           "local_homeomorphism", "surjectivity"}) {
    ASSERT_NE(report.find(name), nullptr) << name;
    EXPECT_TRUE(report.find(name)->passed) << name;
  }
}

TEST(CharacteristicPoint, Examples) {
  auto t = build_tree(seq("10110*"));
  auto orbits = classify_orbits(t);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(t.vertices[orbits[0].characteristic].itinerary, Itinerary::parse("(101)"));
  EXPECT_EQ(t.toward(orbits[0].characteristic, t.critical_value()), t.critical_value());

  t = build_tree(seq("1011010110*"));
  orbits = classify_orbits(t);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(t.vertices[orbits[0].characteristic].itinerary, Itinerary::parse("(10110)"));
}

TEST(ArmPermutation, EvilOrbitFixesArmTowardCriticalPoint) {
  const auto t = build_tree(seq("10110*"));
  const auto orbits = classify_orbits(t);
  const auto& perm = orbits[0].permutation;
  EXPECT_EQ(perm.type, OrbitType::evil);
  EXPECT_EQ(perm.image[perm.arm_to_critical], perm.arm_to_critical);
  EXPECT_EQ(t.vertices[perm.arms[perm.arm_to_critical]].name(), "z3_2");
  auto cycles = perm.cycles();
  std::sort(cycles.begin(), cycles.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
  ASSERT_EQ(cycles.size(), 2u);
  EXPECT_EQ(cycles[0].size(), 1u);
  EXPECT_EQ(cycles[1].size(), 2u);
}

TEST(ArmPermutation, TameOrbitIsThreeCycle) {
  const auto t = build_tree(seq("1011010110*"));
  const auto orbits = classify_orbits(t);
  const auto& perm = orbits[0].permutation;
  EXPECT_EQ(perm.type, OrbitType::tame);
  ASSERT_EQ(perm.cycles().size(), 1u);
  EXPECT_EQ(perm.cycles()[0].size(), 3u);
}

TEST(ClassifyOrbits, Examples) {
  EXPECT_TRUE(classify_orbits(build_tree(seq("10*"))).empty());
  const auto o = classify_orbits(build_tree(seq("1011010110*")));
  ASSERT_EQ(o.size(), 1u);
  EXPECT_EQ(o[0].period, 5u);
  EXPECT_EQ(o[0].arms, 3u);
}

// Every tree up to period 10: axioms hold, observed spectrum equals the
// prediction, the characteristic prefix law holds, and the tree built from
// the critical orbit alone is the same tree.
TEST(BuildTree, SweepUpToPeriod10) {
  for (const auto& nu : star_periodic_sequences(10, false)) {
    const auto t = build_tree(nu);
    const auto report = verify_axioms(t);
    for (const auto& c : report.checks) ASSERT_TRUE(c.passed) << nu.str() << " " << c.name << " " << c.detail;
    std::vector<ObservedOrbit> orbits;
    ASSERT_NO_THROW(orbits = classify_orbits(t)) << nu.str();
    for (const auto& o : orbits) {
      const auto prefix = t.vertices[o.characteristic].itinerary.prefix(o.period);
      const Word expected(nu.period_word().begin(), nu.period_word().begin() + static_cast<std::ptrdiff_t>(o.period));
      EXPECT_EQ(prefix, expected) << nu.str();
    }
    EXPECT_EQ(to_json(build_tree(nu, {.seed_spectrum = false})), to_json(t)) << nu.str();
  }
}

TEST(BuildTree, Deterministic) {
  for (const char* s : {"10110*", "1011010110*", "1101101*"}) {
    EXPECT_EQ(to_json(build_tree(seq(s))).dump(), to_json(build_tree(seq(s))).dump());
    EXPECT_EQ(to_dot(build_tree(seq(s))), to_dot(build_tree(seq(s))));
  }
}

TEST(BuildTree, RejectsPeriodicInput) { EXPECT_THROW(build_tree(seq("10")), DomainError); }
