#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kneading/atlas.hpp"
#include "kneading/embedding.hpp"
#include "kneading/errors.hpp"

using namespace kneading;

namespace {

KneadingSequence seq(const char* text) { return KneadingSequence::parse(text); }

// All cyclic orders of a neighbour list: first element fixed, rest permuted.
std::vector<CyclicOrder> cyclic_orders(CyclicOrder arms) {
  std::sort(arms.begin(), arms.end());
  std::vector<CyclicOrder> out;
  do out.push_back(arms);
  while (std::next_permutation(arms.begin() + 1, arms.end()));
  return out;
}

std::size_t phi_product(const HubbardTree& t) {
  std::size_t p = 1;
  for (const auto& o : observe_branch_orbits(t)) p *= o.type == OrbitType::evil ? 0 : euler_phi(o.arms);
  return p;
}

// Distinct valid embeddings found by trying every cyclic order at every
// characteristic point and propagating the rest.
std::size_t count_by_characteristic_orders(const HubbardTree& t) {
  const auto orbits = observe_branch_orbits(t);
  std::vector<std::vector<CyclicOrder>> choices;
  for (const auto& o : orbits) choices.push_back(cyclic_orders(t.adjacency()[o.characteristic]));
  std::set<std::vector<CyclicOrder>> found;
  std::vector<std::size_t> cursor(orbits.size(), 0);
  while (true) {
    std::map<VertexId, CyclicOrder> anchors;
    for (std::size_t i = 0; i < orbits.size(); ++i) anchors[orbits[i].characteristic] = choices[i][cursor[i]];
    if (auto e = propagate_embedding(t, anchors)) found.insert(e->cyclic_order);
    std::size_t i = orbits.size();
    while (i > 0 && ++cursor[i - 1] == choices[i - 1].size()) cursor[--i] = 0;
    if (i == 0) break;
  }
  return found.size();
}

// Brute force over cyclic orders at every vertex of degree >= 3, with no
// propagation at all. Returns nullopt above `cap` assignments.
std::optional<std::size_t> count_by_brute_force(const HubbardTree& t, std::size_t cap) {
  const auto adj = t.adjacency();
  std::vector<VertexId> branch;
  std::vector<std::vector<CyclicOrder>> choices;
  std::size_t total = 1;
  for (VertexId v = 0; v < t.size(); ++v) {
    if (adj[v].size() < 3) continue;
    branch.push_back(v);
    choices.push_back(cyclic_orders(adj[v]));
    total *= choices.back().size();
    if (total > cap) return std::nullopt;
  }
  EmbeddedTree e{t, adj};
  std::size_t valid = 0;
  std::vector<std::size_t> cursor(branch.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < branch.size(); ++i) e.cyclic_order[branch[i]] = choices[i][cursor[i]];
    valid += verify_embedding(e);
    std::size_t i = branch.size();
    while (i > 0 && ++cursor[i - 1] == choices[i - 1].size()) cursor[--i] = 0;
    if (i == 0) break;
  }
  return valid;
}

}  // namespace

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(3), 2u);
  EXPECT_EQ(euler_phi(4), 2u);
  EXPECT_EQ(euler_phi(2), 1u);
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(12), 4u);
  EXPECT_THROW(euler_phi(0), DomainError);
}

TEST(CountEmbeddings, Examples) {
  EXPECT_EQ(count_embeddings(build_tree(seq("10110*"))), 0u);
  EXPECT_EQ(count_embeddings(build_tree(seq("1011010110*"))), 2u);
  EXPECT_EQ(count_embeddings(build_tree(seq("10*"))), 1u);
  EXPECT_EQ(count_embeddings(build_tree(seq("111*"))), 2u);
}

TEST(GenerateEmbedding, TamePeriodElevenRotations) {
  const auto t = build_tree(seq("1011010110*"));
  const auto orbits = classify_orbits(t);
  const auto z = orbits[0].characteristic;
  const auto e1 = generate_embedding(t, {{z, 1}});
  const auto e2 = generate_embedding(t, {{z, 2}});
  EXPECT_TRUE(verify_embedding(e1));
  EXPECT_TRUE(verify_embedding(e2));
  EXPECT_FALSE(e1 == e2);
  for (VertexId v : orbits[0].orbit) EXPECT_NE(e1.cyclic_order[v], e2.cyclic_order[v]);
}

TEST(GenerateEmbedding, EvilOrbitIsRejected) {
  const auto t = build_tree(seq("10110*"));
  try {
    generate_embedding(t, {});
    FAIL() << "evil tree embedded";
  } catch (const EmbeddingError& e) {
    EXPECT_EQ(e.reason(), EmbeddingError::Reason::evil_present);
    EXPECT_EQ(e.evil_periods(), (std::vector<std::size_t>{3}));
  }
  EXPECT_TRUE(all_embeddings(t).empty());
}

TEST(GenerateEmbedding, RotationMustBeUnit) {
  const auto t = build_tree(seq("111*"));
  const auto z = classify_orbits(t)[0].characteristic;
  for (std::size_t s : {0u, 2u, 4u}) {
    try {
      generate_embedding(t, {{z, s}});
      FAIL() << "rotation " << s << " accepted";
    } catch (const EmbeddingError& e) {
      EXPECT_EQ(e.reason(), EmbeddingError::Reason::not_coprime);
    }
  }
  EXPECT_TRUE(verify_embedding(generate_embedding(t, {{z, 3}})));
  try {
    generate_embedding(t, {});
    FAIL() << "missing rotation accepted";
  } catch (const EmbeddingError& e) {
    EXPECT_EQ(e.reason(), EmbeddingError::Reason::missing_rotation);
  }
}

TEST(VerifyEmbedding, MutationAlongOrbitIsCaught) {
  const auto t = build_tree(seq("1011010110*"));
  const auto orbit = classify_orbits(t)[0].orbit;
  auto e = generate_embedding(t, {{orbit[0], 1}});
  auto& order = e.cyclic_order[orbit[2]];
  std::swap(order[1], order[2]);
  EXPECT_FALSE(verify_embedding(e));
}

TEST(VerifyEmbedding, OrdersMustListIncidentEdges) {
  const auto t = build_tree(seq("1011010110*"));
  auto e = all_embeddings(t).front();
  e.cyclic_order[0].push_back(e.cyclic_order[0].front());
  EXPECT_FALSE(verify_embedding(e));
}

TEST(VerifyEmbedding, TreeWithoutBranchPoints) {
  const auto t = build_tree(seq("10*"));
  EmbeddedTree e{t, t.adjacency()};
  EXPECT_TRUE(verify_embedding(e));
  std::reverse(e.cyclic_order[0].begin(), e.cyclic_order[0].end());
  EXPECT_TRUE(verify_embedding(e));
}

TEST(AllEmbeddings, TamePeriodElevenHasTwo) {
  const auto all = all_embeddings(build_tree(seq("1011010110*")));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_FALSE(all[0] == all[1]);
}

TEST(Embedding, ExhaustionUpToPeriod8) {
  std::size_t brute_checked = 0;
  for (const auto& nu : star_periodic_sequences(8, false)) {
    const auto t = build_tree(nu);
    const std::size_t expected = phi_product(t);
    ASSERT_EQ(count_embeddings(t), expected) << nu.str();
    EXPECT_LT(expected, nu.period()) << nu.str();

    const auto all = all_embeddings(t);
    std::set<std::vector<CyclicOrder>> distinct;
    for (const auto& e : all) {
      ASSERT_TRUE(verify_embedding(e)) << nu.str();
      distinct.insert(e.cyclic_order);
    }
    EXPECT_EQ(distinct.size(), expected) << nu.str();
    EXPECT_EQ(count_by_characteristic_orders(t), expected) << nu.str();

    if (const auto brute = count_by_brute_force(t, 200000)) {
      EXPECT_EQ(*brute, expected) << nu.str();
      ++brute_checked;
    }
  }
  EXPECT_GT(brute_checked, 100u);
}

TEST(Embedding, CensusByExactPeriod) {
  const std::vector<std::pair<std::size_t, std::size_t>> census{{2, 1}, {3, 3}, {4, 6}, {5, 15}, {6, 27}};
  for (const auto& [n, total] : census) {
    std::size_t sum = 0;
    for (const auto& nu : star_periodic_sequences(n, true)) sum += count_embeddings(build_tree(nu));
    EXPECT_EQ(sum, total) << "period " << n;
  }
}

TEST(Embedding, PeriodFourBreakdown) {
  std::vector<std::size_t> counts;
  for (const auto& nu : star_periodic_sequences(4, true)) counts.push_back(count_embeddings(build_tree(nu)));
  std::sort(counts.begin(), counts.end());
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 1, 2, 2}));
}
