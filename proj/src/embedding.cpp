#include "kneading/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kneading/errors.hpp"

namespace kneading {

CyclicOrder canonical_rotation(CyclicOrder order) {
  if (!order.empty()) std::rotate(order.begin(), std::min_element(order.begin(), order.end()), order.end());
  return order;
}

std::size_t euler_phi(std::size_t q) {
  if (q == 0) throw DomainError("phi is defined for q >= 1");
  if (q == 1) return 1;
  std::size_t count = 0;
  for (std::size_t i = 1; i < q; ++i) count += std::gcd(i, q) == 1;
  return count;
}

std::size_t count_embeddings(const HubbardTree& tree) {
  std::size_t product = 1;
  for (const auto& orbit : observe_branch_orbits(tree)) {
    if (orbit.type == OrbitType::evil) return 0;
    product *= euler_phi(orbit.arms);
  }
  return product;
}

namespace {

// Positions, in the order at f(v), of the image directions of v's arms.
std::optional<std::vector<std::size_t>> image_positions(const HubbardTree& tree, VertexId v, const CyclicOrder& at_v,
                                                        const CyclicOrder& at_image) {
  const VertexId fv = tree.dynamics[v];
  std::vector<std::size_t> pos;
  for (VertexId w : at_v) {
    const VertexId fw = tree.dynamics[w];
    if (fw == fv) return std::nullopt;
    const auto it = std::find(at_image.begin(), at_image.end(), tree.toward(fv, fw));
    if (it == at_image.end()) return std::nullopt;
    pos.push_back(static_cast<std::size_t>(it - at_image.begin()));
  }
  return pos;
}

bool cyclically_increasing(const std::vector<std::size_t>& pos) {
  if (pos.size() < 3) return std::set<std::size_t>(pos.begin(), pos.end()).size() == pos.size();
  std::size_t descents = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const std::size_t a = pos[i], b = pos[(i + 1) % pos.size()];
    if (a == b) return false;
    descents += b < a;
  }
  return descents == 1;
}

CyclicOrder pull_back(const HubbardTree& tree, VertexId v, const std::vector<VertexId>& arms, const CyclicOrder& at_image) {
  const auto pos = image_positions(tree, v, arms, at_image);
  if (!pos || std::set<std::size_t>(pos->begin(), pos->end()).size() != arms.size())
    throw StructuralError("dynamics is not injective on the arms at " + tree.vertices[v].name());
  std::vector<std::size_t> idx(arms.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return (*pos)[a] < (*pos)[b]; });
  CyclicOrder order;
  for (std::size_t i : idx) order.push_back(arms[i]);
  return canonical_rotation(std::move(order));
}

}  // namespace

std::optional<EmbeddedTree> propagate_embedding(const HubbardTree& tree,
                                                const std::map<VertexId, CyclicOrder>& characteristic_orders) {
  const auto adj = tree.adjacency();
  std::vector<std::optional<CyclicOrder>> orders(tree.size());
  for (VertexId v = 0; v < tree.size(); ++v) {
    if (adj[v].size() <= 2) orders[v] = adj[v];
  }
  for (const auto& [v, order] : characteristic_orders) {
    CyclicOrder sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (v >= tree.size() || sorted != adj[v]) throw DomainError("cyclic order at a vertex must list its neighbours");
    orders[v] = canonical_rotation(order);
  }

  // Each sweep assigns every vertex whose image is already ordered.
  for (bool progress = true; progress;) {
    progress = false;
    for (VertexId v = 0; v < tree.size(); ++v) {
      if (orders[v] || !orders[tree.dynamics[v]]) continue;
      orders[v] = pull_back(tree, v, adj[v], *orders[tree.dynamics[v]]);
      progress = true;
    }
  }

  EmbeddedTree out{tree, {}};
  for (VertexId v = 0; v < tree.size(); ++v) {
    if (!orders[v])
      throw EmbeddingError(EmbeddingError::Reason::missing_rotation,
                           "no cyclic order reaches " + tree.vertices[v].name() + "; a characteristic point is unanchored");
    out.cyclic_order.push_back(std::move(*orders[v]));
  }
  if (!verify_embedding(out)) return std::nullopt;
  return out;
}

EmbeddedTree generate_embedding(const HubbardTree& tree, const std::map<VertexId, std::size_t>& rotations) {
  const auto orbits = observe_branch_orbits(tree);
  std::vector<std::size_t> evil;
  for (const auto& o : orbits) {
    if (o.type == OrbitType::evil) evil.push_back(o.period);
  }
  if (!evil.empty()) {
    std::string periods;
    for (auto m : evil) periods += (periods.empty() ? "" : ", ") + std::to_string(m);
    throw EmbeddingError(EmbeddingError::Reason::evil_present,
                         tree.nu.str() + " has evil orbits of period " + periods + " and cannot be embedded", evil);
  }

  std::map<VertexId, CyclicOrder> anchors;
  for (const auto& o : orbits) {
    const auto it = rotations.find(o.characteristic);
    if (it == rotations.end())
      throw EmbeddingError(EmbeddingError::Reason::missing_rotation,
                           "no rotation given for " + tree.vertices[o.characteristic].name());
    const std::size_t q = o.arms, s = it->second;
    if (s == 0 || s >= q || std::gcd(s, q) != 1)
      throw EmbeddingError(EmbeddingError::Reason::not_coprime,
                           "rotation " + std::to_string(s) + " is not a unit modulo " + std::to_string(q));
    const auto& perm = o.permutation;
    CyclicOrder slots(q);
    std::size_t arm = perm.arm_to_critical;
    for (std::size_t i = 0; i < q; ++i, arm = perm.image[arm]) slots[(i * s) % q] = perm.arms[arm];
    anchors.emplace(o.characteristic, std::move(slots));
  }

  auto embedded = propagate_embedding(tree, anchors);
  if (!embedded) throw StructuralError("rotation choice for " + tree.nu.str() + " does not propagate consistently");
  return std::move(*embedded);
}

std::vector<EmbeddedTree> all_embeddings(const HubbardTree& tree) {
  const auto orbits = observe_branch_orbits(tree);
  if (std::any_of(orbits.begin(), orbits.end(), [](const auto& o) { return o.type == OrbitType::evil; })) return {};

  std::vector<std::vector<std::size_t>> choices;
  for (const auto& o : orbits) {
    std::vector<std::size_t> units;
    for (std::size_t s = 1; s < o.arms; ++s) {
      if (std::gcd(s, o.arms) == 1) units.push_back(s);
    }
    choices.push_back(std::move(units));
  }

  std::vector<EmbeddedTree> out;
  std::vector<std::size_t> cursor(orbits.size(), 0);
  while (true) {
    std::map<VertexId, std::size_t> rotations;
    for (std::size_t i = 0; i < orbits.size(); ++i) rotations[orbits[i].characteristic] = choices[i][cursor[i]];
    out.push_back(generate_embedding(tree, rotations));
    std::size_t i = orbits.size();
    while (i > 0 && ++cursor[i - 1] == choices[i - 1].size()) cursor[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

bool verify_embedding(const EmbeddedTree& e) {
  const auto& tree = e.tree;
  if (e.cyclic_order.size() != tree.size()) return false;
  const auto adj = tree.adjacency();
  for (VertexId v = 0; v < tree.size(); ++v) {
    CyclicOrder sorted = e.cyclic_order[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != adj[v]) return false;
  }
  for (VertexId v = 0; v < tree.size(); ++v) {
    if (v == tree.critical || adj[v].size() < 3) continue;
    const auto pos = image_positions(tree, v, e.cyclic_order[v], e.cyclic_order[tree.dynamics[v]]);
    if (!pos || !cyclically_increasing(*pos)) return false;
  }
  return true;
}

}  // namespace kneading
