#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kneading/hubbard_tree.hpp"

namespace kneading {

/// Neighbours of a vertex in counterclockwise order, rotated so the smallest
/// id comes first. Two cyclic orders are equal iff their canonical lists are.
using CyclicOrder = std::vector<VertexId>;

CyclicOrder canonical_rotation(CyclicOrder order);

struct EmbeddedTree {
  HubbardTree tree;
  std::vector<CyclicOrder> cyclic_order;  // indexed by vertex

  friend bool operator==(const EmbeddedTree& a, const EmbeddedTree& b) { return a.cyclic_order == b.cyclic_order; }
};

class EmbeddingError : public std::runtime_error {
 public:
  enum class Reason { evil_present, not_coprime, missing_rotation };
  EmbeddingError(Reason reason, const std::string& what, std::vector<std::size_t> evil_periods = {})
      : std::runtime_error(what), reason_(reason), evil_periods_(std::move(evil_periods)) {}
  Reason reason() const { return reason_; }
  const std::vector<std::size_t>& evil_periods() const { return evil_periods_; }

 private:
  Reason reason_;
  std::vector<std::size_t> evil_periods_;
};

std::size_t euler_phi(std::size_t q);

/// Number of planar embeddings respecting the dynamics: 0 with an evil orbit,
/// otherwise the product of phi(q) over the characteristic branch points.
std::size_t count_embeddings(const HubbardTree& tree);

/// Extend cyclic orders chosen at the characteristic points to the whole
/// tree by pulling orders back along the dynamics. Returns nullopt when the
/// choice is incompatible with the first-return maps.
std::optional<EmbeddedTree> propagate_embedding(const HubbardTree& tree,
                                                const std::map<VertexId, CyclicOrder>& characteristic_orders);

/// Rotation s in {1..q-1}, coprime to q, per characteristic point: the first
/// return map moves every arm s places counterclockwise.
EmbeddedTree generate_embedding(const HubbardTree& tree, const std::map<VertexId, std::size_t>& rotations);

/// Every embedding, one per coprime rotation tuple, in lexicographic tuple order.
std::vector<EmbeddedTree> all_embeddings(const HubbardTree& tree);

/// True iff the orders list exactly the incident edges and every vertex other
/// than c0 maps its cyclic order into the cyclic order at its image.
bool verify_embedding(const EmbeddedTree& embedded);

}  // namespace kneading
