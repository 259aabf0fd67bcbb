#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kneading/admissibility.hpp"
#include "kneading/symbols.hpp"
#include "kneading/triod.hpp"

namespace kneading {

using VertexId = std::size_t;

enum class PointRole { critical_orbit, periodic_branch, preperiodic_branch };

/// A point of the critical orbit or a branch point, identified by itinerary.
///
/// critical_orbit: c_k with k = `index`.
/// periodic_branch: orbit of period `period`, `index` = number of steps
///   from the characteristic point (which has index 0).
/// preperiodic_branch: `index` is an ordinal in canonical order.
struct MarkedPoint {
  Itinerary itinerary;
  PointRole role = PointRole::critical_orbit;
  std::size_t period = 0;
  std::size_t index = 0;

  std::string name() const;
};

/// The n critical-orbit points followed by the shifts of each predicted
/// characteristic itinerary.
std::vector<MarkedPoint> marked_points(const KneadingSequence& nu);

/// Itinerary nu_1 ... nu_{k-1} STAR nu of the closest precritical point of step k.
Itinerary closest_precritical(const KneadingSequence& nu, std::size_t k);

/// Itinerary of c_k (c_0 is the critical point).
Itinerary critical_orbit_itinerary(const KneadingSequence& nu, std::size_t k);

struct HubbardTree {
  KneadingSequence nu;
  std::vector<MarkedPoint> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;  // (a, b) with a < b, sorted
  std::vector<VertexId> dynamics;
  VertexId critical = 0;

  std::size_t size() const { return vertices.size(); }
  VertexId critical_value() const { return dynamics[critical]; }
  std::optional<VertexId> find(const Itinerary& it) const;
  std::vector<std::vector<VertexId>> adjacency() const;
  std::size_t degree(VertexId v) const;
  std::vector<VertexId> endpoints() const;

  /// Vertex sequence of the arc from a to b, inclusive. Empty when the edge
  /// set does not connect them.
  std::vector<VertexId> path(VertexId from, VertexId to) const;
  /// Neighbour of `from` on the arc toward `to` (from != to).
  VertexId toward(VertexId from, VertexId to) const;
};

struct TreeBuildOptions {
  /// Add the predicted periodic branch orbits up front. Without seeding every
  /// branch point must emerge from triods of the critical orbit.
  bool seed_spectrum = true;
};

/// Assemble the Hubbard tree of a star-periodic nu from itineraries alone.
HubbardTree build_tree(const KneadingSequence& nu, TreeBuildOptions options = {});

struct AxiomCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  const AxiomCheck* find(const std::string& name) const;
};

/// Check the Hubbard tree conditions on the combinatorial tree.
AxiomReport verify_axioms(const HubbardTree& tree);

/// The unique orbit point separating c_1 from c_0 and the rest of the orbit.
VertexId characteristic_point(const HubbardTree& tree, const std::vector<VertexId>& orbit);

/// First-return action on the local arms (incident edges) at z.
/// `arms[i]` is a neighbour of z; `image[i]` is the index of the arm it maps to.
struct ArmPermutation {
  VertexId z = 0;
  std::size_t period = 0;
  std::vector<VertexId> arms;
  std::vector<std::size_t> image;
  std::size_t arm_to_critical = 0;  // index into arms
  OrbitType type = OrbitType::tame;

  /// Cycle decomposition as lists of arm indices, each starting at its smallest.
  std::vector<std::vector<std::size_t>> cycles() const;
};

ArmPermutation arm_permutation(const HubbardTree& tree, VertexId z, std::size_t period);

/// A periodic orbit of branch points, as seen in the tree.
struct ObservedOrbit {
  std::size_t period = 0;
  std::size_t arms = 0;
  OrbitType type = OrbitType::tame;
  VertexId characteristic = 0;
  std::vector<VertexId> orbit;  // starting at the characteristic point
  ArmPermutation permutation;
};

/// Periodic branch orbits found from the tree structure only, by period.
std::vector<ObservedOrbit> observe_branch_orbits(const HubbardTree& tree);

/// observe_branch_orbits, cross-checked against branch_spectrum(nu).
/// Throws CrossCheckError on any disagreement in period, arms, type or itinerary.
std::vector<ObservedOrbit> classify_orbits(const HubbardTree& tree);

}  // namespace kneading
