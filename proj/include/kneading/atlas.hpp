#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kneading/admissibility.hpp"
#include "kneading/embedding.hpp"
#include "kneading/hubbard_tree.hpp"

namespace kneading {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "kneading 1.0.0";
inline constexpr std::size_t kMaxEnumeratePeriod = 20;

/// A star-periodic sequence, or an internal address when the text has a '-'.
KneadingSequence parse_input(std::string_view text);

struct SpectrumSummary {
  std::size_t period = 0;
  std::size_t arms = 0;
  OrbitType type = OrbitType::tame;
  std::string characteristic;  // vertex name
  std::string characteristic_itinerary;
  std::string arm_toward_critical;
  std::vector<std::vector<std::string>> cycles;  // first-return map on arms, by neighbour name
};

struct AtlasRow {
  std::string sequence;
  std::size_t period = 0;
  std::string internal_address;
  bool admissible = false;
  std::vector<std::size_t> failing_periods;
  std::vector<FailureDiagnostic> diagnostics;  // one per failing period
  std::vector<SpectrumSummary> spectrum;
  std::size_t embeddings = 0;
  std::string tree_hash;
};

struct Analysis {
  HubbardTree tree;
  std::vector<ObservedOrbit> orbits;
  AtlasRow row;
};

/// Full pipeline on one sequence. Throws CrossCheckError when the tree fails
/// an axiom, the observed spectrum disagrees with the predicted one, the
/// unseeded rebuild differs, or the row breaks
///   admissible <=> no failing period <=> embeddings >= 1 <=> no evil orbit.
Analysis analyze(const KneadingSequence& nu);

Json to_json(const FailureDiagnostic& d);
Json to_json(const HubbardTree& tree);
Json to_json(const EmbeddedTree& embedded);
Json to_json(const AtlasRow& row);

std::string to_dot(const HubbardTree& tree);
/// Tree graph with each vertex labelled by its cyclic order.
std::string to_dot(const EmbeddedTree& embedded);

std::string sha256_hex(std::string_view data);
/// Digest of the compact tree serialization.
std::string tree_hash(const HubbardTree& tree);

/// Star-periodic sequences of period 2..max_period (or exactly max_period),
/// ordered by period and then lexicographically.
std::vector<KneadingSequence> star_periodic_sequences(std::size_t max_period, bool exact);

Json atlas_header(std::size_t max_period, bool exact);

/// Analyze every sequence on `threads` workers and hand rows to `sink` in
/// enumeration order. The first failing sequence (in that order) aborts the
/// run by rethrowing its error.
void enumerate(std::size_t max_period, bool exact, std::size_t threads, const std::function<void(const AtlasRow&)>& sink);

}  // namespace kneading
