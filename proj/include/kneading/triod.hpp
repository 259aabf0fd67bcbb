#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "kneading/symbols.hpp"

namespace kneading {

/// Relative position of three distinct points of the Hubbard tree, decided
/// from their itineraries alone.
///
/// Either one of the three points lies on the arc between the other two
/// (`middle`, with a 0-based slot index), or the three arcs meet at a branch
/// point that is none of them (`branch`, with the itinerary of that point).
/// Triples of marked points always give STAR-free branch itineraries; a
/// triple with a precritical point may meet at a precritical point.
struct TriodResult {
  enum class Kind { middle, branch };

  Kind kind = Kind::middle;
  std::size_t middle_slot = 0;
  Itinerary branch_itinerary;

  static TriodResult middle(std::size_t slot) { return {Kind::middle, slot, {}}; }
  static TriodResult branch(Itinerary it) { return {Kind::branch, 0, std::move(it)}; }

  bool is_middle() const { return kind == Kind::middle; }
  bool is_branch() const { return kind == Kind::branch; }
  friend bool operator==(const TriodResult&, const TriodResult&) = default;
};

class TriodError : public std::runtime_error {
 public:
  enum class Reason { coincident_points, double_star, ambiguous_middle, runaway };
  TriodError(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Classify the triod spanned by three itineraries in the tree of nu.
///
/// Each step looks at the three head symbols:
///  - all equal: shift all three;
///  - one STAR head, the other two equal: the STAR point is not between them
///    (slot excluded), shift all three;
///  - one STAR head, the other two different: the critical point separates
///    them, so that slot is the middle;
///  - otherwise one head disagrees: the critical point cuts its arm off, so
///    that slot is chopped and restarts as the critical value (nu).
/// A STAR stream always continues as nu. The state is eventually periodic;
/// over one cycle a slot never chopped or excluded is the middle, and if
/// every slot is, the recorded majority symbols spell the branch point.
/// A slot chopped earlier holds a substitute point, so when it would be the
/// middle the result is the branch point where its arm meets the others.
/// That itinerary contains a STAR when the meeting point is precritical.
TriodResult triod_classify(const std::array<Itinerary, 3>& points, const KneadingSequence& nu);

inline TriodResult triod_classify(const Itinerary& a, const Itinerary& b, const Itinerary& c,
                                  const KneadingSequence& nu) {
  return triod_classify({a, b, c}, nu);
}

}  // namespace kneading
