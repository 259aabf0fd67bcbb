#include "kneading/triod.hpp"

#include <unordered_map>
#include <vector>

#include "kneading/errors.hpp"

namespace kneading {

namespace {

// Position inside one of four sources: the three inputs, or nu itself.
struct Cursor {
  const Itinerary* source = nullptr;
  std::size_t source_id = 0;
  std::size_t pos = 0;

  Symbol head() const { return source->at(pos); }

  void advance() {
    ++pos;
    const std::size_t len = source->preperiod().size() + source->period();
    if (pos >= len) pos -= source->period();
  }
};

enum class Event : std::uint8_t { none, chop, exclude };

struct Step {
  Event event = Event::none;
  std::size_t slot = 0;
  Symbol majority = Symbol::zero;
};

constexpr std::size_t kNuSource = 3;

std::uint64_t state_key(const std::array<Cursor, 3>& c) {
  std::uint64_t key = 0;
  for (const auto& cur : c) key = (key << 21) | (static_cast<std::uint64_t>(cur.source_id) << 19) | cur.pos;
  return key;
}

// Period word of c0: STAR followed by nu_1 ... nu_{n-1}.
Word critical_orbit_word(const KneadingSequence& nu) {
  Word w{Symbol::star};
  w.insert(w.end(), nu.period_word().begin(), nu.period_word().end() - 1);
  return w;
}

std::string describe(const std::array<Itinerary, 3>& points) {
  return "(" + points[0].str() + ", " + points[1].str() + ", " + points[2].str() + ")";
}

}  // namespace

TriodResult triod_classify(const std::array<Itinerary, 3>& points, const KneadingSequence& nu) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (points[i] == points[j])
        throw TriodError(TriodError::Reason::coincident_points, "triod with coincident points " + describe(points));
    }
  }
  for (const auto& p : points) {
    if (p.preperiod().size() + p.period() >= (1u << 19))
      throw DomainError("itinerary too long for triod classification");
  }

  const Itinerary nu_itinerary = Itinerary::of(nu);
  std::array<Cursor, 3> cur;
  for (std::size_t i = 0; i < 3; ++i) cur[i] = {&points[i], i, 0};
  auto restart_as_nu = [&](Cursor& c) { c = {&nu_itinerary, kNuSource, 0}; };

  // Each slot ranges over its own tails plus the tails of nu.
  std::size_t state_bound = 1;
  for (const auto& p : points) state_bound *= p.preperiod().size() + p.period() + nu.period();

  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::vector<Step> steps;
  // A chopped slot holds a substitute point on the arm of the original, so
  // if it ends up in the middle the true centre is a meeting point instead.
  std::array<bool, 3> chopped{};

  while (true) {
    const auto key = state_key(cur);
    if (const auto it = seen.find(key); it != seen.end()) {
      const std::size_t cycle_start = it->second;
      std::array<bool, 3> removed{};
      Word pre, per;
      for (std::size_t s = 0; s < steps.size(); ++s) {
        (s < cycle_start ? pre : per).push_back(steps[s].majority);
        if (s >= cycle_start && steps[s].event != Event::none) removed[steps[s].slot] = true;
      }
      std::size_t survivors = 0, survivor = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        if (!removed[i]) {
          ++survivors;
          survivor = i;
        }
      }
      if (survivors == 0) return TriodResult::branch(Itinerary(std::move(pre), std::move(per)));
      if (survivors == 1 && !chopped[survivor]) return TriodResult::middle(survivor);
      if (survivors == 1) return TriodResult::branch(Itinerary(std::move(pre), std::move(per)));
      throw TriodError(TriodError::Reason::ambiguous_middle,
                       "several slots survive a full cycle in " + describe(points));
    }
    if (steps.size() > state_bound)
      throw TriodError(TriodError::Reason::runaway, "triod iteration exceeded its state bound for " + describe(points));
    seen.emplace(key, steps.size());

    const std::array<Symbol, 3> h{cur[0].head(), cur[1].head(), cur[2].head()};
    std::size_t stars = 0, star_slot = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (h[i] == Symbol::star) {
        ++stars;
        star_slot = i;
      }
    }
    if (stars > 1)
      throw TriodError(TriodError::Reason::double_star, "two points at the critical point in " + describe(points));

    Step step;
    if (stars == 1) {
      const std::size_t a = (star_slot + 1) % 3, b = (star_slot + 2) % 3;
      if (h[a] != h[b]) {
        if (!chopped[star_slot]) return TriodResult::middle(star_slot);
        // The meeting point itself lands on c0 now.
        Word pre;
        for (const auto& s : steps) pre.push_back(s.majority);
        return TriodResult::branch(Itinerary(std::move(pre), critical_orbit_word(nu)));
      }
      step = {Event::exclude, star_slot, h[a]};
    } else if (h[0] == h[1] && h[1] == h[2]) {
      step = {Event::none, 0, h[0]};
    } else {
      const std::size_t odd = h[0] == h[1] ? 2 : h[0] == h[2] ? 1 : 0;
      step = {Event::chop, odd, h[(odd + 1) % 3]};
    }
    if (step.event == Event::chop) chopped[step.slot] = true;
    steps.push_back(step);

    for (std::size_t i = 0; i < 3; ++i) {
      if ((step.event == Event::chop && step.slot == i) || h[i] == Symbol::star)
        restart_as_nu(cur[i]);
      else
        cur[i].advance();
    }
  }
}

}  // namespace kneading
