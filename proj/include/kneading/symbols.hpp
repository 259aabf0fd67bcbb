#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace kneading {

enum class Symbol : std::uint8_t { zero = 0, one = 1, star = 2 };

using Word = std::vector<Symbol>;

char to_char(Symbol s);
Symbol symbol_from_char(char c);  // throws ParseError
std::string to_string(const Word& w);
Word word_from_string(std::string_view text);  // throws ParseError

/// Comparison used by the rho function. STAR differs from both ZERO and ONE.
constexpr bool symbols_differ(Symbol a, Symbol b) { return a != b; }

constexpr Symbol flip(Symbol s) {
  return s == Symbol::zero ? Symbol::one : s == Symbol::one ? Symbol::zero : Symbol::star;
}

/// Smallest d dividing |w| such that w is invariant under rotation by d.
std::size_t exact_period(const Word& w);

enum class SequenceKind : std::uint8_t { star_periodic, periodic };

/// Periodic repetition of a period word starting with ONE.
///
/// A star-periodic sequence carries exactly one STAR, in the last position of
/// its period word; a periodic sequence carries none. Entries are 1-indexed.
class KneadingSequence {
 public:
  static KneadingSequence star_periodic(Word period_word);
  static KneadingSequence periodic(Word period_word);
  /// Accepts `[01]*\*` (star-periodic) or `[01]+` (periodic, the word repeated).
  static KneadingSequence parse(std::string_view text);

  SequenceKind kind() const { return kind_; }
  bool is_star_periodic() const { return kind_ == SequenceKind::star_periodic; }
  const Word& period_word() const { return word_; }
  std::size_t period() const { return word_.size(); }

  Symbol entry(std::size_t k) const;  // k >= 1
  Symbol operator[](std::size_t k) const { return entry(k); }

  /// Period word as text; star-periodic sequences end in `*`.
  std::string str() const { return to_string(word_); }

  /// Equality of the infinite sequences.
  friend bool operator==(const KneadingSequence& a, const KneadingSequence& b);

 private:
  KneadingSequence(Word w, SequenceKind kind) : word_(std::move(w)), kind_(kind) {}

  Word word_;
  SequenceKind kind_;
};

/// Eventually periodic symbol stream: preperiod followed by the period word
/// repeated forever. Stored in canonical form (minimal period, then minimal
/// preperiod), so structural equality is equality of streams.
class Itinerary {
 public:
  Itinerary() = default;
  Itinerary(Word preperiod, Word period);
  static Itinerary periodic(Word period) { return Itinerary({}, std::move(period)); }
  static Itinerary of(const KneadingSequence& nu) { return periodic(nu.period_word()); }
  /// Text form `pre(period)`, e.g. `0(1)` or `(10110*)`.
  static Itinerary parse(std::string_view text);

  const Word& preperiod() const { return pre_; }
  const Word& period_word() const { return per_; }
  bool is_periodic() const { return pre_.empty(); }
  std::size_t period() const { return per_.size(); }

  Symbol at(std::size_t i) const;  // 0-indexed
  Symbol head() const { return at(0); }
  bool contains_star() const;

  /// One step of the dynamics: drop the first symbol.
  Itinerary shift() const;
  Itinerary shift(std::size_t steps) const;

  /// The first `count` symbols.
  Word prefix(std::size_t count) const;

  std::string str() const;

  friend bool operator==(const Itinerary&, const Itinerary&) = default;
  friend auto operator<=>(const Itinerary& a, const Itinerary& b) { return a.str() <=> b.str(); }

 private:
  Word pre_;
  Word per_;
};

/// Strictly increasing entries starting at 1. `terminated` is false when the
/// rho-orbit was cut off at a search bound rather than reaching infinity.
struct InternalAddress {
  std::vector<std::size_t> entries;
  bool terminated = true;

  bool contains(std::size_t m) const;
  /// Dash-separated form, e.g. `1-2-4-5-6`; a truncated address ends in `-...`.
  std::string str() const;
  static InternalAddress parse(std::string_view text);  // throws ParseError

  friend bool operator==(const InternalAddress&, const InternalAddress&) = default;
};

}  // namespace kneading

template <>
struct std::hash<kneading::Itinerary> {
  std::size_t operator()(const kneading::Itinerary& it) const noexcept {
    return std::hash<std::string>{}(it.str());
  }
};
