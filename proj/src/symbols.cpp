#include "kneading/symbols.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "kneading/errors.hpp"

namespace kneading {

char to_char(Symbol s) {
  switch (s) {
    case Symbol::zero: return '0';
    case Symbol::one: return '1';
    case Symbol::star: return '*';
  }
  return '?';
}

Symbol symbol_from_char(char c) {
  switch (c) {
    case '0': return Symbol::zero;
    case '1': return Symbol::one;
    case '*': return Symbol::star;
    default: throw ParseError(std::string("unexpected symbol '") + c + "'");
  }
}

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(to_char(s));
  return out;
}

Word word_from_string(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(symbol_from_char(c));
  return w;
}

std::size_t exact_period(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool invariant = true;
    for (std::size_t i = d; i < n && invariant; ++i) invariant = w[i] == w[i - d];
    if (invariant) return d;
  }
  return n;
}

// ---------------------------------------------------------------------------
// KneadingSequence

KneadingSequence KneadingSequence::star_periodic(Word w) {
  if (w.size() < 2) throw DomainError("star-periodic sequence needs period >= 2");
  if (w.front() != Symbol::one) throw DomainError("kneading sequence must start with 1");
  if (w.back() != Symbol::star) throw DomainError("star-periodic word must end with *");
  if (std::count(w.begin(), w.end(), Symbol::star) != 1)
    throw DomainError("star-periodic word has a misplaced *");
  return KneadingSequence(std::move(w), SequenceKind::star_periodic);
}

KneadingSequence KneadingSequence::periodic(Word w) {
  if (w.empty()) throw DomainError("periodic sequence needs a nonempty word");
  if (w.front() != Symbol::one) throw DomainError("kneading sequence must start with 1");
  if (std::find(w.begin(), w.end(), Symbol::star) != w.end())
    throw DomainError("periodic sequence may not contain *");
  return KneadingSequence(std::move(w), SequenceKind::periodic);
}

KneadingSequence KneadingSequence::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty sequence");
  Word w = word_from_string(text);
  if (w.front() != Symbol::one) throw ParseError("sequence must start with 1: " + std::string(text));
  const auto stars = std::count(w.begin(), w.end(), Symbol::star);
  if (stars == 0) return periodic(std::move(w));
  if (stars > 1 || w.back() != Symbol::star || w.size() < 2)
    throw ParseError("misplaced * in sequence: " + std::string(text));
  return star_periodic(std::move(w));
}

Symbol KneadingSequence::entry(std::size_t k) const {
  if (k == 0) throw DomainError("sequence entries are 1-indexed");
  return word_[(k - 1) % word_.size()];
}

bool operator==(const KneadingSequence& a, const KneadingSequence& b) {
  if (a.kind_ != b.kind_) return false;
  const auto pa = exact_period(a.word_);
  const auto pb = exact_period(b.word_);
  return pa == pb && std::equal(a.word_.begin(), a.word_.begin() + static_cast<std::ptrdiff_t>(pa),
                                b.word_.begin());
}

// ---------------------------------------------------------------------------
// Itinerary

Itinerary::Itinerary(Word preperiod, Word period) : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw DomainError("itinerary needs a nonempty period");
  per_.resize(exact_period(per_));
  // Absorb preperiod symbols that already continue the cycle backwards.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
  }
}

Itinerary Itinerary::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) return periodic(word_from_string(text));
  if (text.back() != ')' || open + 2 > text.size() - 1)
    throw ParseError("malformed itinerary: " + std::string(text));
  return Itinerary(word_from_string(text.substr(0, open)),
                   word_from_string(text.substr(open + 1, text.size() - open - 2)));
}

Symbol Itinerary::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

bool Itinerary::contains_star() const {
  auto has = [](const Word& w) { return std::find(w.begin(), w.end(), Symbol::star) != w.end(); };
  return has(pre_) || has(per_);
}

Itinerary Itinerary::shift() const {
  if (!pre_.empty()) return Itinerary(Word(pre_.begin() + 1, pre_.end()), per_);
  Word rotated = per_;
  std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  return Itinerary({}, std::move(rotated));
}

Itinerary Itinerary::shift(std::size_t steps) const {
  if (steps <= pre_.size()) return Itinerary(Word(pre_.begin() + static_cast<std::ptrdiff_t>(steps), pre_.end()), per_);
  Word rotated = per_;
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>((steps - pre_.size()) % per_.size()),
              rotated.end());
  return Itinerary({}, std::move(rotated));
}

Word Itinerary::prefix(std::size_t count) const {
  Word w(count);
  for (std::size_t i = 0; i < count; ++i) w[i] = at(i);
  return w;
}

std::string Itinerary::str() const { return to_string(pre_) + "(" + to_string(per_) + ")"; }

// ---------------------------------------------------------------------------
// InternalAddress

bool InternalAddress::contains(std::size_t m) const {
  return std::binary_search(entries.begin(), entries.end(), m);
}

std::string InternalAddress::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? "-" : "") << entries[i];
  if (!terminated) out << "-...";
  return out.str();
}

InternalAddress InternalAddress::parse(std::string_view text) {
  InternalAddress addr;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto dash = std::min(text.find('-', pos), text.size());
    const auto token = text.substr(pos, dash - pos);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("malformed address: " + std::string(text));
    if (addr.entries.empty() ? value != 1 : value <= addr.entries.back())
      throw ParseError("address must start at 1 and increase strictly: " + std::string(text));
    addr.entries.push_back(value);
    pos = dash + 1;
  }
  if (addr.entries.size() < 2) throw ParseError("address needs at least two entries: " + std::string(text));
  return addr;
}

}  // namespace kneading
