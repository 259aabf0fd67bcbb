#include "kneading/rho.hpp"

#include "kneading/errors.hpp"

namespace kneading {

std::optional<std::size_t> rho(const KneadingSequence& nu, std::size_t n) {
  if (n == 0) throw DomainError("rho is defined for n >= 1");
  // Agreement over one full period word forces agreement forever.
  const std::size_t limit = n + nu.period();
  for (std::size_t k = n + 1; k <= limit; ++k) {
    if (symbols_differ(nu[k], nu[k - n])) return k;
  }
  return std::nullopt;
}

std::vector<std::size_t> rho_orbit(const KneadingSequence& nu, std::size_t k, std::size_t bound) {
  std::vector<std::size_t> orbit;
  std::optional<std::size_t> current = k;
  while (current && *current <= bound) {
    orbit.push_back(*current);
    current = rho(nu, *current);
  }
  return orbit;
}

bool in_rho_orbit(const KneadingSequence& nu, std::size_t k, std::size_t m) {
  const auto orbit = rho_orbit(nu, k, m);
  return !orbit.empty() && orbit.back() == m;
}

InternalAddress internal_address(const KneadingSequence& nu, std::size_t bound) {
  InternalAddress addr;
  addr.entries = rho_orbit(nu, 1, bound);
  addr.terminated = !rho(nu, addr.entries.back()).has_value();
  return addr;
}

KneadingSequence address_to_sequence(const InternalAddress& addr) {
  const auto& e = addr.entries;
  if (e.size() < 2 || e.front() != 1) throw DomainError("address must start at 1 and have >= 2 entries");
  Word current{Symbol::one};
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] <= e[i - 1]) throw DomainError("address entries must increase strictly");
    const std::size_t len = e[i];
    Word next(len);
    for (std::size_t j = 0; j + 1 < len; ++j) next[j] = current[j % current.size()];
    next[len - 1] = flip(current[(len - 1) % current.size()]);
    current = std::move(next);
  }
  current.back() = Symbol::star;
  return KneadingSequence::star_periodic(std::move(current));
}

UpperLower upper_lower(const KneadingSequence& nu) {
  if (!nu.is_star_periodic()) throw DomainError("upper/lower sequences need a star-periodic input");
  const std::size_t n = nu.period();
  Word with_zero = nu.period_word();
  Word with_one = nu.period_word();
  with_zero.back() = Symbol::zero;
  with_one.back() = Symbol::one;
  auto zero_seq = KneadingSequence::periodic(std::move(with_zero));
  auto one_seq = KneadingSequence::periodic(std::move(with_one));
  const bool zero_upper = in_rho_orbit(zero_seq, 1, n);
  const bool one_upper = in_rho_orbit(one_seq, 1, n);
  if (zero_upper == one_upper)
    throw StructuralError("exactly one STAR substitution of " + nu.str() + " must contain its period");
  if (zero_upper) return {std::move(zero_seq), std::move(one_seq)};
  return {std::move(one_seq), std::move(zero_seq)};
}

}  // namespace kneading
