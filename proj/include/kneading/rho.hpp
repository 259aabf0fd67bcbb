#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kneading/symbols.hpp"

namespace kneading {

/// Search bound for rho-orbits of periodic (STAR-free) sequences, whose
/// internal addresses may be infinite.
inline constexpr std::size_t kDefaultOrbitBound = 4096;

/// rho(n) = least k > n with nu_k != nu_{k-n}; nullopt stands for infinity.
std::optional<std::size_t> rho(const KneadingSequence& nu, std::size_t n);

/// k -> rho(k) -> rho(rho(k)) -> ..., listing entries up to `bound`.
std::vector<std::size_t> rho_orbit(const KneadingSequence& nu, std::size_t k,
                                   std::size_t bound = kDefaultOrbitBound);

/// Whether m lies on the rho-orbit of k.
bool in_rho_orbit(const KneadingSequence& nu, std::size_t k, std::size_t m);

/// The rho-orbit of 1. Always terminated for star-periodic input.
InternalAddress internal_address(const KneadingSequence& nu, std::size_t bound = kDefaultOrbitBound);

/// Inverse of internal_address on star-periodic sequences.
KneadingSequence address_to_sequence(const InternalAddress& addr);

struct UpperLower {
  KneadingSequence upper;
  KneadingSequence lower;
};

/// The two STAR substitutions of a star-periodic sequence of period n; the
/// upper one is the one whose internal address contains n.
UpperLower upper_lower(const KneadingSequence& nu);

}  // namespace kneading
