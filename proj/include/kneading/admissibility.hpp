#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kneading/symbols.hpp"

namespace kneading {

/// The three conjuncts of the admissibility condition for one period m.
struct FailureDiagnostic {
  std::size_t m = 0;
  bool cond1 = false;  // m is not on the internal address
  bool cond2 = false;  // every proper divisor k of m has rho(k) <= m
  bool cond3 = false;  // rho(m) < inf and m lies on the rho-orbit of r
  bool fails = false;
  std::optional<std::size_t> rho_m;
  std::size_t r = 0;  // residue of rho(m) in {1..m}; 0 when rho(m) is infinite

  friend bool operator==(const FailureDiagnostic&, const FailureDiagnostic&) = default;
};

enum class OrbitType { tame, evil };
std::string to_string(OrbitType t);

struct BranchSpectrumEntry {
  std::size_t period = 0;
  std::size_t arms = 0;
  OrbitType type = OrbitType::tame;
  Itinerary characteristic_itinerary;

  friend bool operator==(const BranchSpectrumEntry&, const BranchSpectrumEntry&) = default;
};

/// Formal evaluation of the condition for any m >= 1, with no range check.
FailureDiagnostic evaluate_admissibility_condition(const KneadingSequence& nu, std::size_t m);

/// As above, but for a star-periodic nu of period n only m < n is meaningful.
FailureDiagnostic fails_for_period(const KneadingSequence& nu, std::size_t m);

/// All m in 1..n-1 for which the condition fails.
std::vector<std::size_t> failing_periods(const KneadingSequence& nu);

bool is_admissible(const KneadingSequence& nu);

/// Arm count of the evil orbit of period m: (rho(m) - r)/m + 2.
std::size_t evil_arms(const KneadingSequence& nu, std::size_t m);

/// q(m) for an internal-address entry m < n.
std::size_t tame_q(const KneadingSequence& nu, std::size_t m);

/// Periodic branch orbits predicted from nu alone, sorted by period.
std::vector<BranchSpectrumEntry> branch_spectrum(const KneadingSequence& nu);

}  // namespace kneading
