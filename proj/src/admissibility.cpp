#include "kneading/admissibility.hpp"

#include "kneading/errors.hpp"
#include "kneading/rho.hpp"

namespace kneading {

std::string to_string(OrbitType t) { return t == OrbitType::tame ? "tame" : "evil"; }

namespace {

void require_star_periodic(const KneadingSequence& nu) {
  if (!nu.is_star_periodic()) throw DomainError("expected a star-periodic kneading sequence, got " + nu.str());
}

std::size_t residue(std::size_t value, std::size_t m) {
  const std::size_t r = value % m;
  return r == 0 ? m : r;
}

}  // namespace

FailureDiagnostic evaluate_admissibility_condition(const KneadingSequence& nu, std::size_t m) {
  if (m == 0) throw DomainError("period must be >= 1");
  FailureDiagnostic d;
  d.m = m;
  d.cond1 = !in_rho_orbit(nu, 1, m);

  d.cond2 = true;
  for (std::size_t k = 1; k < m && d.cond2; ++k) {
    if (m % k != 0) continue;
    const auto rk = rho(nu, k);
    d.cond2 = rk && *rk <= m;
  }

  d.rho_m = rho(nu, m);
  if (d.rho_m) {
    d.r = residue(*d.rho_m, m);
    d.cond3 = in_rho_orbit(nu, d.r, m);
  }
  d.fails = d.cond1 && d.cond2 && d.cond3;
  return d;
}

FailureDiagnostic fails_for_period(const KneadingSequence& nu, std::size_t m) {
  if (nu.is_star_periodic() && m >= nu.period())
    throw DomainError("period " + std::to_string(m) + " is not below the period of " + nu.str());
  return evaluate_admissibility_condition(nu, m);
}

std::vector<std::size_t> failing_periods(const KneadingSequence& nu) {
  require_star_periodic(nu);
  std::vector<std::size_t> out;
  for (std::size_t m = 1; m < nu.period(); ++m) {
    if (evaluate_admissibility_condition(nu, m).fails) out.push_back(m);
  }
  return out;
}

bool is_admissible(const KneadingSequence& nu) { return failing_periods(nu).empty(); }

std::size_t evil_arms(const KneadingSequence& nu, std::size_t m) {
  const auto d = fails_for_period(nu, m);
  if (!d.fails) throw DomainError(nu.str() + " does not fail the admissibility condition for " + std::to_string(m));
  return (*d.rho_m - d.r) / m + 2;
}

std::size_t tame_q(const KneadingSequence& nu, std::size_t m) {
  require_star_periodic(nu);
  if (m >= nu.period() || !in_rho_orbit(nu, 1, m))
    throw DomainError(std::to_string(m) + " is not an internal-address entry below the period of " + nu.str());
  const std::size_t rho_m = *rho(nu, m);
  const std::size_t r = residue(rho_m, m);
  return (rho_m - r) / m + (in_rho_orbit(nu, r, m) ? 1 : 2);
}

std::vector<BranchSpectrumEntry> branch_spectrum(const KneadingSequence& nu) {
  require_star_periodic(nu);
  std::vector<BranchSpectrumEntry> out;
  auto characteristic = [&](std::size_t m) {
    return Itinerary::periodic(Word(nu.period_word().begin(), nu.period_word().begin() + static_cast<std::ptrdiff_t>(m)));
  };
  for (std::size_t m = 1; m < nu.period(); ++m) {
    const auto d = evaluate_admissibility_condition(nu, m);
    if (d.fails) {
      out.push_back({m, (*d.rho_m - d.r) / m + 2, OrbitType::evil, characteristic(m)});
    } else if (!d.cond1) {
      const std::size_t q = tame_q(nu, m);
      if (q >= 3) out.push_back({m, q, OrbitType::tame, characteristic(m)});
    }
  }
  return out;
}

}  // namespace kneading
