#include "dirac_osc/spectrum.hpp"

#include <cmath>

#include "dirac_osc/error.hpp"

namespace dosc {

int shifted_value(const StateLabel& s) {
  const int eps = to_int(s.epsilon);
  const int two_j_plus_1 = s.j.twice() + 1;
  if (s.energy_sign == Sign::plus) return 2 * (s.N + 1) + eps * two_j_plus_1;
  return 2 * (s.dominant_principal() + 2) + eps * two_j_plus_1;
}

int shifted_spectrum_value(const StateLabel& s) {
  if (s.energy_sign != Sign::plus)
    throw DomainError("shifted_spectrum_value: positive-energy label required");
  return shifted_value(s);
}

EnergyLevel energy(const OscillatorParams& p, const StateLabel& s) {
  const int shifted = shifted_value(s);
  const double radicand = p.m_omega() * shifted + p.m * p.m;
  if (radicand < 0.0) throw DomainError("energy: negative radicand");
  const double magnitude = std::sqrt(radicand);
  return {s.energy_sign == Sign::plus ? magnitude : -magnitude, shifted, s};
}

double spin_orbit_scalar(const StateLabel& s, Sign beta_sign) {
  const int eps_beta = to_int(s.epsilon) * to_int(beta_sign);
  // -(1/4) eps beta (2j+1) - 1/2, kept in quarters until the end.
  const int quarters = -eps_beta * (s.j.twice() + 1) - 2;
  return 0.25 * quarters;
}

double l_squared_eigenvalue(const StateLabel& s, Sign beta_sign) {
  const int j_half = (s.j.twice() + 1) / 2;  // j + 1/2
  return static_cast<double>(j_half *
                             (j_half + to_int(s.epsilon) * to_int(beta_sign)));
}

std::map<int, std::vector<StateLabel>> degeneracy_classes(
    const OscillatorParams&, int n_max) {
  std::map<int, std::vector<StateLabel>> classes;
  for (const auto& s : enumerate_states(n_max, Sign::plus))
    classes[shifted_spectrum_value(s)].push_back(s);
  return classes;
}

SusyReport susy_pattern_check(const OscillatorParams& p, int n_max) {
  if (n_max < 2) throw DomainError("susy_pattern_check: N_max must be >= 2");
  SusyReport report;
  for (const auto& plus : enumerate_multiplets(n_max, Sign::plus)) {
    if (plus.epsilon != Sign::plus) continue;
    // E^2(-) for eps = -1 is m^2 + 4(n'+1) m omega regardless of j; the
    // partner sits at n' = n + j - 1/2.
    const int target = shifted_value(plus) - 2;
    if (target % 4 != 0 || target < 4) {
      report.violations.push_back(plus);
      continue;
    }
    const StateLabel minus = make_state(target / 4 - 1, plus.j, plus.m_j,
                                        Sign::minus, Sign::minus);
    const auto e_plus = energy(p, plus);
    const auto e_minus = energy(p, minus);
    SusyPair pair{plus, minus, e_plus.shifted - e_minus.shifted,
                  e_plus.E * e_plus.E - e_minus.E * e_minus.E};
    if (pair.delta_shifted != 2) report.violations.push_back(plus);
    report.pairs.push_back(pair);
  }
  return report;
}

}  // namespace dosc
