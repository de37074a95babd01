#pragma once

// Closed-form spectrum of the Dirac oscillator and the integer identities
// behind its degeneracy pattern.

#include <map>
#include <vector>

#include "dirac_osc/core.hpp"

namespace dosc {

struct EnergyLevel {
  double E = 0.0;
  /// (E^2 - m^2) / (m omega), exact.
  int shifted = 0;
  StateLabel label;
};

/// Integer bracket of the closed-form spectrum for either branch:
///   +  : 2(N + 1) + eps (2j + 1)
///   -  : 2(N_big + 2) + eps (2j + 1),  N_big = 2n + l'
int shifted_value(const StateLabel& s);

/// Positive-branch only; throws DomainError for a negative-energy label.
int shifted_spectrum_value(const StateLabel& s);

EnergyLevel energy(const OscillatorParams& p, const StateLabel& s);

/// S.L eigenvalue on the beta = beta_sign pair: -(1/4) eps (2j+1) beta - 1/2.
double spin_orbit_scalar(const StateLabel& s, Sign beta_sign);

/// L^2 eigenvalue on the beta = beta_sign pair: (j+1/2)(j+1/2 + eps beta).
double l_squared_eigenvalue(const StateLabel& s, Sign beta_sign);

/// Positive-energy states with N <= n_max grouped by their exact shifted value.
std::map<int, std::vector<StateLabel>> degeneracy_classes(
    const OscillatorParams& p, int n_max);

struct SusyPair {
  StateLabel plus_state;   // positive energy, eps = +1
  StateLabel minus_state;  // negative energy, eps = -1, same j
  int delta_shifted = 0;   // shifted(+) - shifted(-), expected 2
  double delta_e2 = 0.0;   // E^2(+) - E^2(-), expected 2 m omega
};

struct SusyReport {
  std::vector<SusyPair> pairs;
  std::vector<StateLabel> violations;

  bool ok() const { return violations.empty(); }
};

/// Pairs every positive-energy eps=+1 multiplet with N <= n_max with the
/// negative-energy eps=-1 multiplet of the same j whose E^2 is lower by
/// exactly 2 m omega. Throws DomainError for n_max < 2.
SusyReport susy_pattern_check(const OscillatorParams& p, int n_max);

}  // namespace dosc
