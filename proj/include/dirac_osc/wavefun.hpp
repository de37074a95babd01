#pragma once

// Closed-form eigenfunctions: radial big/small components, spinor spherical
// harmonics, the assembled four-spinor, and normalization.
//
// Radial parts are 3-D oscillator functions
//   rho^{L+1} exp(-rho^2/2) 1F1(-k, L + 3/2, rho^2),  rho = sqrt(m w) r,
// with (k, L) = (upper_nodes, l) for F and (lower_nodes, l') for G.

#include <algorithm>
#include <cmath>

#include <Eigen/Core>

#include "dirac_osc/core.hpp"
#include "dirac_osc/specfun.hpp"

namespace dosc {

/// Unnormalized F (amplitude 1). Throws DomainError for r < 0.
double radial_F(const OscillatorParams& p, const StateLabel& s, double r);
/// Unnormalized G (amplitude 1); identically zero when the lower component
/// vanishes (positive energy, eps = -1, n = 0).
double radial_G(const OscillatorParams& p, const StateLabel& s, double r);
double radial_F_dr(const OscillatorParams& p, const StateLabel& s, double r);
double radial_G_dr(const OscillatorParams& p, const StateLabel& s, double r);

/// Radius beyond which both components are negligible:
/// sqrt((4 N + 36) / (m w)) with N the larger component principal number;
/// the density beyond it is below 1e-13 of the total.
double radial_cutoff(const OscillatorParams& p, const StateLabel& s);

/// F(r) = A F_u(r),  G(r) = A w G_u(r).
struct RadialPair {
  StateLabel label;
  OscillatorParams params;
  double norm_constant = 1.0;  // A
  double g_weight = 1.0;       // w

  int upper_orbital() const { return label.l; }
  int lower_orbital() const { return label.l_prime(); }

  double F(double r) const;
  double G(double r) const;
  double dF(double r) const;
  double dG(double r) const;
};

/// A = 1, w = 1.
RadialPair closed_form_pair(const OscillatorParams& p, const StateLabel& s);

/// G/F amplitude ratio fixed by the coupled first-order system at the probe
/// radius r* = 1/sqrt(m w). Zero when G vanishes.
double relative_weight(const OscillatorParams& p, const StateLabel& s);

/// integral_0^inf (F^2 + G^2) dr by Gauss-Legendre on [0, radial_cutoff].
double norm_integral(const RadialPair& pair, int npts = 160);

/// Rescales so that norm_integral == 1. Throws DomainError on a zero norm.
RadialPair normalize(const RadialPair& pair, double relative_weight, int npts = 160);

/// Normalized eigenstate: normalize(closed_form_pair, relative_weight).
RadialPair eigenstate(const OscillatorParams& p, const StateLabel& s);

/// integral_0^inf (F1 F2 + G1 G2) dr.
double radial_overlap(const RadialPair& a, const RadialPair& b, int npts = 160);

/// Literal evaluation of the published closed-form normalization constant
/// (kept for comparison with the quadrature value).
double published_norm_constant(const OscillatorParams& p, const StateLabel& s);

/// Spinor spherical harmonic coupling orbital l with spin 1/2 to (j, m_j).
/// The sign branch is + for l = j - 1/2 and - for l = j + 1/2.
Eigen::Vector2cd spinor_harmonic(HalfInt j, HalfInt m_j, int l, double theta,
                                 double phi);

struct SpinorSample {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  /// psi at t = 0; the time dependence is exp(-i E t).
  Eigen::Vector4cd psi;
};

/// psi = (1/r) (F Y_{j m l}, -i G Y_{j m l'}). The minus sign on the lower
/// pair converts the radial G (standard-phase system) to the phase of
/// spinor_harmonic, for which sigma.r_hat maps one branch onto the other
/// with a plus sign. Throws DomainError for r <= 0.
SpinorSample assemble_spinor(const OscillatorParams& p, const StateLabel& s,
                             const RadialPair& pair, double r, double theta,
                             double phi);

/// Number of sign changes of f on (0, r_max) sampled at `samples` points,
/// ignoring values below `floor` times the maximum.
template <typename F>
int count_nodes(F&& f, double r_max, int samples = 4000, double floor = 1e-9) {
  double fmax = 0.0;
  for (int i = 1; i <= samples; ++i)
    fmax = std::max(fmax, std::abs(f(r_max * i / samples)));
  if (fmax == 0.0) return 0;
  int nodes = 0;
  int last = 0;
  for (int i = 1; i <= samples; ++i) {
    const double v = f(r_max * i / samples);
    if (std::abs(v) < floor * fmax) continue;
    const int sgn = v > 0 ? 1 : -1;
    if (last != 0 && sgn != last) ++nodes;
    last = sgn;
  }
  return nodes;
}

}  // namespace dosc
