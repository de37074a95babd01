#pragma once

// Independent numerical routes to the radial problem:
//  * finite differences on the decoupled second-order equation of one spinor
//    component, solved by Sturm-sequence bisection (tridiagonal),
//  * shooting on the coupled first-order system for (F, G).
// Both work in the dimensionless radius rho = sqrt(m omega) r.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dirac_osc/core.hpp"

namespace dosc {

/// Coupled first-order radial system written in the template
///   { s_a d/dr + (kappa/r + m w r) } G = (E - m) F
///   { s_b d/dr + (kappa/r + m w r) } F = (E + m) G
/// with kappa = eps (j + 1/2). The derivative signs s_a, s_b identify the
/// variant; (-1, -1) is the form as originally printed.
struct FirstOrderSystem {
  int sign_a = -1;
  int sign_b = +1;
  int kappa = -1;
  double m = 1.0;
  double m_omega = 1.0;
  double E = 1.0;

  double coupling(double r) const { return kappa / r + m_omega * r; }
  double residual_a(double r, double F, double G, double dG) const {
    return sign_a * dG + coupling(r) * G - (E - m) * F;
  }
  double residual_b(double r, double F, double dF, double G) const {
    return sign_b * dF + coupling(r) * F - (E + m) * G;
  }
};

FirstOrderSystem make_first_order_system(const OscillatorParams& p,
                                         const StateLabel& s, int sign_a,
                                         int sign_b);

/// The system exactly as printed: both derivative signs negative.
FirstOrderSystem printed_first_order_system(const OscillatorParams& p,
                                            const StateLabel& s);

/// G/F amplitude ratio of the closed-form pair that satisfies the second
/// equation of `sys` at the probe radius 1/sqrt(m omega); zero when the
/// lower component vanishes.
double fit_relative_weight(const FirstOrderSystem& sys, const OscillatorParams& p,
                           const StateLabel& s);

/// Relative max residual of both equations on the closed-form pair of s,
/// after fitting the G/F amplitude from the second equation at the probe
/// radius 1/sqrt(m omega).
double closed_form_residual(const FirstOrderSystem& sys,
                            const OscillatorParams& p, const StateLabel& s);

/// Tries the four derivative-sign variants (printed first) and returns the
/// first whose closed-form residual is below 1e-8. Throws
/// ModelInconsistency if none passes.
FirstOrderSystem first_order_system(const OscillatorParams& p,
                                    const StateLabel& s);

// ------------------------------------------------------------------ channels

struct Channel {
  HalfInt j = kHalf;
  Sign epsilon = Sign::minus;
  Sign branch = Sign::plus;

  /// Orbital number of the component solved on this branch
  /// (l for beta = +1, l' for beta = -1).
  int dominant_orbital() const;
  int kappa() const { return to_int(epsilon) * (j.twice() + 1) / 2; }
  StateLabel level_label(int level) const;
  std::string str() const;
};

Channel channel_of(const StateLabel& s);

struct RadialGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  int npts = 0;
  double h = 0.0;
};

/// Uniform interior grid r_i = i h, i = 1..npts, h = r_max / (npts + 1).
RadialGrid make_grid(double r_max, int npts);
/// Grid for levels with label N <= n_max on either branch. The dominant
/// component of a negative-energy level can have principal number N + 1, and
/// the Dirichlet wall must sit where that component is below ~1e-8 of its
/// peak: r_max = sqrt((4 (n_max + 1) + 36)/(m w)). Spacing 0.005 / sqrt(m w),
/// never fewer than 40 n_max + 400 points.
RadialGrid default_grid(const OscillatorParams& p, int n_max);
/// Same interval, spacing halved.
RadialGrid refine(const RadialGrid& g);

struct RadialEigenpair {
  int level = 0;
  double E = 0.0;
  Eigen::VectorXd r;
  Eigen::VectorXd F;
  Eigen::VectorXd G;
  double residual = 0.0;
};

// --------------------------------------------------------- Sturm machinery

/// -u'' + V(x) u = lambda u on (0, length), u(0) = u(length) = 0, discretized
/// with second-order central differences on npts interior points.
struct SturmProblem {
  std::function<double(double)> potential;
  double length = 1.0;
};

/// Lowest `count` eigenvalues by Sturm-count bisection.
std::vector<double> sturm_eigenvalues(const SturmProblem& prob, int npts, int count);
/// Eigenvector for an eigenvalue returned above (inverse iteration),
/// normalized so that sum u_i^2 h = 1 with positive leading lobe.
Eigen::VectorXd sturm_eigenvector(const SturmProblem& prob, int npts,
                                  double eigenvalue);

/// The dimensionless radial problem of one channel on (0, rho_max).
SturmProblem channel_problem(const Channel& ch, double rho_max);

/// Lowest n_levels of the channel. Eigenvalues are Richardson-extrapolated
/// from the grid and its refinement; GridTooCoarse is thrown when those two
/// disagree by more than 1e-4 relative.
std::vector<RadialEigenpair> fd_eigensolve(const OscillatorParams& p,
                                           const Channel& ch,
                                           const RadialGrid& grid, int n_levels);

/// Single eigenvalue of the first-order system inside (e_lo, e_hi).
/// Throws BracketError if the matching determinant does not change sign.
RadialEigenpair shooting_solve(const OscillatorParams& p, const Channel& ch,
                               double e_lo, double e_hi);

/// Bracket around fd[index] for shooting_solve: +-5% of |E|, clipped to the
/// midpoints with the neighbouring levels of the same list.
std::pair<double, double> shooting_bracket(const std::vector<RadialEigenpair>& fd,
                                           std::size_t index);

/// Matching determinant F_out G_in - G_out F_in at rho = 1 (diagnostic).
double matching_determinant(const OscillatorParams& p, const Channel& ch, double E);

struct ConvergenceReport {
  std::vector<double> h;
  std::vector<double> eigenvalues;
  /// log2 of successive difference ratios.
  std::vector<double> orders;
  double order = 0.0;
  /// |lambda_finest - lambda_previous|
  double error_estimate = 0.0;
};

/// Raw (not extrapolated) eigenvalue of `level` on an h-halving sequence of
/// at least three grids.
ConvergenceReport convergence_report(const OscillatorParams& p, const Channel& ch,
                                     const std::vector<RadialGrid>& grids,
                                     int level = 0);
ConvergenceReport convergence_report(const SturmProblem& prob,
                                     const std::vector<int>& npts, int level = 0);

}  // namespace dosc
