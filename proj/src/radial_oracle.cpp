#include "dirac_osc/radial_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "dirac_osc/error.hpp"
#include "dirac_osc/spectrum.hpp"
#include "dirac_osc/wavefun.hpp"

namespace dosc {

// ------------------------------------------------------- first-order system

FirstOrderSystem make_first_order_system(const OscillatorParams& p,
                                         const StateLabel& s, int sign_a,
                                         int sign_b) {
  if (std::abs(sign_a) != 1 || std::abs(sign_b) != 1)
    throw DomainError("first-order system: derivative signs must be +-1");
  FirstOrderSystem sys;
  sys.sign_a = sign_a;
  sys.sign_b = sign_b;
  sys.kappa = s.kappa();
  sys.m = p.m;
  sys.m_omega = p.m_omega();
  sys.E = energy(p, s).E;
  return sys;
}

FirstOrderSystem printed_first_order_system(const OscillatorParams& p,
                                            const StateLabel& s) {
  return make_first_order_system(p, s, -1, -1);
}

double fit_relative_weight(const FirstOrderSystem& sys, const OscillatorParams& p,
                           const StateLabel& s) {
  if (s.lower_nodes() < 0) return 0.0;
  const double cut = radial_cutoff(p, s);
  double g_max = 0.0;
  for (int i = 1; i <= 200; ++i) g_max = std::max(g_max, std::abs(radial_G(p, s, cut * i / 200)));
  double r = 1.0 / std::sqrt(p.m_omega());
  // Step off a node of G if the probe happens to sit on one.
  for (int k = 0; k < 40 && std::abs(radial_G(p, s, r)) < 1e-3 * g_max; ++k) r *= 1.07;
  const double lhs = sys.sign_b * radial_F_dr(p, s, r) + sys.coupling(r) * radial_F(p, s, r);
  return lhs / ((sys.E + sys.m) * radial_G(p, s, r));
}

double closed_form_residual(const FirstOrderSystem& sys, const OscillatorParams& p,
                            const StateLabel& s) {
  const double w = fit_relative_weight(sys, p, s);
  const double cut = radial_cutoff(p, s);
  constexpr int kSamples = 400;
  double worst = 0.0;
  double scale = 0.0;
  for (int i = 1; i <= kSamples; ++i) {
    const double r = cut * i / kSamples;
    const double F = radial_F(p, s, r);
    const double dF = radial_F_dr(p, s, r);
    const double G = w * radial_G(p, s, r);
    const double dG = w * radial_G_dr(p, s, r);
    const double c = sys.coupling(r);
    worst = std::max({worst, std::abs(sys.residual_a(r, F, G, dG)),
                      std::abs(sys.residual_b(r, F, dF, G))});
    scale = std::max({scale, std::abs(dF), std::abs(dG), std::abs(c * F),
                      std::abs(c * G), std::abs((sys.E - sys.m) * F),
                      std::abs((sys.E + sys.m) * G)});
  }
  return scale > 0.0 ? worst / scale : worst;
}

FirstOrderSystem first_order_system(const OscillatorParams& p, const StateLabel& s) {
  constexpr std::array<std::array<int, 2>, 4> kCandidates{
      {{-1, -1}, {-1, +1}, {+1, -1}, {+1, +1}}};
  for (const auto& [sa, sb] : kCandidates) {
    const auto sys = make_first_order_system(p, s, sa, sb);
    if (closed_form_residual(sys, p, s) < 1e-8) return sys;
  }
  throw ModelInconsistency("no derivative-sign variant annihilates the closed form of " +
                           s.str());
}

// ------------------------------------------------------------------ channels

int Channel::dominant_orbital() const {
  return branch == Sign::plus ? (j.twice() + to_int(epsilon)) / 2
                              : (j.twice() - to_int(epsilon)) / 2;
}

StateLabel Channel::level_label(int level) const {
  return make_state(level, j, j, epsilon, branch);
}

std::string Channel::str() const {
  return "j=" + j.str() + ";eps=" + (epsilon == Sign::plus ? "+1" : "-1") +
         ";branch=" + sign_char(branch);
}

Channel channel_of(const StateLabel& s) { return Channel{s.j, s.epsilon, s.energy_sign}; }

// ---------------------------------------------------------------------- grids

RadialGrid make_grid(double r_max, int npts) {
  if (!(r_max > 0.0) || npts < 3) throw DomainError("make_grid: need r_max > 0, npts >= 3");
  const double h = r_max / (npts + 1);
  return RadialGrid{h, r_max, npts, h};
}

RadialGrid default_grid(const OscillatorParams& p, int n_max) {
  if (n_max < 0) throw DomainError("default_grid: n_max must be >= 0");
  const double rho_max = std::sqrt(4.0 * (n_max + 1) + 36.0);
  const int by_spacing = static_cast<int>(std::ceil(rho_max / 0.005)) - 1;
  const int npts = std::max(by_spacing, 40 * n_max + 400);
  return make_grid(rho_max / std::sqrt(p.m_omega()), npts);
}

RadialGrid refine(const RadialGrid& g) { return make_grid(g.r_max, 2 * g.npts + 1); }

// ----------------------------------------------------------- Sturm machinery

namespace {

struct Tridiagonal {
  Eigen::VectorXd diag;
  double off = 0.0;  // constant off-diagonal
  double h = 0.0;
};

Tridiagonal discretize(const SturmProblem& prob, int npts) {
  if (npts < 3) throw DomainError("Sturm problem: npts must be >= 3");
  if (!(prob.length > 0.0)) throw DomainError("Sturm problem: length must be > 0");
  Tridiagonal t;
  t.h = prob.length / (npts + 1);
  const double inv_h2 = 1.0 / (t.h * t.h);
  t.diag.resize(npts);
  for (int i = 0; i < npts; ++i) t.diag[i] = 2.0 * inv_h2 + prob.potential((i + 1) * t.h);
  t.off = -inv_h2;
  return t;
}

// Number of eigenvalues strictly below x.
int sturm_count(const Tridiagonal& t, double x) {
  const double off2 = t.off * t.off;
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  int count = 0;
  double q = 1.0;
  for (Eigen::Index i = 0; i < t.diag.size(); ++i) {
    q = t.diag[i] - x - (i == 0 ? 0.0 : off2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

double bisect_eigenvalue(const Tridiagonal& t, int k, double lo, double hi) {
  // invariant: count(lo) <= k < count(hi)
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(t, mid) > k) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> tridiagonal_eigenvalues(const Tridiagonal& t, int count) {
  const auto n = static_cast<int>(t.diag.size());
  if (count < 1 || count > n) throw DomainError("Sturm problem: invalid eigenvalue count");
  const double spread = 2.0 * std::abs(t.off);
  double lo = t.diag.minCoeff() - spread;
  double hi = t.diag.maxCoeff() + spread;
  lo -= 1e-12 * std::max(1.0, std::abs(lo));
  hi += 1e-12 * std::max(1.0, std::abs(hi));
  std::vector<double> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    out.push_back(bisect_eigenvalue(t, k, lo, hi));
    lo = std::max(lo, out.back() - 1e-9 * std::max(1.0, std::abs(out.back())));
  }
  return out;
}

Eigen::VectorXd solve_shifted(const Tridiagonal& t, double shift, const Eigen::VectorXd& rhs) {
  const Eigen::Index n = t.diag.size();
  Eigen::VectorXd c(n), d(n);
  const double guard = 1e-300;
  double piv = t.diag[0] - shift;
  if (std::abs(piv) < guard) piv = guard;
  c[0] = t.off / piv;
  d[0] = rhs[0] / piv;
  for (Eigen::Index i = 1; i < n; ++i) {
    piv = t.diag[i] - shift - t.off * c[i - 1];
    if (std::abs(piv) < guard) piv = guard;
    c[i] = t.off / piv;
    d[i] = (rhs[i] - t.off * d[i - 1]) / piv;
  }
  Eigen::VectorXd x(n);
  x[n - 1] = d[n - 1];
  for (Eigen::Index i = n - 2; i >= 0; --i) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

Eigen::VectorXd tridiagonal_eigenvector(const Tridiagonal& t, double eigenvalue) {
  const Eigen::Index n = t.diag.size();
  const double shift = eigenvalue + 1e-10 * std::max(1.0, std::abs(eigenvalue));
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  for (int it = 0; it < 4; ++it) {
    v = solve_shifted(t, shift, v);
    v /= v.norm();
  }
  v /= std::sqrt(t.h);  // sum v_i^2 h = 1
  // positive leading lobe
  const double peak = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(v[i]) > 1e-3 * peak) {
      if (v[i] < 0.0) v = -v;
      break;
    }
  }
  return v;
}

}  // namespace

std::vector<double> sturm_eigenvalues(const SturmProblem& prob, int npts, int count) {
  return tridiagonal_eigenvalues(discretize(prob, npts), count);
}

Eigen::VectorXd sturm_eigenvector(const SturmProblem& prob, int npts, double eigenvalue) {
  return tridiagonal_eigenvector(discretize(prob, npts), eigenvalue);
}

SturmProblem channel_problem(const Channel& ch, double rho_max) {
  const int L = ch.dominant_orbital();
  const double centrifugal = static_cast<double>(L) * (L + 1);
  return SturmProblem{[centrifugal](double rho) {
                        return centrifugal / (rho * rho) + rho * rho;
                      },
                      rho_max};
}

// ------------------------------------------------------------- FD eigensolve

namespace {

// (E^2 - m^2)/(m w) = lambda + eps (2j + 1) - beta on the dominant component.
double energy_from_lambda(const OscillatorParams& p, const Channel& ch, double lambda) {
  const double shifted =
      lambda + to_int(ch.epsilon) * (ch.j.twice() + 1) - to_int(ch.branch);
  const double e2 = p.m * p.m + p.m_omega() * shifted;
  if (e2 < 0.0) throw DomainError("FD eigenvalue below the mass gap");
  const double mag = std::sqrt(e2);
  return ch.branch == Sign::plus ? mag : -mag;
}

// Five-point first derivative on u_1..u_n (spacing h) with u_0 = 0, the
// parity-extended values u_{-k} = parity * u_k at the origin, and zeros
// beyond the outer Dirichlet wall.
Eigen::VectorXd derivative5(const Eigen::VectorXd& u, double h, int parity) {
  const Eigen::Index n = u.size();
  auto at = [&](Eigen::Index i) -> double {  // i is the 1-based grid index
    if (i == 0) return 0.0;
    if (i < 0) return parity * u[-i - 1];
    if (i > n) return 0.0;
    return u[i - 1];
  };
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 1; i <= n; ++i)
    d[i - 1] = (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) / (12.0 * h);
  return d;
}

}  // namespace

std::vector<RadialEigenpair> fd_eigensolve(const OscillatorParams& p, const Channel& ch,
                                           const RadialGrid& grid, int n_levels) {
  if (n_levels < 1) throw DomainError("fd_eigensolve: n_levels must be >= 1");
  const double scale = std::sqrt(p.m_omega());
  const double rho_max = grid.r_max * scale;
  const SturmProblem prob = channel_problem(ch, rho_max);
  const RadialGrid fine = refine(grid);

  const Tridiagonal coarse_t = discretize(prob, grid.npts);
  const Tridiagonal fine_t = discretize(prob, fine.npts);
  const auto lam_c = tridiagonal_eigenvalues(coarse_t, n_levels);
  const auto lam_f = tridiagonal_eigenvalues(fine_t, n_levels);

  const int L = ch.dominant_orbital();
  const int parity = ((L + 1) % 2 == 0) ? 1 : -1;
  const double e_scale = std::sqrt(p.m_omega());

  std::vector<RadialEigenpair> out;
  for (int k = 0; k < n_levels; ++k) {
    const double rel = std::abs(lam_f[k] - lam_c[k]) / std::max(1.0, std::abs(lam_f[k]));
    if (rel > 1e-4)
      throw GridTooCoarse("fd_eigensolve: h and h/2 eigenvalues differ by " +
                          std::to_string(rel) + " in " + ch.str());
    const double lambda = (4.0 * lam_f[k] - lam_c[k]) / 3.0;
    const double E = energy_from_lambda(p, ch, lambda);

    const Eigen::VectorXd uc = tridiagonal_eigenvector(coarse_t, lam_c[k]);
    const Eigen::VectorXd uf = tridiagonal_eigenvector(fine_t, lam_f[k]);
    Eigen::VectorXd u(grid.npts);
    for (int i = 0; i < grid.npts; ++i) u[i] = (4.0 * uf[2 * i + 1] - uc[i]) / 3.0;

    const double h_rho = coarse_t.h;
    const Eigen::VectorXd du = derivative5(u, h_rho, parity);
    const int kappa = ch.kappa();
    const double e_plus = (E + p.m) / e_scale;
    const double e_minus = (E - p.m) / e_scale;

    Eigen::VectorXd rho(grid.npts), F(grid.npts), G(grid.npts);
    for (int i = 0; i < grid.npts; ++i) {
      rho[i] = (i + 1) * h_rho;
      const double c = kappa / rho[i] + rho[i];
      if (ch.branch == Sign::plus) {
        F[i] = u[i];
        G[i] = (du[i] + c * u[i]) / e_plus;
      } else {
        G[i] = u[i];
        F[i] = (c * u[i] - du[i]) / e_minus;
      }
    }
    // Normalize in r: integral (F^2 + G^2) dr = 1, dr = d rho / sqrt(m w).
    const double norm_rho = (F.squaredNorm() + G.squaredNorm()) * h_rho;
    const double amp = std::sqrt(scale / norm_rho);
    F *= amp;
    G *= amp;

    // Residual of the coupled system in rho units, relative to the largest term.
    const Eigen::VectorXd dF = derivative5(F, h_rho, ch.branch == Sign::plus ? parity : -parity);
    const Eigen::VectorXd dG = derivative5(G, h_rho, ch.branch == Sign::plus ? -parity : parity);
    // The last two points are excluded: their stencils reach past the wall.
    double worst = 0.0, big = 0.0;
    for (int i = 0; i + 2 < grid.npts; ++i) {
      const double c = kappa / rho[i] + rho[i];
      worst = std::max({worst, std::abs(dF[i] + c * F[i] - e_plus * G[i]),
                        std::abs(-dG[i] + c * G[i] - e_minus * F[i])});
      big = std::max({big, std::abs(dF[i]), std::abs(dG[i]), std::abs(c * F[i]),
                      std::abs(c * G[i])});
    }

    RadialEigenpair pair;
    pair.level = k;
    pair.E = E;
    pair.r = rho / scale;
    pair.F = F;
    pair.G = G;
    pair.residual = big > 0.0 ? worst / big : worst;
    out.push_back(std::move(pair));
  }
  return out;
}

// ------------------------------------------------------------------ shooting

namespace {

struct State2 {
  double F;
  double G;
};

struct Shooter {
  int kappa;
  double e_plus;   // (E + m)/sqrt(m w)
  double e_minus;  // (E - m)/sqrt(m w)

  State2 rhs(double rho, const State2& y) const {
    const double c = kappa / rho + rho;
    return {e_plus * y.G - c * y.F, c * y.G - e_minus * y.F};
  }

  State2 rk4(double rho, const State2& y, double h) const {
    const State2 k1 = rhs(rho, y);
    const State2 k2 = rhs(rho + 0.5 * h, {y.F + 0.5 * h * k1.F, y.G + 0.5 * h * k1.G});
    const State2 k3 = rhs(rho + 0.5 * h, {y.F + 0.5 * h * k2.F, y.G + 0.5 * h * k2.G});
    const State2 k4 = rhs(rho + h, {y.F + h * k3.F, y.G + h * k3.G});
    return {y.F + h / 6.0 * (k1.F + 2 * k2.F + 2 * k3.F + k4.F),
            y.G + h / 6.0 * (k1.G + 2 * k2.G + 2 * k3.G + k4.G)};
  }

  // Regular Frobenius solution at rho: F ~ rho^{-kappa} for kappa < 0,
  // G ~ rho^{kappa} for kappa > 0.
  State2 origin_series(double rho) const {
    const int s = std::abs(kappa);
    constexpr int kTerms = 40;
    std::array<double, kTerms> a{}, b{};
    if (kappa < 0) a[0] = 1.0;
    else b[0] = 1.0;
    for (int k = 1; k < kTerms; ++k) {
      const double a2 = k >= 2 ? a[k - 2] : 0.0;
      const double b2 = k >= 2 ? b[k - 2] : 0.0;
      // (s + k + kappa) a_k = e+ b_{k-1} - a_{k-2}
      // (s + k - kappa) b_k = b_{k-2} - e- a_{k-1}
      a[k] = (e_plus * b[k - 1] - a2) / (s + k + kappa);
      b[k] = (b2 - e_minus * a[k - 1]) / (s + k - kappa);
    }
    double F = 0.0, G = 0.0, pw = std::pow(rho, s);
    for (int k = 0; k < kTerms; ++k) {
      F += a[k] * pw;
      G += b[k] * pw;
      pw *= rho;
    }
    return {F, G};
  }
};

constexpr double kStep = 1e-3;
constexpr double kRhoStart = 0.05;
constexpr double kRhoMatch = 1.0;

Shooter make_shooter(const OscillatorParams& p, const Channel& ch, double E) {
  const double s = std::sqrt(p.m_omega());
  return Shooter{ch.kappa(), (E + p.m) / s, (E - p.m) / s};
}

double outer_start(const OscillatorParams& p, const Channel& ch, double E) {
  const double shifted = std::max(0.0, (E * E - p.m * p.m) / p.m_omega());
  return std::sqrt(shifted + ch.j.twice() + 5.0) + 4.5;
}

// Integrates from a to b (either direction) in steps close to kStep,
// renormalizing every 50 steps. Optional sampler receives (rho, state, scale)
// where scale is the accumulated renormalization divisor.
template <typename Sampler>
State2 integrate(const Shooter& sh, double a, double b, State2 y, Sampler&& sample) {
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / kStep)));
  const double h = (b - a) / steps;
  double log_scale = 0.0;
  sample(a, y, log_scale);
  for (int i = 0; i < steps; ++i) {
    y = sh.rk4(a + i * h, y, h);
    if ((i + 1) % 50 == 0) {
      const double norm = std::hypot(y.F, y.G);
      if (norm > 0.0) {
        y.F /= norm;
        y.G /= norm;
        log_scale += std::log(norm);
      }
    }
    sample(a + (i + 1) * h, y, log_scale);
  }
  return y;
}

struct MatchResult {
  State2 out;
  State2 in;
};

MatchResult shoot(const OscillatorParams& p, const Channel& ch, double E) {
  const Shooter sh = make_shooter(p, ch, E);
  auto ignore = [](double, const State2&, double) {};
  const State2 y0 = sh.origin_series(kRhoStart);
  const State2 out = integrate(sh, kRhoStart, kRhoMatch, y0, ignore);
  const double rho_end = outer_start(p, ch, E);
  const State2 tail{1.0, sh.e_minus / (2.0 * rho_end)};
  const State2 in = integrate(sh, rho_end, kRhoMatch, tail, ignore);
  return {out, in};
}

double determinant(const MatchResult& r) {
  const double no = std::hypot(r.out.F, r.out.G);
  const double ni = std::hypot(r.in.F, r.in.G);
  return (r.out.F * r.in.G - r.out.G * r.in.F) / (no * ni);
}

}  // namespace

double matching_determinant(const OscillatorParams& p, const Channel& ch, double E) {
  return determinant(shoot(p, ch, E));
}

RadialEigenpair shooting_solve(const OscillatorParams& p, const Channel& ch, double e_lo,
                               double e_hi) {
  if (!(e_lo < e_hi)) throw DomainError("shooting_solve: need e_lo < e_hi");
  double lo = e_lo, hi = e_hi;
  double d_lo = matching_determinant(p, ch, lo);
  const double d_hi = matching_determinant(p, ch, hi);
  if (d_lo == 0.0) hi = lo;
  else if (d_hi == 0.0) lo = hi;
  else if ((d_lo > 0) == (d_hi > 0))
    throw BracketError("shooting_solve: no sign change of the matching determinant in (" +
                       std::to_string(e_lo) + ", " + std::to_string(e_hi) + ") for " +
                       ch.str());
  for (int it = 0; it < 200 && hi - lo > 4e-16 * std::max(std::abs(lo), std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double d = matching_determinant(p, ch, mid);
    if (d == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((d > 0) == (d_lo > 0)) {
      lo = mid;
      d_lo = d;
    } else {
      hi = mid;
    }
  }
  const double E = 0.5 * (lo + hi);

  // Sample the matched solution on a uniform rho grid of the shooting step.
  const Shooter sh = make_shooter(p, ch, E);
  std::vector<double> rho_s, F_s, G_s, logs;
  auto record = [&](double rho, const State2& y, double log_scale) {
    rho_s.push_back(rho);
    F_s.push_back(y.F);
    G_s.push_back(y.G);
    logs.push_back(log_scale);
  };
  const State2 out_end = integrate(sh, kRhoStart, kRhoMatch, sh.origin_series(kRhoStart), record);
  const std::size_t n_out = rho_s.size();
  const double out_log = logs.back();
  const double rho_end = outer_start(p, ch, E);
  const State2 in_end =
      integrate(sh, rho_end, kRhoMatch, State2{1.0, sh.e_minus / (2.0 * rho_end)}, record);
  const double in_log = logs.back();

  // Bring both pieces to a common scale: true value = stored * exp(log_scale),
  // then match the inward piece to the outward one at rho_match.
  const double ratio_den = std::abs(in_end.F) > std::abs(in_end.G) ? in_end.F : in_end.G;
  const double ratio_num = std::abs(in_end.F) > std::abs(in_end.G) ? out_end.F : out_end.G;
  const double match = ratio_num / ratio_den;  // in-piece at match * match == out-piece

  RadialEigenpair pair;
  pair.level = -1;
  pair.E = E;
  std::vector<std::array<double, 3>> samples;
  for (std::size_t i = 0; i < n_out; ++i) {
    const double f = std::exp(logs[i] - out_log);
    samples.push_back({rho_s[i], F_s[i] * f, G_s[i] * f});
  }
  for (std::size_t i = rho_s.size(); i-- > n_out;) {
    const double f = std::exp(logs[i] - in_log) * match;
    samples.push_back({rho_s[i], F_s[i] * f, G_s[i] * f});
  }
  // samples are ascending in rho except for the duplicated match point.
  std::vector<std::array<double, 3>> uniq;
  for (const auto& s : samples)
    if (uniq.empty() || s[0] > uniq.back()[0] + 1e-12) uniq.push_back(s);

  const double scale = std::sqrt(p.m_omega());
  double norm = 0.0;
  for (std::size_t i = 1; i < uniq.size(); ++i) {
    const double dr = uniq[i][0] - uniq[i - 1][0];
    norm += 0.5 * dr *
            (uniq[i][1] * uniq[i][1] + uniq[i][2] * uniq[i][2] +
             uniq[i - 1][1] * uniq[i - 1][1] + uniq[i - 1][2] * uniq[i - 1][2]);
  }
  const double amp = std::sqrt(scale / norm);
  const auto n = static_cast<Eigen::Index>(uniq.size());
  pair.r.resize(n);
  pair.F.resize(n);
  pair.G.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    pair.r[i] = uniq[i][0] / scale;
    pair.F[i] = uniq[i][1] * amp;
    pair.G[i] = uniq[i][2] * amp;
  }
  pair.residual = std::abs(matching_determinant(p, ch, E));
  return pair;
}

std::pair<double, double> shooting_bracket(const std::vector<RadialEigenpair>& fd,
                                           std::size_t index) {
  if (index >= fd.size()) throw DomainError("shooting_bracket: index out of range");
  const double E = fd[index].E;
  double lo = E - 0.05 * std::abs(E);
  double hi = E + 0.05 * std::abs(E);
  for (std::size_t k = 0; k < fd.size(); ++k) {
    if (k == index) continue;
    const double mid = 0.5 * (E + fd[k].E);
    if (fd[k].E > E) hi = std::min(hi, mid);
    if (fd[k].E < E) lo = std::max(lo, mid);
  }
  return {lo, hi};
}

// ---------------------------------------------------------------- convergence

namespace {

ConvergenceReport finish_report(std::vector<double> h, std::vector<double> values) {
  ConvergenceReport rep;
  rep.h = std::move(h);
  rep.eigenvalues = std::move(values);
  const auto& v = rep.eigenvalues;
  for (std::size_t i = 2; i < v.size(); ++i) {
    const double d1 = std::abs(v[i - 1] - v[i - 2]);
    const double d2 = std::abs(v[i] - v[i - 1]);
    rep.orders.push_back(d2 > 0.0 && d1 > 0.0 ? std::log2(d1 / d2)
                                              : std::numeric_limits<double>::quiet_NaN());
  }
  rep.order = rep.orders.back();
  rep.error_estimate = std::abs(v[v.size() - 1] - v[v.size() - 2]);
  return rep;
}

}  // namespace

ConvergenceReport convergence_report(const OscillatorParams& p, const Channel& ch,
                                     const std::vector<RadialGrid>& grids, int level) {
  if (grids.size() < 3) throw DomainError("convergence_report: need at least three grids");
  std::vector<double> h, values;
  const double scale = std::sqrt(p.m_omega());
  for (const auto& g : grids) {
    const SturmProblem prob = channel_problem(ch, g.r_max * scale);
    const auto lam = sturm_eigenvalues(prob, g.npts, level + 1);
    h.push_back(g.h);
    values.push_back(energy_from_lambda(p, ch, lam[level]));
  }
  return finish_report(std::move(h), std::move(values));
}

ConvergenceReport convergence_report(const SturmProblem& prob, const std::vector<int>& npts,
                                     int level) {
  if (npts.size() < 3) throw DomainError("convergence_report: need at least three grids");
  std::vector<double> h, values;
  for (int n : npts) {
    h.push_back(prob.length / (n + 1));
    values.push_back(sturm_eigenvalues(prob, n, level + 1)[level]);
  }
  return finish_report(std::move(h), std::move(values));
}

}  // namespace dosc
