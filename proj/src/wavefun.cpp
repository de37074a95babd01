#include "dirac_osc/wavefun.hpp"

#include <cmath>
#include <numbers>

#include "dirac_osc/error.hpp"
#include "dirac_osc/radial_oracle.hpp"

namespace dosc {

namespace {

// rho^{L+1} exp(-rho^2/2) 1F1(-k, L+3/2, rho^2)
double oscillator_radial(int k, int orbital, double rho) {
  if (k < 0) return 0.0;
  const double b = orbital + 1.5;
  return std::pow(rho, orbital + 1) * std::exp(-0.5 * rho * rho) *
         kummer_terminating(k, b, rho * rho);
}

double oscillator_radial_drho(int k, int orbital, double rho) {
  if (k < 0) return 0.0;
  const double b = orbital + 1.5;
  const double x = rho * rho;
  const double g = std::exp(-0.5 * x);
  const double m = kummer_terminating(k, b, x);
  const double dm = kummer_terminating_dx(k, b, x);
  const double lead = orbital == 0 ? 1.0 : (orbital + 1) * std::pow(rho, orbital);
  return g * (lead * m + std::pow(rho, orbital + 2) * (2.0 * dm - m));
}

void check_radius(double r) {
  if (r < 0.0) throw DomainError("radius must be nonnegative");
}

}  // namespace

double radial_F(const OscillatorParams& p, const StateLabel& s, double r) {
  check_radius(r);
  return oscillator_radial(s.upper_nodes(), s.l, std::sqrt(p.m_omega()) * r);
}

double radial_G(const OscillatorParams& p, const StateLabel& s, double r) {
  check_radius(r);
  return oscillator_radial(s.lower_nodes(), s.l_prime(), std::sqrt(p.m_omega()) * r);
}

double radial_F_dr(const OscillatorParams& p, const StateLabel& s, double r) {
  check_radius(r);
  const double k = std::sqrt(p.m_omega());
  return k * oscillator_radial_drho(s.upper_nodes(), s.l, k * r);
}

double radial_G_dr(const OscillatorParams& p, const StateLabel& s, double r) {
  check_radius(r);
  const double k = std::sqrt(p.m_omega());
  return k * oscillator_radial_drho(s.lower_nodes(), s.l_prime(), k * r);
}

double radial_cutoff(const OscillatorParams& p, const StateLabel& s) {
  const int n_upper = 2 * std::max(s.upper_nodes(), 0) + s.l;
  const int n_lower = 2 * std::max(s.lower_nodes(), 0) + s.l_prime();
  const int big_n = std::max(n_upper, n_lower);
  return std::sqrt((4.0 * big_n + 36.0) / p.m_omega());
}

double RadialPair::F(double r) const {
  return norm_constant * radial_F(params, label, r);
}
double RadialPair::G(double r) const {
  return norm_constant * g_weight * radial_G(params, label, r);
}
double RadialPair::dF(double r) const {
  return norm_constant * radial_F_dr(params, label, r);
}
double RadialPair::dG(double r) const {
  return norm_constant * g_weight * radial_G_dr(params, label, r);
}

RadialPair closed_form_pair(const OscillatorParams& p, const StateLabel& s) {
  return RadialPair{s, p, 1.0, 1.0};
}

double relative_weight(const OscillatorParams& p, const StateLabel& s) {
  return fit_relative_weight(first_order_system(p, s), p, s);
}

double norm_integral(const RadialPair& pair, int npts) {
  const auto rule = gauss_legendre(npts, 0.0, radial_cutoff(pair.params, pair.label));
  return rule.integrate([&](double r) {
    const double f = pair.F(r);
    const double g = pair.G(r);
    return f * f + g * g;
  });
}

RadialPair normalize(const RadialPair& pair, double weight, int npts) {
  RadialPair out = pair;
  out.norm_constant = 1.0;
  out.g_weight = weight;
  const double norm = norm_integral(out, npts);
  if (!(norm > 0.0)) throw DomainError("normalize: zero-norm radial pair");
  out.norm_constant = 1.0 / std::sqrt(norm);
  return out;
}

RadialPair eigenstate(const OscillatorParams& p, const StateLabel& s) {
  return normalize(closed_form_pair(p, s), relative_weight(p, s));
}

double radial_overlap(const RadialPair& a, const RadialPair& b, int npts) {
  const double cut = std::max(radial_cutoff(a.params, a.label),
                              radial_cutoff(b.params, b.label));
  const auto rule = gauss_legendre(npts, 0.0, cut);
  return rule.integrate(
      [&](double r) { return a.F(r) * b.F(r) + a.G(r) * b.G(r); });
}

double published_norm_constant(const OscillatorParams& p, const StateLabel& s) {
  const double n = s.n;
  const double l = s.l;
  const double eps = to_int(s.epsilon);
  double n_factorial = std::tgamma(n + 1.0);
  const double power = std::pow(2.0, n + l - eps / 2.0 + 1.5);
  // (2n + 2L + 1 - 2 eps)!!, L read as l.
  const double dfact = double_factorial(static_cast<int>(2 * n + 2 * l + 1 - 2 * eps));
  const double cubic = std::pow(n + l + 1.0 - eps / 2.0, 3) + std::pow(n + l - eps / 2.0, 2);
  return std::pow(p.m_omega() / std::numbers::pi, 0.25) *
         std::sqrt(n_factorial * power / dfact) / std::sqrt(cubic);
}

Eigen::Vector2cd spinor_harmonic(HalfInt j, HalfInt m_j, int l, double theta,
                                 double phi) {
  const int j2 = j.twice();
  const int m2 = m_j.twice();
  if (std::abs(m2) > j2) throw DomainError("spinor_harmonic: |m_j| > j");
  if (2 * l != j2 - 1 && 2 * l != j2 + 1)
    throw DomainError("spinor_harmonic: l must be j - 1/2 or j + 1/2");

  const bool upper_branch = (2 * l == j2 - 1);
  const double denom = 2.0 * l + 1.0;
  // (l + m + 1/2) and (l - m + 1/2) from doubled integers
  const double plus = (2 * l + m2 + 1) / 2.0;
  const double minus = (2 * l - m2 + 1) / 2.0;
  const double c_up = upper_branch ? std::sqrt(plus / denom) : std::sqrt(minus / denom);
  const double c_dn = upper_branch ? std::sqrt(minus / denom) : -std::sqrt(plus / denom);

  const int m_up = (m2 - 1) / 2;  // m_j - 1/2
  const int m_dn = (m2 + 1) / 2;  // m_j + 1/2
  Eigen::Vector2cd out = Eigen::Vector2cd::Zero();
  if (std::abs(m_up) <= l) out[0] = c_up * spherical_harmonic(l, m_up, theta, phi);
  if (std::abs(m_dn) <= l) out[1] = c_dn * spherical_harmonic(l, m_dn, theta, phi);
  return out;
}

SpinorSample assemble_spinor(const OscillatorParams& p, const StateLabel& s,
                             const RadialPair& pair, double r, double theta,
                             double phi) {
  if (!(r > 0.0)) throw DomainError("assemble_spinor: r must be positive");
  (void)p;
  const std::complex<double> I(0.0, 1.0);
  const Eigen::Vector2cd upper = spinor_harmonic(s.j, s.m_j, s.l, theta, phi);
  const Eigen::Vector2cd lower = spinor_harmonic(s.j, s.m_j, s.l_prime(), theta, phi);
  SpinorSample out{r, theta, phi, Eigen::Vector4cd::Zero()};
  out.psi.head<2>() = (pair.F(r) / r) * upper;
  out.psi.tail<2>() = (-I * pair.G(r) / r) * lower;
  return out;
}

}  // namespace dosc
