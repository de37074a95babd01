#include "dirac_osc/specfun.hpp"

#include <numbers>
#include <string>

namespace dosc {

double double_factorial(int k) {
  if (k < -1) throw DomainError("double_factorial: k < -1");
  double out = 1.0;
  for (int i = k; i > 1; i -= 2) out *= i;
  return out;
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l)
    throw DomainError("spherical_harmonic: need |m| <= l, got l=" +
                      std::to_string(l) + " m=" + std::to_string(m));
  if (m < 0) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * std::conj(spherical_harmonic(l, -m, theta, phi));
  }

  const double x = std::cos(theta);
  const double s = std::sin(theta);

  // Normalized P_m^m including 1/sqrt(4 pi) and (-1)^m.
  double pmm = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  for (int k = 1; k <= m; ++k)
    pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;

  double plm = pmm;
  if (l > m) {
    double p_prev = pmm;
    double p_cur = std::sqrt(2.0 * m + 3.0) * x * pmm;
    for (int ll = m + 2; ll <= l; ++ll) {
      const double a_l = std::sqrt((4.0 * ll * ll - 1.0) / (ll * ll - m * m));
      const double a_lm1 = std::sqrt((4.0 * (ll - 1) * (ll - 1) - 1.0) /
                                     ((ll - 1) * (ll - 1) - m * m));
      const double next = a_l * (x * p_cur - p_prev / a_lm1);
      p_prev = p_cur;
      p_cur = next;
    }
    plm = p_cur;
  }
  return std::polar(plm, m * phi);
}

QuadratureRule gauss_legendre(int npts, double a, double b) {
  if (npts < 1) throw DomainError("gauss_legendre: npts must be >= 1");
  if (!(a < b)) throw DomainError("gauss_legendre: degenerate interval");

  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(npts);
  rule.weights.resize(npts);

  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const int nhalf = (npts + 1) / 2;
  for (int i = 0; i < nhalf; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (npts + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 0; k < npts; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
      }
      dp = npts * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    // z runs from +1 downward; store ascending.
    rule.nodes[i] = mid - half * z;
    rule.nodes[npts - 1 - i] = mid + half * z;
    rule.weights[i] = half * w;
    rule.weights[npts - 1 - i] = half * w;
  }
  return rule;
}

}  // namespace dosc
