#include "dirac_osc/covariance.hpp"

#include "dirac_osc/error.hpp"

namespace dosc {

Eigen::Matrix4d numerical_gradient(const PotentialField& a, const FourVector& x,
                                   double step) {
  Eigen::Matrix4d grad;
  for (int mu = 0; mu < 4; ++mu) {
    FourVector xp = x;
    FourVector xm = x;
    xp[mu] += step;
    xm[mu] -= step;
    const FourVector d_lower = (a(xp) - a(xm)) / (2.0 * step);  // d_mu A^nu
    const double raise = (mu == 0) ? 1.0 : -1.0;
    grad.row(mu) = raise * d_lower.transpose();
  }
  return grad;
}

FieldTensor numerical_field_tensor(const PotentialField& a, const FourVector& x,
                                   double step) {
  const Eigen::Matrix4d g = numerical_gradient(a, x, step);
  return g - g.transpose();
}

FourVector gauge_transformed_lab_potential(double lambda, const FourVector& x,
                                           double step) {
  const Eigen::Vector3d r = x.tail<3>();
  FourVector d_upper;
  for (int mu = 0; mu < 4; ++mu) {
    FourVector xp = x;
    FourVector xm = x;
    xp[mu] += step;
    xm[mu] -= step;
    const double d_lower =
        (gauge_function(lambda, xp[0], Eigen::Vector3d(xp.tail<3>())) -
         gauge_function(lambda, xm[0], Eigen::Vector3d(xm.tail<3>()))) /
        (2.0 * step);
    d_upper[mu] = (mu == 0) ? d_lower : -d_lower;
  }
  return potential_lab(lambda, x[0], r) - d_upper;
}

double lambda_for_oscillator(const OscillatorParams& p, double e, double kappa) {
  if (!(e > 0.0)) throw DomainError("lambda_for_oscillator: charge must be positive");
  if (kappa == 0.0) throw DomainError("lambda_for_oscillator: kappa must be nonzero");
  return 2.0 * p.m * p.m * p.omega / (e * kappa);
}

}  // namespace dosc
