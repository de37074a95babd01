#pragma once

// Potentials and field tensor of a uniformly charged sphere (interior,
// E = -lambda r, B = 0) and the coupling constant that turns an anomalous
// magnetic moment in that field into the Dirac-oscillator interaction.
//
// Metric (+,-,-,-), x^mu = (t, x, y, z), d^mu = (d_t, -grad).

#include <cmath>
#include <functional>

#include <Eigen/Core>

#include "dirac_osc/core.hpp"

namespace dosc {

template <typename Scalar>
using FourVectorT = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar>
using FieldTensorT = Eigen::Matrix<Scalar, 4, 4>;
template <typename Scalar>
using LorentzMatrixT = Eigen::Matrix<Scalar, 4, 4>;

using FourVector = FourVectorT<double>;
using FieldTensor = FieldTensorT<double>;
using LorentzMatrix = LorentzMatrixT<double>;

template <typename Scalar>
FourVectorT<Scalar> lab_four_velocity() {
  return FourVectorT<Scalar>(1, 0, 0, 0);
}

template <typename Scalar>
Scalar minkowski_dot(const FourVectorT<Scalar>& a, const FourVectorT<Scalar>& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

/// x_mu from x^mu.
template <typename Scalar>
FourVectorT<Scalar> lower_index(const FourVectorT<Scalar>& v) {
  return FourVectorT<Scalar>(v[0], -v[1], -v[2], -v[3]);
}

/// Pure boost with the given rapidity along a unit direction.
template <typename Scalar>
LorentzMatrixT<Scalar> boost(Scalar rapidity, const Eigen::Matrix<Scalar, 3, 1>& direction) {
  const Eigen::Matrix<Scalar, 3, 1> n = direction.normalized();
  const Scalar ch = std::cosh(rapidity);
  const Scalar sh = std::sinh(rapidity);
  LorentzMatrixT<Scalar> b = LorentzMatrixT<Scalar>::Identity();
  b(0, 0) = ch;
  for (int i = 0; i < 3; ++i) {
    b(0, i + 1) = sh * n[i];
    b(i + 1, 0) = sh * n[i];
    for (int k = 0; k < 3; ++k) b(i + 1, k + 1) += (ch - Scalar(1)) * n[i] * n[k];
  }
  return b;
}

/// Lab-frame potential with zero scalar part: A^mu = lambda (0, t r).
template <typename Scalar>
FourVectorT<Scalar> potential_lab(Scalar lambda, Scalar t,
                                  const Eigen::Matrix<Scalar, 3, 1>& r) {
  return FourVectorT<Scalar>(Scalar(0), lambda * t * r[0], lambda * t * r[1],
                             lambda * t * r[2]);
}

/// Lambda = -(lambda / 4)(t r^2 - t^3 / 3), evaluated as written.
template <typename Scalar>
Scalar gauge_function(Scalar lambda, Scalar t, const Eigen::Matrix<Scalar, 3, 1>& r) {
  return -lambda / Scalar(4) * (t * r.squaredNorm() - t * t * t / Scalar(3));
}

/// A^mu = (lambda/4) [2 (U.x) x^mu - x^2 U^mu].
template <typename Scalar>
FourVectorT<Scalar> potential_cov(Scalar lambda, const FourVectorT<Scalar>& x,
                                  const FourVectorT<Scalar>& u) {
  return lambda / Scalar(4) *
         (Scalar(2) * minkowski_dot(u, x) * x - minkowski_dot(x, x) * u);
}

template <typename Scalar>
FourVectorT<Scalar> potential_cov(Scalar lambda, const FourVectorT<Scalar>& x) {
  return potential_cov(lambda, x, lab_four_velocity<Scalar>());
}

/// F^{mu nu} = lambda (U^mu x^nu - U^nu x^mu).
template <typename Scalar>
FieldTensorT<Scalar> field_tensor(Scalar lambda, const FourVectorT<Scalar>& x,
                                  const FourVectorT<Scalar>& u) {
  return lambda * (u * x.transpose() - x * u.transpose());
}

template <typename Scalar>
FieldTensorT<Scalar> field_tensor(Scalar lambda, const FourVectorT<Scalar>& x) {
  return field_tensor(lambda, x, lab_four_velocity<Scalar>());
}

/// E^i = F^{i0}
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> electric_field(const FieldTensorT<Scalar>& f) {
  return Eigen::Matrix<Scalar, 3, 1>(f(1, 0), f(2, 0), f(3, 0));
}

/// B^i = -(1/2) eps_ijk F^{jk}
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> magnetic_field(const FieldTensorT<Scalar>& f) {
  return Eigen::Matrix<Scalar, 3, 1>(-f(2, 3), -f(3, 1), -f(1, 2));
}

using PotentialField = std::function<FourVector(const FourVector&)>;

/// d^mu A^nu by central differences; row mu, column nu.
Eigen::Matrix4d numerical_gradient(const PotentialField& a, const FourVector& x,
                                   double step = 1e-5);

/// d^mu A^nu - d^nu A^mu by central differences.
FieldTensor numerical_field_tensor(const PotentialField& a, const FourVector& x,
                                   double step = 1e-5);

/// Lab potential after the gauge transformation A - d Lambda, with d Lambda
/// taken numerically.
FourVector gauge_transformed_lab_potential(double lambda, const FourVector& x,
                                           double step = 1e-5);

/// lambda = 2 m^2 omega / (e kappa). Throws DomainError for e <= 0 or kappa = 0.
double lambda_for_oscillator(const OscillatorParams& p, double e, double kappa);

}  // namespace dosc
