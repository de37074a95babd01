#pragma once

// Dirac-representation matrices. Metric signature (+,-,-,-); gamma^0 = beta,
// gamma^k = beta alpha_k, sigma_{mu nu} = (i/2)[gamma_mu, gamma_nu].

#include <complex>

#include <Eigen/Core>

namespace dosc {

using Matrix4c = Eigen::Matrix4cd;
using Matrix2c = Eigen::Matrix2cd;

Matrix2c pauli(int k);  // k = 0, 1, 2 for x, y, z

Matrix4c alpha(int k);
Matrix4c beta();
Matrix4c identity4();

/// gamma^mu with an upper index, mu = 0..3.
Matrix4c gamma_upper(int mu);
/// gamma_mu = g_{mu nu} gamma^nu.
Matrix4c gamma_lower(int mu);
/// sigma_{mu nu} = (i/2)[gamma_mu, gamma_nu].
Matrix4c sigma_lower(int mu, int nu);
/// Spin operator Sigma_k / 2 = diag(sigma_k, sigma_k) / 2.
Matrix4c spin(int k);

/// g_{mu mu} for the (+,-,-,-) metric.
constexpr double metric_diag(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// Levi-Civita symbol on three indices 0..2.
constexpr int levi_civita(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;
}

}  // namespace dosc
