#pragma once

// Exact operator algebra on four-spinors whose components are polynomials
// in (x, y, z) multiplied by a shared Gaussian exp(-a r^2 / 2).
//
// The class is closed under d/dx_k, multiplication by x_k and constant 4x4
// matrices, so the Dirac-oscillator Hamiltonian, its square, L, S and their
// commutators act on it by coefficient arithmetic alone. Inner products are
// closed-form Gaussian moments.

#include <array>
#include <complex>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dirac_osc/core.hpp"
#include "dirac_osc/dirac_matrices.hpp"

namespace dosc {

using cplx = std::complex<double>;

/// Dense trivariate polynomial with total degree <= kMaxDegree.
class Poly3 {
public:
  static constexpr int kMaxDegree = 12;
  static constexpr int kSide = kMaxDegree + 1;

  Poly3();

  cplx coeff(int i, int j, int k) const { return c_[index(i, j, k)]; }
  cplx& coeff(int i, int j, int k) { return c_[index(i, j, k)]; }

  /// Upper bound on the total degree of nonzero coefficients.
  int degree_bound() const { return degree_; }
  void raise_degree_bound(int d);
  /// Actual total degree (-1 for the zero polynomial).
  int degree() const;

  double max_abs() const;

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(cplx s);

  /// d/dx_axis of the polynomial part only.
  Poly3 derivative(int axis) const;
  /// x_axis * P.
  Poly3 times_coordinate(int axis) const;

  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i <= degree_; ++i)
      for (int j = 0; i + j <= degree_; ++j)
        for (int k = 0; i + j + k <= degree_; ++k) f(i, j, k, c_[index(i, j, k)]);
  }

private:
  static constexpr int index(int i, int j, int k) {
    return (i * kSide + j) * kSide + k;
  }
  std::vector<cplx> c_;
  int degree_ = 0;
};

struct PolyGaussSpinor {
  double width = 1.0;  // a in exp(-a r^2 / 2)
  std::array<Poly3, 4> comp;

  int degree() const;
  double max_abs() const;

  PolyGaussSpinor& operator+=(const PolyGaussSpinor& o);
  PolyGaussSpinor& operator-=(const PolyGaussSpinor& o);
  PolyGaussSpinor& operator*=(cplx s);
};

PolyGaussSpinor operator+(PolyGaussSpinor a, const PolyGaussSpinor& b);
PolyGaussSpinor operator-(PolyGaussSpinor a, const PolyGaussSpinor& b);
PolyGaussSpinor operator*(cplx s, PolyGaussSpinor a);
PolyGaussSpinor operator*(const Matrix4c& m, const PolyGaussSpinor& psi);

PolyGaussSpinor zero_spinor(double width);
/// Constant spinor times the bare Gaussian.
PolyGaussSpinor gaussian_spinor(double width, const Eigen::Vector4cd& spinor);
/// Random complex coefficients in [-1, 1]^2 up to the given total degree.
PolyGaussSpinor random_spinor(std::mt19937_64& rng, int degree, double width);

/// d/dx_axis of the full polynomial-times-Gaussian function.
PolyGaussSpinor partial(const PolyGaussSpinor& psi, int axis);
PolyGaussSpinor times_coordinate(const PolyGaussSpinor& psi, int axis);
/// p_k = -i d/dx_k
PolyGaussSpinor momentum(const PolyGaussSpinor& psi, int axis);
/// p^2 = -laplacian
PolyGaussSpinor momentum_squared(const PolyGaussSpinor& psi);
PolyGaussSpinor radius_squared(const PolyGaussSpinor& psi);
/// L_k = (r x p)_k
PolyGaussSpinor orbital(const PolyGaussSpinor& psi, int axis);
/// S.L with S = Sigma / 2
PolyGaussSpinor spin_orbit(const PolyGaussSpinor& psi);

/// Max-coefficient distance, relative to max(1, |a|, |b|).
double relative_distance(const PolyGaussSpinor& a, const PolyGaussSpinor& b);
/// Exact integral of psi1^dagger psi2 over R^3.
cplx inner(const PolyGaussSpinor& psi1, const PolyGaussSpinor& psi2);

enum class Coupling {
  oscillator,    // alpha.(p - i m omega r beta) + m beta
  beta_dropped,  // alpha.(p - i m omega r) + m beta; mutation control
};

PolyGaussSpinor apply_H(const OscillatorParams& p, const PolyGaussSpinor& psi,
                        Coupling coupling = Coupling::oscillator);

enum class SquareForm {
  printed,  // p^2 + m^2 w^2 r^2 + (4 S.L - 3) m w beta
  derived,  // p^2 + m^2 w^2 r^2 - (4 S.L + 3) m w beta + m^2
};

PolyGaussSpinor rhs_H2(const OscillatorParams& p, const PolyGaussSpinor& psi,
                       SquareForm form);

struct CommutatorSides {
  PolyGaussSpinor lhs;
  PolyGaussSpinor rhs;
};

/// lhs = [L_k, H] psi,  rhs = [i (alpha x p) - m w (r x alpha) beta]_k psi
CommutatorSides commutator_L_H(const OscillatorParams& p,
                               const PolyGaussSpinor& psi, int axis);
/// lhs = [Sigma_k/2, H] psi,  rhs = [-i (alpha x p) + m w (r x alpha) beta]_k psi
CommutatorSides commutator_S_H(const OscillatorParams& p,
                               const PolyGaussSpinor& psi, int axis);

/// (a, b) = (<psi1, H psi2>, <H psi1, psi2>); equal for a Hermitian H.
std::pair<cplx, cplx> hermiticity_witness(const OscillatorParams& p,
                                          const PolyGaussSpinor& psi1,
                                          const PolyGaussSpinor& psi2,
                                          Coupling coupling = Coupling::oscillator);

/// (kappa e / 4m) sigma_{mu nu} F^{mu nu} by explicit double contraction with
/// the field tensor of the charged sphere at x = (0, r).
Matrix4c sigma_interaction_matrix(double lambda, double kappa_e_over_m,
                                  const Eigen::Vector3d& r);

/// (kappa e / 2m) lambda (i alpha.r)
Matrix4c sigma_interaction_closed_form(double lambda, double kappa_e_over_m,
                                       const Eigen::Vector3d& r);

}  // namespace dosc
