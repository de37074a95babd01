#pragma once

// Special functions and quadrature used by the closed-form eigenfunctions.
// Only what the oscillator needs: terminating Kummer series, generalized
// Laguerre polynomials, double factorials, spherical harmonics with the
// Condon-Shortley phase, and Gauss-Legendre rules.

#include <cmath>
#include <complex>
#include <functional>

#include <Eigen/Core>

#include "dirac_osc/error.hpp"

namespace dosc {

/// 1F1(-n; b; x) for integer n >= 0. The series terminates after n + 1
/// terms and is summed by nested (Horner) multiplication.
template <typename Scalar>
Scalar kummer_terminating(int n, Scalar b, Scalar x) {
  if (n < 0) throw DomainError("kummer_terminating: n must be >= 0");
  if (b <= Scalar(0) && std::floor(b) == b)
    throw DomainError("kummer_terminating: b is a nonpositive integer");
  // 1 + c_0 x (1 + c_1 x (1 + ... )) with c_k = (k - n) / ((b + k)(k + 1)).
  Scalar acc(1);
  for (int k = n - 1; k >= 0; --k) {
    const Scalar c = Scalar(k - n) / ((b + Scalar(k)) * Scalar(k + 1));
    acc = Scalar(1) + c * x * acc;
  }
  return acc;
}

/// d/dx 1F1(-n; b; x) = (-n / b) 1F1(-n + 1; b + 1; x).
template <typename Scalar>
Scalar kummer_terminating_dx(int n, Scalar b, Scalar x) {
  if (n == 0) return Scalar(0);
  return Scalar(-n) / b * kummer_terminating(n - 1, b + Scalar(1), x);
}

/// L_n^(alpha)(x) by the three-term recurrence.
template <typename Scalar>
Scalar laguerre_general(int n, Scalar alpha, Scalar x) {
  if (n < 0) throw DomainError("laguerre_general: n must be >= 0");
  if (!(alpha > Scalar(-1))) throw DomainError("laguerre_general: alpha <= -1");
  Scalar prev(1);
  if (n == 0) return prev;
  Scalar cur = Scalar(1) + alpha - x;
  for (int k = 1; k < n; ++k) {
    const Scalar next =
        ((Scalar(2 * k + 1) + alpha - x) * cur - (Scalar(k) + alpha) * prev) /
        Scalar(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// k!! with (-1)!! = 0!! = 1.
double double_factorial(int k);

/// Orthonormal Y_{l,m}(theta, phi) with the Condon-Shortley phase.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  double a = -1.0;
  double b = 1.0;

  std::size_t size() const { return static_cast<std::size_t>(nodes.size()); }

  template <typename F>
  auto integrate(F&& f) const -> decltype(f(0.0)) {
    decltype(f(0.0)) sum{};
    for (Eigen::Index i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// npts-point Gauss-Legendre rule on [a, b]; exact through degree 2 npts - 1.
QuadratureRule gauss_legendre(int npts, double a, double b);

}  // namespace dosc
