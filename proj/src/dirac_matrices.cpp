#include "dirac_osc/dirac_matrices.hpp"

#include <stdexcept>

namespace dosc {

namespace {
const std::complex<double> I(0.0, 1.0);
}

Matrix2c pauli(int k) {
  Matrix2c s;
  switch (k) {
    case 0: s << 0, 1, 1, 0; break;
    case 1: s << 0, -I, I, 0; break;
    case 2: s << 1, 0, 0, -1; break;
    default: throw std::out_of_range("pauli: axis must be 0, 1 or 2");
  }
  return s;
}

Matrix4c alpha(int k) {
  Matrix4c a = Matrix4c::Zero();
  a.topRightCorner<2, 2>() = pauli(k);
  a.bottomLeftCorner<2, 2>() = pauli(k);
  return a;
}

Matrix4c beta() {
  Matrix4c b = Matrix4c::Identity();
  b.bottomRightCorner<2, 2>() *= -1.0;
  return b;
}

Matrix4c identity4() { return Matrix4c::Identity(); }

Matrix4c gamma_upper(int mu) {
  if (mu == 0) return beta();
  return beta() * alpha(mu - 1);
}

Matrix4c gamma_lower(int mu) { return metric_diag(mu) * gamma_upper(mu); }

Matrix4c sigma_lower(int mu, int nu) {
  const Matrix4c gm = gamma_lower(mu);
  const Matrix4c gn = gamma_lower(nu);
  return 0.5 * I * (gm * gn - gn * gm);
}

Matrix4c spin(int k) {
  Matrix4c s = Matrix4c::Zero();
  s.topLeftCorner<2, 2>() = pauli(k);
  s.bottomRightCorner<2, 2>() = pauli(k);
  return 0.5 * s;
}

}  // namespace dosc
