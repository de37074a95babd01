#include "dirac_osc/polygauss.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dirac_osc/covariance.hpp"
#include "dirac_osc/error.hpp"
#include "dirac_osc/specfun.hpp"

namespace dosc {

namespace {
const cplx I(0.0, 1.0);
}

// ---------------------------------------------------------------- Poly3

Poly3::Poly3() : c_(static_cast<std::size_t>(kSide * kSide * kSide)) {}

void Poly3::raise_degree_bound(int d) {
  if (d > kMaxDegree)
    throw DegreeOverflow("Poly3: degree " + std::to_string(d) + " exceeds cap " +
                         std::to_string(kMaxDegree));
  degree_ = std::max(degree_, d);
}

int Poly3::degree() const {
  int deg = -1;
  for_each([&](int i, int j, int k, cplx c) {
    if (c != cplx(0.0)) deg = std::max(deg, i + j + k);
  });
  return deg;
}

double Poly3::max_abs() const {
  double m = 0.0;
  for_each([&](int, int, int, cplx c) { m = std::max(m, std::abs(c)); });
  return m;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  raise_degree_bound(o.degree_);
  o.for_each([&](int i, int j, int k, cplx c) { coeff(i, j, k) += c; });
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  raise_degree_bound(o.degree_);
  o.for_each([&](int i, int j, int k, cplx c) { coeff(i, j, k) -= c; });
  return *this;
}

Poly3& Poly3::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Poly3 Poly3::derivative(int axis) const {
  Poly3 out;
  out.raise_degree_bound(std::max(degree_ - 1, 0));
  for_each([&](int i, int j, int k, cplx c) {
    const int e[3] = {i, j, k};
    if (e[axis] == 0) return;
    int d[3] = {i, j, k};
    d[axis] -= 1;
    out.coeff(d[0], d[1], d[2]) += static_cast<double>(e[axis]) * c;
  });
  return out;
}

Poly3 Poly3::times_coordinate(int axis) const {
  Poly3 out;
  out.raise_degree_bound(degree_ + 1);
  for_each([&](int i, int j, int k, cplx c) {
    int d[3] = {i, j, k};
    d[axis] += 1;
    out.coeff(d[0], d[1], d[2]) += c;
  });
  return out;
}

// ---------------------------------------------------------------- spinors

int PolyGaussSpinor::degree() const {
  int d = -1;
  for (const auto& c : comp) d = std::max(d, c.degree());
  return d;
}

double PolyGaussSpinor::max_abs() const {
  double m = 0.0;
  for (const auto& c : comp) m = std::max(m, c.max_abs());
  return m;
}

PolyGaussSpinor& PolyGaussSpinor::operator+=(const PolyGaussSpinor& o) {
  if (width != o.width) throw DomainError("PolyGaussSpinor: width mismatch");
  for (int c = 0; c < 4; ++c) comp[c] += o.comp[c];
  return *this;
}

PolyGaussSpinor& PolyGaussSpinor::operator-=(const PolyGaussSpinor& o) {
  if (width != o.width) throw DomainError("PolyGaussSpinor: width mismatch");
  for (int c = 0; c < 4; ++c) comp[c] -= o.comp[c];
  return *this;
}

PolyGaussSpinor& PolyGaussSpinor::operator*=(cplx s) {
  for (auto& c : comp) c *= s;
  return *this;
}

PolyGaussSpinor operator+(PolyGaussSpinor a, const PolyGaussSpinor& b) { return a += b; }
PolyGaussSpinor operator-(PolyGaussSpinor a, const PolyGaussSpinor& b) { return a -= b; }
PolyGaussSpinor operator*(cplx s, PolyGaussSpinor a) { return a *= s; }

PolyGaussSpinor operator*(const Matrix4c& m, const PolyGaussSpinor& psi) {
  PolyGaussSpinor out = zero_spinor(psi.width);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (m(r, c) == cplx(0.0)) continue;
      Poly3 term = psi.comp[c];
      term *= m(r, c);
      out.comp[r] += term;
    }
  }
  return out;
}

PolyGaussSpinor zero_spinor(double width) {
  if (!(width > 0.0)) throw DomainError("PolyGaussSpinor: width must be positive");
  PolyGaussSpinor s;
  s.width = width;
  return s;
}

PolyGaussSpinor gaussian_spinor(double width, const Eigen::Vector4cd& spinor) {
  PolyGaussSpinor s = zero_spinor(width);
  for (int c = 0; c < 4; ++c) s.comp[c].coeff(0, 0, 0) = spinor[c];
  return s;
}

PolyGaussSpinor random_spinor(std::mt19937_64& rng, int degree, double width) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PolyGaussSpinor s = zero_spinor(width);
  for (auto& p : s.comp) {
    p.raise_degree_bound(degree);
    for (int i = 0; i <= degree; ++i)
      for (int j = 0; i + j <= degree; ++j)
        for (int k = 0; i + j + k <= degree; ++k) {
          const double re = u(rng);
          const double im = u(rng);
          p.coeff(i, j, k) = cplx(re, im);
        }
  }
  return s;
}

PolyGaussSpinor partial(const PolyGaussSpinor& psi, int axis) {
  // d(P g) = (dP - a x P) g
  PolyGaussSpinor out = zero_spinor(psi.width);
  for (int c = 0; c < 4; ++c) {
    Poly3 xp = psi.comp[c].times_coordinate(axis);
    xp *= -psi.width;
    out.comp[c] = psi.comp[c].derivative(axis);
    out.comp[c] += xp;
  }
  return out;
}

PolyGaussSpinor times_coordinate(const PolyGaussSpinor& psi, int axis) {
  PolyGaussSpinor out = zero_spinor(psi.width);
  for (int c = 0; c < 4; ++c) out.comp[c] = psi.comp[c].times_coordinate(axis);
  return out;
}

PolyGaussSpinor momentum(const PolyGaussSpinor& psi, int axis) {
  return -I * partial(psi, axis);
}

PolyGaussSpinor momentum_squared(const PolyGaussSpinor& psi) {
  PolyGaussSpinor out = zero_spinor(psi.width);
  for (int k = 0; k < 3; ++k) out -= partial(partial(psi, k), k);
  return out;
}

PolyGaussSpinor radius_squared(const PolyGaussSpinor& psi) {
  PolyGaussSpinor out = zero_spinor(psi.width);
  for (int k = 0; k < 3; ++k) out += times_coordinate(times_coordinate(psi, k), k);
  return out;
}

PolyGaussSpinor orbital(const PolyGaussSpinor& psi, int axis) {
  // L_k = eps_kab x_a p_b
  PolyGaussSpinor out = zero_spinor(psi.width);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const int e = levi_civita(axis, a, b);
      if (e == 0) continue;
      out += static_cast<double>(e) * times_coordinate(momentum(psi, b), a);
    }
  return out;
}

PolyGaussSpinor spin_orbit(const PolyGaussSpinor& psi) {
  PolyGaussSpinor out = zero_spinor(psi.width);
  for (int k = 0; k < 3; ++k) out += spin(k) * orbital(psi, k);
  return out;
}

double relative_distance(const PolyGaussSpinor& a, const PolyGaussSpinor& b) {
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return (a - b).max_abs() / scale;
}

namespace {

// Integral of x^p exp(-c x^2) over the real line.
double gaussian_moment(int p, double c) {
  if (p % 2 != 0) return 0.0;
  return double_factorial(p - 1) / std::pow(2.0 * c, p / 2) *
         std::sqrt(std::numbers::pi / c);
}

}  // namespace

cplx inner(const PolyGaussSpinor& psi1, const PolyGaussSpinor& psi2) {
  const double c = 0.5 * (psi1.width + psi2.width);
  const int max_deg = Poly3::kMaxDegree * 2;
  std::vector<double> moment(static_cast<std::size_t>(max_deg + 1));
  for (int p = 0; p <= max_deg; ++p) moment[p] = gaussian_moment(p, c);

  cplx sum = 0.0;
  for (int comp = 0; comp < 4; ++comp) {
    psi1.comp[comp].for_each([&](int i1, int j1, int k1, cplx c1) {
      if (c1 == cplx(0.0)) return;
      psi2.comp[comp].for_each([&](int i2, int j2, int k2, cplx c2) {
        if (c2 == cplx(0.0)) return;
        sum += std::conj(c1) * c2 * moment[i1 + i2] * moment[j1 + j2] *
               moment[k1 + k2];
      });
    });
  }
  return sum;
}

PolyGaussSpinor apply_H(const OscillatorParams& p, const PolyGaussSpinor& psi,
                        Coupling coupling) {
  const Matrix4c b = beta();
  const Matrix4c coupling_matrix =
      coupling == Coupling::oscillator ? b : identity4();
  PolyGaussSpinor out = p.m * (b * psi);
  for (int k = 0; k < 3; ++k) {
    const PolyGaussSpinor shifted =
        momentum(psi, k) -
        (I * p.m_omega()) * (coupling_matrix * times_coordinate(psi, k));
    out += alpha(k) * shifted;
  }
  return out;
}

PolyGaussSpinor rhs_H2(const OscillatorParams& p, const PolyGaussSpinor& psi,
                       SquareForm form) {
  const double mw = p.m_omega();
  PolyGaussSpinor out = momentum_squared(psi);
  out += (mw * mw) * radius_squared(psi);
  const PolyGaussSpinor so = spin_orbit(psi);
  PolyGaussSpinor bracket = form == SquareForm::printed
                                ? 4.0 * so - 3.0 * psi
                                : -4.0 * so - 3.0 * psi;
  out += mw * (beta() * bracket);
  if (form == SquareForm::derived) out += (p.m * p.m) * psi;
  return out;
}

namespace {

// [alpha x p]_k psi
PolyGaussSpinor alpha_cross_p(const PolyGaussSpinor& psi, int axis) {
  PolyGaussSpinor out = zero_spinor(psi.width);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const int e = levi_civita(axis, a, b);
      if (e == 0) continue;
      out += static_cast<double>(e) * (alpha(a) * momentum(psi, b));
    }
  return out;
}

// [(r x alpha) beta]_k psi
PolyGaussSpinor r_cross_alpha_beta(const PolyGaussSpinor& psi, int axis) {
  PolyGaussSpinor out = zero_spinor(psi.width);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const int e = levi_civita(axis, a, b);
      if (e == 0) continue;
      out += static_cast<double>(e) *
             times_coordinate((alpha(b) * beta()) * psi, a);
    }
  return out;
}

}  // namespace

CommutatorSides commutator_L_H(const OscillatorParams& p,
                               const PolyGaussSpinor& psi, int axis) {
  CommutatorSides s;
  s.lhs = orbital(apply_H(p, psi), axis) - apply_H(p, orbital(psi, axis));
  s.rhs = I * alpha_cross_p(psi, axis) -
          p.m_omega() * r_cross_alpha_beta(psi, axis);
  return s;
}

CommutatorSides commutator_S_H(const OscillatorParams& p,
                               const PolyGaussSpinor& psi, int axis) {
  CommutatorSides s;
  s.lhs = spin(axis) * apply_H(p, psi) - apply_H(p, spin(axis) * psi);
  s.rhs = -I * alpha_cross_p(psi, axis) +
          p.m_omega() * r_cross_alpha_beta(psi, axis);
  return s;
}

std::pair<cplx, cplx> hermiticity_witness(const OscillatorParams& p,
                                          const PolyGaussSpinor& psi1,
                                          const PolyGaussSpinor& psi2,
                                          Coupling coupling) {
  return {inner(psi1, apply_H(p, psi2, coupling)),
          inner(apply_H(p, psi1, coupling), psi2)};
}

Matrix4c sigma_interaction_matrix(double lambda, double kappa_e_over_m,
                                  const Eigen::Vector3d& r) {
  const FourVector x(0.0, r[0], r[1], r[2]);
  const FieldTensor f = field_tensor(lambda, x);
  Matrix4c sum = Matrix4c::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (f(mu, nu) != 0.0) sum += f(mu, nu) * sigma_lower(mu, nu);
  return (kappa_e_over_m / 4.0) * sum;
}

Matrix4c sigma_interaction_closed_form(double lambda, double kappa_e_over_m,
                                       const Eigen::Vector3d& r) {
  Matrix4c a_dot_r = Matrix4c::Zero();
  for (int k = 0; k < 3; ++k) a_dot_r += r[k] * alpha(k);
  return (kappa_e_over_m / 2.0) * lambda * I * a_dot_r;
}

}  // namespace dosc
