#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dirac_osc/covariance.hpp"
#include "dirac_osc/dirac_matrices.hpp"
#include "dirac_osc/error.hpp"
#include "dirac_osc/polygauss.hpp"
#include "dirac_osc/specfun.hpp"
#include "oracles.hpp"

using namespace dosc;

namespace {

const cplx I(0.0, 1.0);

std::vector<std::pair<OscillatorParams, PolyGaussSpinor>> ensemble(std::uint64_t seed,
                                                                   int count) {
  std::mt19937_64 rng(seed);
  oracle::Gen gen(seed + 1);
  std::vector<std::pair<OscillatorParams, PolyGaussSpinor>> out;
  for (int i = 0; i < count; ++i) {
    const auto p = make_params(gen.uniform(0.3, 2.5), gen.uniform(0.3, 2.5));
    out.emplace_back(p, random_spinor(rng, gen.integer(0, 4), gen.uniform(0.4, 2.0)));
  }
  return out;
}

// psi evaluated at a point, straight from the coefficient arrays
Eigen::Vector4cd evaluate(const PolyGaussSpinor& psi, const Eigen::Vector3d& x) {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  for (int c = 0; c < 4; ++c)
    psi.comp[std::size_t(c)].for_each([&](int i, int j, int k, cplx a) {
      v[c] += a * std::pow(x.x(), i) * std::pow(x.y(), j) * std::pow(x.z(), k);
    });
  return v * std::exp(-0.5 * psi.width * x.squaredNorm());
}

}  // namespace

TEST_SUITE("dirac-matrices") {

TEST_CASE("Clifford relations and sigma tensor antisymmetry") {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix4c ac = gamma_upper(mu) * gamma_upper(nu) + gamma_upper(nu) * gamma_upper(mu);
      const double g = mu == nu ? 2.0 * metric_diag(mu) : 0.0;
      CHECK((ac - g * identity4()).norm() < 1e-15);
      CHECK((sigma_lower(mu, nu) + sigma_lower(nu, mu)).norm() < 1e-15);
    }
  CHECK(levi_civita(0, 1, 2) == 1);
  CHECK(levi_civita(1, 0, 2) == -1);
  CHECK(levi_civita(0, 0, 2) == 0);
}

}

TEST_SUITE("polygauss") {

TEST_CASE("derivative of the Gaussian factor is carried exactly") {
  oracle::Gen gen(2);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = random_spinor(rng, 3, gen.uniform(0.5, 2.0));
    const Eigen::Vector3d x = gen.point(1.5);
    for (int k = 0; k < 3; ++k) {
      Eigen::Vector3d e = Eigen::Vector3d::Zero();
      e[k] = 1e-5;
      const Eigen::Vector4cd fd = (evaluate(psi, x + e) - evaluate(psi, x - e)) / 2e-5;
      CHECK((evaluate(partial(psi, k), x) - fd).norm() < 1e-7 * std::max(1.0, fd.norm()));
    }
  }
}

TEST_CASE("Gaussian inner product against direct quadrature") {
  std::mt19937_64 rng(4);
  const auto a = random_spinor(rng, 2, 1.0);
  const auto b = random_spinor(rng, 2, 1.0);
  const auto rule = gauss_legendre(64, -8.0, 8.0);
  cplx sum = 0.0;
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i)
    for (Eigen::Index j = 0; j < rule.nodes.size(); ++j)
      for (Eigen::Index k = 0; k < rule.nodes.size(); ++k) {
        const Eigen::Vector3d x(rule.nodes[i], rule.nodes[j], rule.nodes[k]);
        sum += rule.weights[i] * rule.weights[j] * rule.weights[k] *
               evaluate(a, x).dot(evaluate(b, x));
      }
  CHECK(std::abs(inner(a, b) - sum) < 1e-10 * std::max(1.0, std::abs(sum)));
}

TEST_CASE("zero spinor is a fixed point and widths must match") {
  const auto p = make_params(1.0, 1.0);
  const auto z = zero_spinor(1.0);
  CHECK(apply_H(p, z).max_abs() == 0.0);
  const auto c = commutator_L_H(p, z, 2);
  CHECK(c.lhs.max_abs() == 0.0);
  CHECK(c.rhs.max_abs() == 0.0);
  std::mt19937_64 rng(1);
  auto a = random_spinor(rng, 1, 1.0);
  CHECK_THROWS_AS(a += random_spinor(rng, 1, 2.0), DomainError);
  CHECK_THROWS_AS(zero_spinor(0.0), DomainError);
  auto big = random_spinor(rng, 11, 1.0);  // H raises the degree by one
  CHECK_THROWS_AS(apply_H(p, apply_H(p, big)), DegreeOverflow);
}

TEST_CASE("squared Hamiltonian: derived form holds, printed form and mutation do not") {
  double derived = 0.0, printed_min = 1e300, mutant_min = 1e300;
  for (const auto& [p, psi] : ensemble(42, 50)) {
    const auto hh = apply_H(p, apply_H(p, psi));
    derived = std::max(derived, relative_distance(hh, rhs_H2(p, psi, SquareForm::derived)));
    printed_min = std::min(printed_min, relative_distance(hh, rhs_H2(p, psi, SquareForm::printed)));
    const auto hm = apply_H(p, apply_H(p, psi, Coupling::beta_dropped), Coupling::beta_dropped);
    mutant_min = std::min(mutant_min, relative_distance(hm, rhs_H2(p, psi, SquareForm::derived)));
  }
  CHECK(derived < 1e-12);
  CHECK(printed_min > 1e-3);
  CHECK(mutant_min > 1e-3);
}

TEST_CASE("squared Hamiltonian on a constant spinor by hand") {
  // H^2 (u e^{-r^2/2}) for m = w = 1: p^2 + r^2 gives 3 on the Gaussian and
  // S.L vanishes, so H^2 psi = (3 - 3 beta + 1) psi
  const auto p = make_params(1.0, 1.0);
  Eigen::Vector4cd u(1.0, 0.0, 0.0, 0.0);
  const auto psi = gaussian_spinor(1.0, u);
  const auto hh = apply_H(p, apply_H(p, psi));
  CHECK(relative_distance(hh, cplx(1.0) * psi) < 1e-14);
  Eigen::Vector4cd v(0.0, 0.0, 1.0, 0.0);
  const auto phi = gaussian_spinor(1.0, v);
  CHECK(relative_distance(apply_H(p, apply_H(p, phi)), cplx(7.0) * phi) < 1e-14);
}

TEST_CASE("angular momentum commutators and conservation") {
  for (const auto& [p, psi] : ensemble(9, 30))
    for (int k = 0; k < 3; ++k) {
      const auto l = commutator_L_H(p, psi, k);
      const auto s = commutator_S_H(p, psi, k);
      CHECK(relative_distance(l.lhs, l.rhs) < 1e-12);
      CHECK(relative_distance(s.lhs, s.rhs) < 1e-12);
      CHECK(relative_distance(l.lhs + s.lhs, zero_spinor(psi.width)) < 1e-12);
    }
}

TEST_CASE("free-particle limit of the orbital commutator") {
  std::mt19937_64 rng(5);
  const OscillatorParams free{1.0, 0.0};
  const auto psi = random_spinor(rng, 3, 1.0);
  const auto c = commutator_L_H(free, psi, 2);
  // [L_z, alpha.p] = i (alpha x p)_z = i (alpha_x p_y - alpha_y p_x)
  const auto want = I * (alpha(0) * momentum(psi, 1) - alpha(1) * momentum(psi, 0));
  CHECK(relative_distance(c.lhs, want) < 1e-12);
}

TEST_CASE("Hamiltonian is Hermitian; the beta-dropped coupling is not") {
  std::mt19937_64 rng(6);
  const auto p = make_params(1.0, 1.0);
  double herm = 0.0, mutant = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_spinor(rng, 2, 1.0);
    const auto b = random_spinor(rng, 3, 1.0);
    const auto [x, y] = hermiticity_witness(p, a, b);
    herm = std::max(herm, std::abs(x - y) / std::max(1.0, std::abs(x)));
    const auto [xm, ym] = hermiticity_witness(p, a, b, Coupling::beta_dropped);
    mutant = std::max(mutant, std::abs(xm - ym) / std::max(1.0, std::abs(xm)));
  }
  CHECK(herm < 1e-12);
  CHECK(mutant > 1e-3);
}

TEST_CASE("ground state is an exact eigenvector") {
  const auto p = make_params(1.5, 0.8);
  const auto psi = gaussian_spinor(p.m_omega(), Eigen::Vector4cd(1.0, 0.0, 0.0, 0.0));
  CHECK(relative_distance(apply_H(p, psi), cplx(p.m) * psi) < 1e-14);
}

TEST_CASE("sigma-field contraction: overall sign of the closed form") {
  oracle::Gen gen(8);
  for (int trial = 0; trial < 100; ++trial) {
    const double lambda = gen.uniform(-2.0, 2.0), ke = gen.uniform(0.1, 3.0);
    const Eigen::Vector3d r = gen.point(2.0);
    const Matrix4c lhs = sigma_interaction_matrix(lambda, ke, r);
    const Matrix4c rhs = sigma_interaction_closed_form(lambda, ke, r);
    CHECK((lhs + rhs).cwiseAbs().maxCoeff() < 1e-12);
    if (r.norm() * std::abs(lambda) * ke > 1e-2)
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() > 1e-3);
  }
}

TEST_CASE("moving the moment term into H reproduces the oscillator coupling") {
  // -beta (kappa e/4m) sigma F with lambda = 2 m^2 w/(e kappa) equals
  // -i m w (alpha.r) beta
  oracle::Gen gen(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = make_params(gen.uniform(0.5, 2.0), gen.uniform(0.5, 2.0));
    const double e = gen.uniform(0.5, 2.0), kappa = gen.uniform(0.5, 2.0) * gen.sign();
    const double lambda = lambda_for_oscillator(p, e, kappa);
    const Eigen::Vector3d r = gen.point(1.5);
    const Matrix4c h_int = -beta() * sigma_interaction_matrix(lambda, kappa * e / p.m, r);
    Matrix4c want = Matrix4c::Zero();
    for (int k = 0; k < 3; ++k) want += -I * p.m_omega() * r[k] * alpha(k) * beta();
    CHECK((h_int - want).cwiseAbs().maxCoeff() < 1e-12);
  }
}

}
