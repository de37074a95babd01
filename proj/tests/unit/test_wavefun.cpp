#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dirac_osc/error.hpp"
#include "dirac_osc/radial_oracle.hpp"
#include "dirac_osc/spectrum.hpp"
#include "dirac_osc/wavefun.hpp"
#include "oracles.hpp"

using namespace dosc;
using cd = std::complex<double>;

namespace {

const cd I(0.0, 1.0);

StateLabel st(int n, int j2, int mj2, Sign eps, Sign branch = Sign::plus) {
  return make_state(n, HalfInt::from_twice(j2), HalfInt::from_twice(mj2), eps, branch);
}

// Dirac matrices written out here rather than taken from the library.
Eigen::Matrix2cd sigma(int k) {
  Eigen::Matrix2cd s;
  if (k == 0) s << 0, 1, 1, 0;
  if (k == 1) s << 0, -I, I, 0;
  if (k == 2) s << 1, 0, 0, -1;
  return s;
}

Eigen::Matrix4cd alpha_k(int k) {
  Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
  a.block<2, 2>(0, 2) = sigma(k);
  a.block<2, 2>(2, 0) = sigma(k);
  return a;
}

Eigen::Matrix4cd beta_m() {
  Eigen::Matrix4cd b = Eigen::Matrix4cd::Identity();
  b.block<2, 2>(2, 2) *= -1.0;
  return b;
}

using SpinorField = std::function<Eigen::Vector4cd(const Eigen::Vector3d&)>;

SpinorField cartesian(const OscillatorParams& p, const StateLabel& s, const RadialPair& pair,
                      double lower_phase = 1.0) {
  return [=](const Eigen::Vector3d& x) {
    const double r = x.norm();
    const double th = std::acos(std::clamp(x.z() / r, -1.0, 1.0));
    const double ph = std::atan2(x.y(), x.x());
    Eigen::Vector4cd v = assemble_spinor(p, s, pair, r, th, ph).psi;
    v.tail<2>() *= lower_phase;
    return v;
  };
}

// |H psi - E psi| / |E psi| at x, derivatives by fourth-order central
// differences.
double eigen_residual(const OscillatorParams& p, const SpinorField& psi, double E,
                      const Eigen::Vector3d& x) {
  const double h = 1e-3;
  Eigen::Vector4cd hpsi = p.m * beta_m() * psi(x);
  for (int k = 0; k < 3; ++k) {
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e[k] = h;
    const Eigen::Vector4cd d = (-psi(x + 2 * e) + 8.0 * psi(x + e) - 8.0 * psi(x - e) +
                                psi(x - 2 * e)) / (12.0 * h);
    hpsi += alpha_k(k) * (-I * d) - I * p.m_omega() * x[k] * alpha_k(k) * beta_m() * psi(x);
  }
  const Eigen::Vector4cd target = E * psi(x);
  return (hpsi - target).norm() / std::max(target.norm(), 1e-3);
}

}  // namespace

TEST_SUITE("wavefun") {

TEST_CASE("radial hand values") {
  const auto p = make_params(1.0, 1.0);
  const auto g = st(0, 1, 1, Sign::minus);
  CHECK(radial_F(p, g, 1.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(radial_F(p, g, 0.0) == 0.0);
  const auto n1 = st(1, 1, 1, Sign::minus);
  CHECK(std::abs(radial_F(p, n1, std::sqrt(1.5))) < 1e-15);
  const auto e1 = st(0, 1, 1, Sign::plus);
  CHECK(radial_G(p, e1, 1.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(radial_G(p, e1, 0.0) == 0.0);
  CHECK_THROWS_AS(radial_F(p, g, -0.1), DomainError);
  // G vanishes for the positive-energy eps=-1, n=0 states
  CHECK(radial_G(p, g, 1.3) == 0.0);
}

TEST_CASE("radial derivatives against central differences") {
  const auto p = make_params(1.3, 0.8);
  for (const auto& s : enumerate_multiplets(6, Sign::plus))
    for (double r : {0.3, 1.1, 2.4}) {
      const double h = 1e-6;
      const double dF = (radial_F(p, s, r + h) - radial_F(p, s, r - h)) / (2 * h);
      const double dG = (radial_G(p, s, r + h) - radial_G(p, s, r - h)) / (2 * h);
      CHECK(radial_F_dr(p, s, r) == doctest::Approx(dF).epsilon(1e-6).scale(1.0));
      CHECK(radial_G_dr(p, s, r) == doctest::Approx(dG).epsilon(1e-6).scale(1.0));
    }
}

TEST_CASE("normalization of the pure-F ground state is analytic") {
  const auto p = make_params(1.0, 1.0);
  const auto pair = eigenstate(p, st(0, 1, 1, Sign::minus));
  CHECK(pair.g_weight == 0.0);
  CHECK(pair.norm_constant == doctest::Approx(std::sqrt(4.0 / std::sqrt(std::numbers::pi))));
  CHECK(norm_integral(pair) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normalization survives quadrature refinement and a Simpson oracle") {
  for (const auto& [m, w] : {std::pair{1.0, 1.0}, {1.0, 0.5}, {2.0, 1.0}})
    for (Sign b : {Sign::plus, Sign::minus})
      for (const auto& s : enumerate_multiplets(6, b)) {
        const auto pair = eigenstate(make_params(m, w), s);
        CHECK(norm_integral(pair) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(norm_integral(pair, 320) == doctest::Approx(1.0).epsilon(1e-10));
        const double cut = 1.5 * radial_cutoff(pair.params, s);
        const double simp = oracle::simpson(
            [&](double r) { return pair.F(r) * pair.F(r) + pair.G(r) * pair.G(r); }, 0.0, cut,
            3000);
        INFO(s.str(), " m=", m, " w=", w, " simpson-1=", simp - 1.0);
        CHECK(std::abs(simp - 1.0) < 1e-9);
      }
}

TEST_CASE("distinct levels of a channel are orthogonal") {
  const auto p = make_params(1.0, 1.0);
  for (int j2 = 1; j2 <= 7; j2 += 2)
    for (Sign eps : {Sign::minus, Sign::plus}) {
      std::vector<RadialPair> levels;
      for (Sign b : {Sign::plus, Sign::minus})
        for (int n = 0; n <= 3; ++n) levels.push_back(eigenstate(p, st(n, j2, j2, eps, b)));
      for (std::size_t a = 0; a < levels.size(); ++a)
        for (std::size_t c = a + 1; c < levels.size(); ++c)
          CHECK(std::abs(radial_overlap(levels[a], levels[c])) < 1e-8);
    }
}

TEST_CASE("node counts follow the component labels") {
  const auto p = make_params(1.0, 1.0);
  for (Sign b : {Sign::plus, Sign::minus})
    for (const auto& s : enumerate_multiplets(6, b)) {
      const auto pair = eigenstate(p, s);
      const double cut = radial_cutoff(p, s);
      CHECK(count_nodes([&](double r) { return pair.F(r); }, cut) ==
            std::max(s.upper_nodes(), 0));
      CHECK(count_nodes([&](double r) { return pair.G(r); }, cut) ==
            std::max(s.lower_nodes(), 0));
      // the F and G node counts differ by (1 - eps)/2
      if (s.upper_nodes() >= 0 && s.lower_nodes() >= 0)
        CHECK(s.upper_nodes() - s.lower_nodes() == (1 - to_int(s.epsilon)) / 2);
    }
}

TEST_CASE("origin power law r^(l+1) and r^(l'+1)") {
  const auto p = make_params(1.0, 1.0);
  for (const auto& s : enumerate_multiplets(6, Sign::plus)) {
    const auto pair = eigenstate(p, s);
    const double eF = std::log(pair.F(2e-3) / pair.F(1e-3)) / std::log(2.0);
    CHECK(eF == doctest::Approx(s.l + 1.0).epsilon(1e-4));
    if (s.lower_nodes() >= 0) {
      const double eG = std::log(pair.G(2e-3) / pair.G(1e-3)) / std::log(2.0);
      CHECK(eG == doctest::Approx(s.l_prime() + 1.0).epsilon(1e-4));
    }
  }
}

TEST_CASE("closed forms satisfy the selected first-order system") {
  for (const auto& [m, w] : {std::pair{1.0, 1.0}, {2.0, 0.5}})
    for (Sign b : {Sign::plus, Sign::minus})
      for (const auto& s : enumerate_multiplets(6, b)) {
        const auto p = make_params(m, w);
        const auto sys = first_order_system(p, s);
        CHECK(sys.sign_a == -1);
        CHECK(sys.sign_b == 1);
        CHECK(closed_form_residual(sys, p, s) < 1e-10);
        const auto pair = eigenstate(p, s);
        const double E = energy(p, s).E;
        double worst = 0.0, scale = 0.0;
        for (int i = 1; i <= 60; ++i) {
          const double r = radial_cutoff(p, s) * i / 61.0;
          // (E - m) F = (-d/dr + kappa/r + m w r) G
          // (E + m) G = (+d/dr + kappa/r + m w r) F
          const double c = s.kappa() / r + m * w * r;
          worst = std::max(worst, std::abs((E - m) * pair.F(r) - (-pair.dG(r) + c * pair.G(r))));
          worst = std::max(worst, std::abs((E + m) * pair.G(r) - (pair.dF(r) + c * pair.F(r))));
          scale = std::max({scale, std::abs(pair.F(r)), std::abs(pair.G(r))});
        }
        CHECK(worst <= 1e-9 * scale * (std::abs(E) + m));
      }
}

TEST_CASE("printed derivative signs are rejected by the closed forms") {
  const auto p = make_params(1.0, 1.0);
  const auto s = st(1, 3, 3, Sign::plus);
  CHECK(closed_form_residual(printed_first_order_system(p, s), p, s) > 1e-2);
}

TEST_CASE("spinor harmonics") {
  const auto y = spinor_harmonic(kHalf, kHalf, 0, 0.7, 1.9);
  CHECK(std::abs(y[0] - 1.0 / std::sqrt(4 * std::numbers::pi)) < 1e-15);
  CHECK(std::abs(y[1]) < 1e-15);
  CHECK_THROWS_AS(spinor_harmonic(kHalf, kHalf, 2, 0.1, 0.1), DomainError);
  CHECK_THROWS_AS(spinor_harmonic(kHalf, HalfInt::from_twice(3), 0, 0.1, 0.1), DomainError);

  // orthonormal on the sphere for j <= 7/2; product rule exact here
  const auto rule = gauss_legendre(12, -1.0, 1.0);
  const int nphi = 16;
  auto overlap = [&](int j2, int m2, int l1, int l2) {
    cd sum = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i)
      for (int k = 0; k < nphi; ++k) {
        const double th = std::acos(rule.nodes[i]);
        const double ph = 2 * std::numbers::pi * k / nphi;
        const auto a = spinor_harmonic(HalfInt::from_twice(j2), HalfInt::from_twice(m2), l1, th, ph);
        const auto b = spinor_harmonic(HalfInt::from_twice(j2), HalfInt::from_twice(m2), l2, th, ph);
        sum += rule.weights[i] * (2 * std::numbers::pi / nphi) * a.dot(b);
      }
    return sum;
  };
  for (int j2 = 1; j2 <= 7; j2 += 2)
    for (int m2 = -j2; m2 <= j2; m2 += 2) {
      const int lo = (j2 - 1) / 2, hi = (j2 + 1) / 2;
      CHECK(std::abs(overlap(j2, m2, lo, lo) - 1.0) < 1e-12);
      CHECK(std::abs(overlap(j2, m2, hi, hi) - 1.0) < 1e-12);
      CHECK(std::abs(overlap(j2, m2, lo, hi)) < 1e-12);
    }
}

TEST_CASE("sigma.r_hat maps one spinor harmonic branch onto the other with a plus sign") {
  oracle::Gen gen(13);
  for (int j2 = 1; j2 <= 7; j2 += 2)
    for (int m2 = -j2; m2 <= j2; m2 += 2)
      for (int trial = 0; trial < 4; ++trial) {
        const double th = gen.uniform(0.1, 3.0), ph = gen.uniform(0.0, 6.2);
        const Eigen::Vector3d n(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                                std::cos(th));
        const Eigen::Matrix2cd sr = n.x() * sigma(0) + n.y() * sigma(1) + n.z() * sigma(2);
        const auto j = HalfInt::from_twice(j2), m = HalfInt::from_twice(m2);
        const auto lo = spinor_harmonic(j, m, (j2 - 1) / 2, th, ph);
        const auto hi = spinor_harmonic(j, m, (j2 + 1) / 2, th, ph);
        CHECK((sr * lo - hi).norm() < 1e-12);
      }
}

TEST_CASE("assembled spinors solve the three-dimensional eigen equation") {
  oracle::Gen gen(17);
  for (const auto& [m, w] : {std::pair{1.0, 1.0}, {2.0, 0.5}})
    for (Sign b : {Sign::plus, Sign::minus})
      for (const auto& s0 : enumerate_multiplets(3, b)) {
        const auto p = make_params(m, w);
        const int m2 = s0.j.twice() - 2 * gen.integer(0, s0.j.twice());
        const auto s = make_state(s0.n, s0.j, HalfInt::from_twice(m2), s0.epsilon, b);
        const auto pair = eigenstate(p, s);
        const double E = energy(p, s).E;
        const auto psi = cartesian(p, s, pair);
        const auto flipped = cartesian(p, s, pair, -1.0);
        double worst = 0.0, worst_flipped = 0.0;
        for (int trial = 0; trial < 6; ++trial) {
          Eigen::Vector3d x = gen.point(1.6 / std::sqrt(m * w));
          if (x.norm() < 0.2) x *= 0.5 / x.norm();
          worst = std::max(worst, eigen_residual(p, psi, E, x));
          worst_flipped = std::max(worst_flipped, eigen_residual(p, flipped, E, x));
        }
        CHECK(worst < 1e-6);
        // the opposite lower-pair phase is not an eigenfunction unless G = 0
        if (s.lower_nodes() >= 0) CHECK(worst_flipped > 1e-2);
      }
}

TEST_CASE("parity: gamma^0 psi(-x) = (-1)^l psi(x)") {
  oracle::Gen gen(19);
  const auto p = make_params(1.0, 1.0);
  for (const auto& s : enumerate_states(4, Sign::plus)) {
    const auto pair = eigenstate(p, s);
    const double eta = to_int(parity_of(s));
    for (int trial = 0; trial < 5; ++trial) {
      const double r = gen.uniform(0.2, 2.5), th = gen.uniform(0.05, 3.0),
                   ph = gen.uniform(0.0, 6.0);
      const auto a = assemble_spinor(p, s, pair, r, th, ph).psi;
      const auto mirror =
          assemble_spinor(p, s, pair, r, std::numbers::pi - th, ph + std::numbers::pi).psi;
      CHECK((beta_m() * mirror - eta * a).norm() <= 1e-12 * std::max(1.0, a.norm()));
    }
  }
}

TEST_CASE("assembled spinors are normalized in three dimensions") {
  const auto p = make_params(1.0, 1.0);
  const auto th_rule = gauss_legendre(14, -1.0, 1.0);
  const int nphi = 16;
  for (Sign b : {Sign::plus, Sign::minus})
    for (const auto& s : enumerate_states(2, b)) {
      const auto pair = eigenstate(p, s);
      const auto r_rule = gauss_legendre(80, 0.0, radial_cutoff(p, s));
      double total = 0.0;
      for (Eigen::Index a = 0; a < r_rule.nodes.size(); ++a)
        for (Eigen::Index i = 0; i < th_rule.nodes.size(); ++i)
          for (int k = 0; k < nphi; ++k) {
            const double r = r_rule.nodes[a];
            const auto v = assemble_spinor(p, s, pair, r, std::acos(th_rule.nodes[i]),
                                           2 * std::numbers::pi * k / nphi).psi;
            total += r_rule.weights[a] * th_rule.weights[i] * (2 * std::numbers::pi / nphi) *
                     r * r * v.squaredNorm();
          }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
    }
  CHECK_THROWS_AS(assemble_spinor(p, st(0, 1, 1, Sign::minus), eigenstate(p, st(0, 1, 1, Sign::minus)),
                                  0.0, 0.1, 0.1),
                  DomainError);
}

TEST_CASE("published normalization constant is finite and compared, not trusted") {
  const auto p = make_params(1.0, 1.0);
  for (const auto& s : enumerate_multiplets(4, Sign::plus)) {
    const double lit = published_norm_constant(p, s);
    CHECK(std::isfinite(lit));
    CHECK(lit > 0.0);
  }
}

}
