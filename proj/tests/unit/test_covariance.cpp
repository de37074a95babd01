#include <doctest.h>

#include <cmath>

#include "dirac_osc/covariance.hpp"
#include "dirac_osc/error.hpp"
#include "oracles.hpp"

using namespace dosc;

namespace {

FourVector random_event(oracle::Gen& gen) {
  return FourVector(gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-2, 2),
                    gen.uniform(-2, 2));
}

// g = diag(1, -1, -1, -1)
Eigen::Matrix4d metric() { return Eigen::Vector4d(1, -1, -1, -1).asDiagonal(); }

}  // namespace

TEST_SUITE("covariance") {

TEST_CASE("boosts preserve the metric and compose along one axis") {
  oracle::Gen gen(1);
  for (int trial = 0; trial < 50; ++trial) {
    const double y1 = gen.uniform(-1.5, 1.5), y2 = gen.uniform(-1.5, 1.5);
    const Eigen::Vector3d n = gen.point(1.0);
    const LorentzMatrix b1 = boost(y1, n), b2 = boost(y2, n);
    CHECK((b1.transpose() * metric() * b1 - metric()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((b1 * b2 - boost(y1 + y2, n)).cwiseAbs().maxCoeff() < 1e-11);
    CHECK((b1 * boost(-y1, n) - LorentzMatrix::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("field tensor matches antisymmetrized numerical gradients") {
  oracle::Gen gen(2);
  const double lambda = 0.8;
  const PotentialField cov = [&](const FourVector& x) { return potential_cov(lambda, x); };
  const PotentialField lab = [&](const FourVector& x) {
    return potential_lab(lambda, x[0], Eigen::Vector3d(x.tail<3>()));
  };
  for (int trial = 0; trial < 100; ++trial) {
    const FourVector x = random_event(gen);
    const FieldTensor f = field_tensor(lambda, x);
    CHECK((numerical_field_tensor(cov, x) - f).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((numerical_field_tensor(lab, x) - f).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((f + f.transpose()).cwiseAbs().maxCoeff() == 0.0);
    // uniformly charged sphere interior: E = -lambda r, B = 0
    CHECK((electric_field(f) + lambda * Eigen::Vector3d(x.tail<3>())).norm() < 1e-14);
    CHECK(magnetic_field(f).norm() == 0.0);
  }
}

TEST_CASE("potential and field tensor transform covariantly") {
  oracle::Gen gen(3);
  const double lambda = 1.3;
  for (int trial = 0; trial < 50; ++trial) {
    const LorentzMatrix b = boost(gen.uniform(-1.0, 1.0), gen.point(1.0));
    const FourVector x = random_event(gen);
    const FourVector u = lab_four_velocity<double>();
    const FourVector a_boosted = potential_cov(lambda, FourVector(b * x), FourVector(b * u));
    CHECK((a_boosted - b * potential_cov(lambda, x, u)).cwiseAbs().maxCoeff() < 1e-10);
    const FieldTensor f_boosted = field_tensor(lambda, FourVector(b * x), FourVector(b * u));
    CHECK((f_boosted - b * field_tensor(lambda, x, u) * b.transpose()).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("lower_index and minkowski_dot") {
  const FourVector a(2, 1, 0, 3);
  CHECK(minkowski_dot(a, a) == 4.0 - 1.0 - 9.0);
  CHECK(lower_index(a) == FourVector(2, -1, 0, -3));
}

TEST_CASE("gauge function as written leaves a (lambda/2) t^2 scalar residual") {
  oracle::Gen gen(4);
  for (int trial = 0; trial < 50; ++trial) {
    const double lambda = gen.uniform(0.2, 2.0);
    const FourVector x = random_event(gen);
    const FourVector diff = potential_cov(lambda, x) - gauge_transformed_lab_potential(lambda, x);
    CHECK(diff[0] == doctest::Approx(0.5 * lambda * x[0] * x[0]).epsilon(1e-8).scale(1.0));
    CHECK(diff.tail<3>().cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("coupling constant") {
  const auto p = make_params(2.0, 0.5);
  CHECK(lambda_for_oscillator(p, 1.0, 2.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(lambda_for_oscillator(p, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(lambda_for_oscillator(p, 1.0, 0.0), DomainError);
}

}
