#include "dirac_osc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "dirac_osc/covariance.hpp"
#include "dirac_osc/dirac_matrices.hpp"
#include "dirac_osc/error.hpp"
#include "dirac_osc/polygauss.hpp"
#include "dirac_osc/radial_oracle.hpp"
#include "dirac_osc/specfun.hpp"
#include "dirac_osc/spectrum.hpp"
#include "dirac_osc/wavefun.hpp"

namespace dosc {

bool CheckResult::within_tolerance() const {
  return comparator == Comparator::at_most ? max_residual <= tolerance
                                           : max_residual > tolerance;
}

bool CheckResult::passed() const {
  return kind == CheckKind::discrepancy || within_tolerance();
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

std::vector<std::string> VerifyReport::failing() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed()) out.push_back(c.name);
  return out;
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = suite;
  j["seed"] = options.seed;
  j["m"] = options.params.m;
  j["omega"] = options.params.omega;
  j["n_max"] = options.n_max;
  j["mutation"] = options.inject_mutation;
  j["passed"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["kind"] = c.kind == CheckKind::identity ? "identity" : "discrepancy";
    e["comparator"] = c.comparator == Comparator::at_most ? "<=" : ">";
    e["max_residual"] = c.max_residual;
    e["tolerance"] = c.tolerance;
    e["within_tolerance"] = c.within_tolerance();
    e["passed"] = c.passed();
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"operators", "covariance", "ode", "norms",
                                              "all"};
  return names;
}

bool is_verify_suite(const std::string& name) {
  const auto& s = verify_suites();
  return std::find(s.begin(), s.end(), name) != s.end();
}

namespace {

const std::complex<double> I(0.0, 1.0);

CheckResult identity(std::string name, double residual, double tol, std::string detail = {}) {
  return {std::move(name), CheckKind::identity, Comparator::at_most, residual, tol,
          std::move(detail)};
}

CheckResult detected(std::string name, double residual, double threshold,
                     std::string detail = {}) {
  return {std::move(name), CheckKind::identity, Comparator::above, residual, threshold,
          std::move(detail)};
}

CheckResult discrepancy(std::string name, double residual, double tol, std::string detail) {
  return {std::move(name), CheckKind::discrepancy, Comparator::at_most, residual, tol,
          std::move(detail)};
}

double max_entry(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

struct EnsembleMember {
  OscillatorParams params;
  PolyGaussSpinor psi;
};

// Cycles through m, omega, width in {0.5, 1, 2} and degree 0..4.
std::vector<EnsembleMember> polygauss_ensemble(std::mt19937_64& rng, int count) {
  static constexpr double kVals[3] = {0.5, 1.0, 2.0};
  std::vector<EnsembleMember> out;
  for (int i = 0; i < count; ++i) {
    const auto p = make_params(kVals[i % 3], kVals[(i / 3) % 3]);
    const double width = kVals[(i / 9) % 3];
    out.push_back({p, random_spinor(rng, i % 5, width)});
  }
  return out;
}

Eigen::Vector3d random_point(std::mt19937_64& rng, double bound) {
  std::uniform_real_distribution<double> u(-bound, bound);
  const double x = u(rng);
  const double y = u(rng);
  const double z = u(rng);
  return {x, y, z};
}

}  // namespace

// ------------------------------------------------------------------ operators

std::vector<CheckResult> verify_operators(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(opt.seed);
  const Coupling coupling = opt.inject_mutation ? Coupling::beta_dropped : Coupling::oscillator;

  {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      worst = std::max(worst, max_entry(alpha(i) * alpha(i) - identity4()));
      worst = std::max(worst, max_entry(alpha(i) * beta() + beta() * alpha(i)));
      for (int k = 0; k < 3; ++k)
        if (k != i) worst = std::max(worst, max_entry(alpha(i) * alpha(k) + alpha(k) * alpha(i)));
    }
    worst = std::max(worst, max_entry(beta() * beta() - identity4()));
    out.push_back(identity("clifford_relations", worst, 1e-14));
  }

  const auto ensemble = polygauss_ensemble(rng, opt.ensemble);
  double sq = 0.0, sq_printed = 0.0, sq_printed_min = 1e300, sq_mut = 1e300;
  double comm_l = 0.0, comm_s = 0.0, j_sum = 0.0, closure = 0.0;
  for (const auto& [p, psi] : ensemble) {
    const auto h1 = apply_H(p, psi, coupling);
    const auto hh = apply_H(p, h1, coupling);
    closure = std::max(closure, static_cast<double>(std::max(0, h1.degree() - psi.degree() - 2)));
    closure = std::max(closure, static_cast<double>(std::max(0, hh.degree() - psi.degree() - 4)));
    sq = std::max(sq, relative_distance(hh, rhs_H2(p, psi, SquareForm::derived)));
    const auto hh_true = apply_H(p, apply_H(p, psi));
    const double printed = relative_distance(hh_true, rhs_H2(p, psi, SquareForm::printed));
    sq_printed = std::max(sq_printed, printed);
    sq_printed_min = std::min(sq_printed_min, printed);
    const auto hm = apply_H(p, apply_H(p, psi, Coupling::beta_dropped), Coupling::beta_dropped);
    sq_mut = std::min(sq_mut, relative_distance(hm, rhs_H2(p, psi, SquareForm::derived)));
    for (int k = 0; k < 3; ++k) {
      const auto l = commutator_L_H(p, psi, k);
      const auto s = commutator_S_H(p, psi, k);
      comm_l = std::max(comm_l, relative_distance(l.lhs, l.rhs));
      comm_s = std::max(comm_s, relative_distance(s.lhs, s.rhs));
      j_sum = std::max(j_sum, relative_distance(l.lhs + s.lhs, zero_spinor(psi.width)));
    }
  }
  const std::string n_members = std::to_string(ensemble.size()) + " random spinors";
  out.push_back(identity("squared_hamiltonian", sq, 1e-12,
                         "H(H psi) = [p^2 + m^2 w^2 r^2 - (4 S.L + 3) m w beta + m^2] psi, " +
                             n_members));
  out.push_back(detected("squared_hamiltonian_mutation_detected", sq_mut, 1e-3,
                         "beta dropped from the coupling; smallest residual over the ensemble"));
  out.push_back(discrepancy("squared_hamiltonian_printed", sq_printed, 1e-12,
                            "printed form p^2 + m^2 w^2 r^2 + (4 S.L - 3) m w beta; min residual " +
                                fmt(sq_printed_min)));
  out.push_back(identity("commutator_L_H", comm_l, 1e-12, n_members + ", all axes"));
  out.push_back(identity("commutator_S_H", comm_s, 1e-12, n_members + ", all axes"));
  out.push_back(identity("total_angular_momentum_conserved", j_sum, 1e-12,
                         "[L, H] + [Sigma/2, H] = 0"));
  out.push_back(identity("degree_closure", closure, 0.0,
                         "degree grows by at most 2 per application of H"));

  double herm = 0.0, herm_mut = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto& a = ensemble[static_cast<std::size_t>(i) % ensemble.size()];
    const auto psi2 = random_spinor(rng, i % 4, a.psi.width);
    const auto [x, y] = hermiticity_witness(a.params, a.psi, psi2, coupling);
    herm = std::max(herm, std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)}));
    const auto [xm, ym] = hermiticity_witness(a.params, a.psi, psi2, Coupling::beta_dropped);
    herm_mut = std::max(herm_mut, std::abs(xm - ym) / std::max({1.0, std::abs(xm), std::abs(ym)}));
  }
  out.push_back(identity("hermiticity", herm, 1e-10, "<psi1, H psi2> = <H psi1, psi2>, 20 pairs"));
  out.push_back(detected("hermiticity_mutation_detected", herm_mut, 1e-3,
                         "beta dropped from the coupling; largest asymmetry over the pairs"));

  double ground = 0.0;
  for (double m : {0.5, 1.0, 2.0})
    for (double w : {0.5, 1.0, 2.0}) {
      const auto p = make_params(m, w);
      Eigen::Vector4cd up(1.0, 0.0, 0.0, 0.0);
      const auto psi = gaussian_spinor(p.m_omega(), up);
      ground = std::max(ground, relative_distance(apply_H(p, psi, coupling), cplx(m) * psi));
    }
  out.push_back(identity("ground_state_eigenvector", ground, 1e-12,
                         "Gaussian of width m w is an eigenvector with E = m"));

  double sigma = 0.0, sigma_printed = 0.0;
  std::uniform_real_distribution<double> lam(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Vector3d r = random_point(rng, 3.0);
    const double l = lam(rng);
    const double ke = lam(rng);
    const Matrix4c lhs = sigma_interaction_matrix(l, ke, r);
    const Matrix4c closed = sigma_interaction_closed_form(l, ke, r);
    const double scale = std::max(1.0, max_entry(closed));
    sigma = std::max(sigma, max_entry(lhs + closed) / scale);
    sigma_printed = std::max(sigma_printed, max_entry(lhs - closed) / scale);
  }
  out.push_back(identity("sigma_field_contraction", sigma, 1e-12,
                         "(k e/4m) sigma_{mu nu} F^{mu nu} = -(k e/2m) lambda (i alpha.r)"));
  out.push_back(discrepancy("sigma_field_contraction_printed", sigma_printed, 1e-12,
                            "printed sign +(k e/2m) lambda (i alpha.r)"));
  return out;
}

// ----------------------------------------------------------------- covariance

std::vector<CheckResult> verify_covariance(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(opt.seed ^ 0x5bd1e995ULL);
  std::uniform_real_distribution<double> lam_dist(0.2, 2.0);
  const LorentzMatrix b = boost(0.3, Eigen::Vector3d(0.0, 0.0, 1.0));

  double ft = 0.0, gauge = 0.0, fields = 0.0, cov = 0.0, cov_f = 0.0, anti = 0.0;
  double gauge_res = 0.0, t2_law = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double lambda = lam_dist(rng);
    const Eigen::Vector3d r = random_point(rng, 3.0);
    std::uniform_real_distribution<double> tdist(-3.0, 3.0);
    const double t = tdist(rng);
    const FourVector x(t, r[0], r[1], r[2]);

    const PotentialField cov_field = [lambda](const FourVector& y) {
      return potential_cov(lambda, y);
    };
    const PotentialField lab_field = [lambda](const FourVector& y) {
      return potential_lab(lambda, y[0], Eigen::Vector3d(y.tail<3>()));
    };
    const FieldTensor f = field_tensor(lambda, x);
    const FieldTensor f_cov = numerical_field_tensor(cov_field, x);
    const FieldTensor f_lab = numerical_field_tensor(lab_field, x);
    ft = std::max(ft, (f - f_cov).cwiseAbs().maxCoeff());
    gauge = std::max(gauge, (f_lab - f_cov).cwiseAbs().maxCoeff());
    anti = std::max(anti, (f + f.transpose()).cwiseAbs().maxCoeff());
    for (const FieldTensor* g : {&f_cov, &f_lab}) {
      fields = std::max(fields, (electric_field(*g) + lambda * r).cwiseAbs().maxCoeff());
      fields = std::max(fields, magnetic_field(*g).cwiseAbs().maxCoeff());
    }

    const FourVector u = lab_four_velocity<double>();
    const FourVector lhs = potential_cov(lambda, FourVector(b * x), FourVector(b * u));
    const FourVector rhs = b * potential_cov(lambda, x, u);
    cov = std::max(cov, (lhs - rhs).cwiseAbs().maxCoeff() / std::max(1.0, rhs.cwiseAbs().maxCoeff()));
    const FieldTensor fb = field_tensor(lambda, FourVector(b * x), FourVector(b * u));
    const FieldTensor fr = b * f * b.transpose();
    cov_f = std::max(cov_f, (fb - fr).cwiseAbs().maxCoeff() / std::max(1.0, fr.cwiseAbs().maxCoeff()));

    const FourVector transformed = gauge_transformed_lab_potential(lambda, x);
    const FourVector diff = potential_cov(lambda, x) - transformed;
    gauge_res = std::max(gauge_res, diff.cwiseAbs().maxCoeff());
    const FourVector law(0.5 * lambda * t * t, 0.0, 0.0, 0.0);
    t2_law = std::max(t2_law, (diff - law).cwiseAbs().maxCoeff());
  }
  out.push_back(identity("field_tensor_vs_gradient", ft, 1e-8,
                         "closed-form F vs antisymmetrized gradient of the covariant potential"));
  out.push_back(identity("gauge_independence", gauge, 1e-8,
                         "F from the lab potential vs F from the covariant potential"));
  out.push_back(identity("physical_fields", fields, 1e-8, "E = -lambda r, B = 0 in both gauges"));
  out.push_back(identity("field_tensor_antisymmetry", anti, 0.0));
  out.push_back(identity("boost_covariance_potential", cov, 1e-10, "rapidity 0.3 along z"));
  out.push_back(identity("boost_covariance_field_tensor", cov_f, 1e-10, "rapidity 0.3 along z"));
  out.push_back(discrepancy("gauge_function_residual", gauge_res, 1e-8,
                            "lab potential minus grad of the published gauge function vs covariant "
                            "potential (|t|, |r| <= 3)"));
  out.push_back(identity("gauge_residual_t_squared_law", t2_law, 1e-8,
                         "covariant minus gauge-transformed potential = ((lambda/2) t^2, 0, 0, 0)"));

  double round_trip = 0.0, lambda_exact = 0.0;
  for (double m : {0.5, 1.0, 2.0})
    for (double w : {0.5, 1.0, 2.0})
      for (double kappa : {-1.9, 0.7, 2.0}) {
        const auto p = make_params(m, w);
        const double e = 1.3;
        const double lambda = lambda_for_oscillator(p, e, kappa);
        lambda_exact = std::max(lambda_exact,
                                std::abs(lambda * e * kappa / (2.0 * m * m * w) - 1.0));
        const Eigen::Vector3d r = random_point(rng, 2.0);
        const Matrix4c h_int = -beta() * sigma_interaction_matrix(lambda, kappa * e / m, r);
        Matrix4c a_dot_r = Matrix4c::Zero();
        for (int k = 0; k < 3; ++k) a_dot_r += r[k] * alpha(k);
        const Matrix4c target = -I * p.m_omega() * a_dot_r * beta();
        round_trip = std::max(round_trip, max_entry(h_int - target) / std::max(1.0, max_entry(target)));
      }
  out.push_back(identity("coupling_constant", lambda_exact, 1e-15,
                         "lambda e kappa / (2 m^2 w) = 1"));
  out.push_back(identity("anomalous_moment_round_trip", round_trip, 1e-12,
                         "-beta (k e/4m) sigma F = -i m w (alpha.r) beta with lambda = 2 m^2 w/(e k)"));
  return out;
}

// ------------------------------------------------------------------------ ode

std::vector<CheckResult> verify_ode(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const auto& p = opt.params;
  const int n_max = opt.n_max;

  double selected = 0.0, printed = 0.0, printed_min = 1e300;
  bool standard = true;
  for (Sign br : {Sign::plus, Sign::minus})
    for (const auto& s : enumerate_multiplets(n_max, br)) {
      const auto sys = first_order_system(p, s);
      standard = standard && sys.sign_a == -1 && sys.sign_b == +1;
      selected = std::max(selected, closed_form_residual(sys, p, s));
      const double pr = closed_form_residual(printed_first_order_system(p, s), p, s);
      printed = std::max(printed, pr);
      printed_min = std::min(printed_min, pr);
    }
  out.push_back(identity("first_order_system_selected", selected, 1e-8,
                         standard ? "selected derivative signs (-d/dr on G, +d/dr on F)"
                                  : "selected derivative signs vary by state"));
  out.push_back(discrepancy("first_order_system_printed", printed, 1e-8,
                            "printed signs (-d/dr, -d/dr); min residual over states " +
                                fmt(printed_min)));

  const RadialGrid grid = default_grid(p, n_max);
  double fd_err = 0.0, sh_err = 0.0, sh_fd = 0.0, fd_res = 0.0, fd_fun = 0.0;
  int eigenvalues = 0;
  const int j2_max = std::min(9, 2 * n_max + 1);
  for (Sign br : {Sign::plus, Sign::minus})
    for (Sign eps : {Sign::minus, Sign::plus})
      for (int j2 = 1; j2 <= j2_max; j2 += 2) {
        const Channel ch{HalfInt::from_twice(j2), eps, br};
        const int l = (j2 + to_int(eps)) / 2;
        const int levels = (n_max - l) / 2 + 1;
        if (levels < 1) continue;
        const auto fd = fd_eigensolve(p, ch, grid, levels);
        for (int k = 0; k < levels; ++k) {
          const auto label = ch.level_label(k);
          const double e_closed = energy(p, label).E;
          const auto [lo, hi] = shooting_bracket(fd, static_cast<std::size_t>(k));
          const double e_shoot = shooting_solve(p, ch, lo, hi).E;
          fd_err = std::max(fd_err, std::abs(fd[k].E / e_closed - 1.0));
          sh_err = std::max(sh_err, std::abs(e_shoot / e_closed - 1.0));
          sh_fd = std::max(sh_fd, std::abs(e_shoot / fd[k].E - 1.0));
          fd_res = std::max(fd_res, fd[k].residual);
          const auto pair = eigenstate(p, label);
          double diff_plus = 0.0, diff_minus = 0.0;
          for (Eigen::Index i = 0; i < fd[k].r.size(); ++i) {
            const double fc = pair.F(fd[k].r[i]);
            const double gc = pair.G(fd[k].r[i]);
            diff_plus = std::max({diff_plus, std::abs(fd[k].F[i] - fc), std::abs(fd[k].G[i] - gc)});
            diff_minus = std::max({diff_minus, std::abs(fd[k].F[i] + fc), std::abs(fd[k].G[i] + gc)});
          }
          fd_fun = std::max(fd_fun, std::min(diff_plus, diff_minus));
          ++eigenvalues;
        }
      }
  const std::string count = std::to_string(eigenvalues) + " eigenvalues, N <= " + std::to_string(n_max);
  out.push_back(identity("fd_vs_closed_form", fd_err, 1e-6, count));
  out.push_back(identity("shooting_vs_closed_form", sh_err, 1e-6, count));
  out.push_back(identity("shooting_vs_fd", sh_fd, 1e-8, count));
  out.push_back(identity("fd_first_order_residual", fd_res, 1e-6));
  out.push_back(identity("fd_eigenfunction_vs_closed_form", fd_fun, 1e-4,
                         "max norm after sign alignment"));

  {
    const Channel ch{kHalf, Sign::minus, Sign::plus};
    const double rho_max = grid.r_max * std::sqrt(p.m_omega());
    const SturmProblem prob = channel_problem(ch, rho_max);
    const int levels = 4;
    const auto lam = sturm_eigenvalues(prob, grid.npts, levels);
    std::vector<Eigen::VectorXd> vecs;
    for (double l : lam) vecs.push_back(sturm_eigenvector(prob, grid.npts, l));
    const double h = rho_max / (grid.npts + 1);
    double ortho = 0.0;
    for (int a = 0; a < levels; ++a)
      for (int b = 0; b < levels; ++b) {
        const double ip = vecs[a].dot(vecs[b]) * h;
        ortho = std::max(ortho, std::abs(ip - (a == b ? 1.0 : 0.0)));
      }
    out.push_back(identity("fd_eigenvector_orthonormality", ortho, 1e-10));
  }

  double degenerate = 0.0;
  for (int j2 = 1; j2 + 2 <= j2_max; j2 += 2) {
    const Channel a{HalfInt::from_twice(j2), Sign::minus, Sign::plus};
    const Channel b{HalfInt::from_twice(j2 + 2), Sign::minus, Sign::plus};
    const auto ea = fd_eigensolve(p, a, grid, 2);
    const auto eb = fd_eigensolve(p, b, grid, 2);
    for (int k = 0; k < 2; ++k) degenerate = std::max(degenerate, std::abs(ea[k].E / eb[k].E - 1.0));
  }
  out.push_back(identity("fd_degeneracy_realization", degenerate, 1e-6,
                         "eps = -1 channels j and j + 1 share levels (4n law)"));

  {
    const Channel ch{kHalf, Sign::minus, Sign::plus};
    const RadialGrid g0 = make_grid(grid.r_max, 199);
    const auto rep = convergence_report(p, ch, {g0, refine(g0), refine(refine(g0))});
    out.push_back(identity("fd_convergence_order", std::abs(rep.order - 2.0), 0.2,
                           "observed order " + fmt(rep.order)));
    const SturmProblem exact{[](double x) { return -2.0 / (x * (1.0 - x)); }, 1.0};
    const auto ctl = convergence_report(exact, {99, 199, 399});
    double worst = 0.0;
    for (double v : ctl.eigenvalues) worst = std::max(worst, std::abs(v));
    out.push_back(identity("fd_exact_control", worst, 1e-8,
                           "u = x(1 - x) is an exact discrete eigenvector with eigenvalue 0"));
  }
  return out;
}

// ---------------------------------------------------------------------- norms

namespace {

// Decoupled second-order radial equation: -u'' + [L(L+1)/r^2 + m^2 w^2 r^2] u
//   + m w [eps (2j+1) - beta] u = (E^2 - m^2) u, second derivative by
// Richardson-extrapolated central differences.
template <typename Fn>
double second_order_residual(const OscillatorParams& p, const StateLabel& s, Sign beta_sign,
                             Fn&& u, double cut) {
  const int L = beta_sign == Sign::plus ? s.l : s.l_prime();
  const double e2 = std::pow(energy(p, s).E, 2) - p.m * p.m;
  const double c = p.m_omega() * (to_int(s.epsilon) * (s.j.twice() + 1) - to_int(beta_sign));
  const double mw2 = p.m_omega() * p.m_omega();
  double num = 0.0, den = 0.0;
  const int samples = 400;
  for (int i = 1; i < samples; ++i) {
    const double r = cut * i / samples;
    auto d2 = [&](double h) { return (u(r + h) - 2.0 * u(r) + u(std::max(0.0, r - h))) / (h * h); };
    const double h = std::min(1e-3, 0.5 * r);
    const double upp = (4.0 * d2(0.5 * h) - d2(h)) / 3.0;
    const double lhs = -upp + (L * (L + 1.0) / (r * r) + mw2 * r * r) * u(r) + c * u(r);
    num += std::pow(lhs - e2 * u(r), 2);
    den += std::pow(e2 * u(r), 2) + std::pow(upp, 2);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double full_norm_3d(const OscillatorParams& p, const StateLabel& s, const RadialPair& pair) {
  const auto rr = gauss_legendre(64, 0.0, radial_cutoff(p, s));
  const auto ct = gauss_legendre(16, -1.0, 1.0);
  const int n_phi = 16;
  double total = 0.0;
  for (std::size_t a = 0; a < rr.size(); ++a)
    for (std::size_t b = 0; b < ct.size(); ++b)
      for (int c = 0; c < n_phi; ++c) {
        const double r = rr.nodes[a];
        const double theta = std::acos(ct.nodes[b]);
        const double phi = 2.0 * std::numbers::pi * c / n_phi;
        const auto sample = assemble_spinor(p, s, pair, r, theta, phi);
        total += rr.weights[a] * ct.weights[b] * (2.0 * std::numbers::pi / n_phi) * r * r *
                 sample.psi.squaredNorm();
      }
  return total;
}

Eigen::Vector4cd spinor_at(const OscillatorParams& p, const StateLabel& s,
                           const RadialPair& pair, const Eigen::Vector3d& x) {
  const double r = x.norm();
  return assemble_spinor(p, s, pair, r, std::acos(std::clamp(x[2] / r, -1.0, 1.0)),
                         std::atan2(x[1], x[0]))
      .psi;
}

}  // namespace

std::vector<CheckResult> verify_norms(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const auto& p = opt.params;
  const int n_max = opt.n_max;
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);

  std::vector<StateLabel> states;
  for (Sign br : {Sign::plus, Sign::minus})
    for (const auto& s : enumerate_multiplets(n_max, br)) states.push_back(s);

  double norm = 0.0, norm3d = 0.0, ortho = 0.0, eq33 = 0.0, so_resid = 0.0, origin = 0.0;
  int node_derived = 0, node_literal = 0, checked_3d = 0;
  double eigen3d = 0.0, parity = 0.0;
  for (const auto& s : states) {
    const auto pair = eigenstate(p, s);
    norm = std::max(norm, std::abs(norm_integral(pair, 320) - 1.0));
    eq33 = std::max(eq33, std::abs(published_norm_constant(p, s) / pair.norm_constant - 1.0));

    const double cut = radial_cutoff(p, s);
    const int nf = count_nodes([&](double r) { return pair.F(r); }, cut);
    const int ng = count_nodes([&](double r) { return pair.G(r); }, cut);
    if (nf != std::max(s.upper_nodes(), 0) || ng != std::max(s.lower_nodes(), 0)) ++node_derived;
    if (nf != s.n || ng != s.n) ++node_literal;

    so_resid = std::max(so_resid, second_order_residual(p, s, Sign::plus,
                                                        [&](double r) { return pair.F(r); }, cut));
    if (s.lower_nodes() >= 0)
      so_resid = std::max(so_resid, second_order_residual(p, s, Sign::minus,
                                                          [&](double r) { return pair.G(r); }, cut));

    const double exponent = std::log(pair.F(2e-3) / pair.F(1e-3)) / std::log(2.0);
    origin = std::max(origin, std::abs(exponent - (s.l + 1)));
    if (s.lower_nodes() >= 0) {
      const double eg = std::log(std::abs(pair.G(2e-3) / pair.G(1e-3))) / std::log(2.0);
      origin = std::max(origin, std::abs(eg - (s.l_prime() + 1)));
    }

    if (s.N <= 2) {
      norm3d = std::max(norm3d, std::abs(full_norm_3d(p, s, pair) - 1.0));
      ++checked_3d;
    }

    // H psi = E psi pointwise and parity at random points.
    const double E = energy(p, s).E;
    for (int k = 0; k < 4; ++k) {
      const Eigen::Vector3d x = random_point(rng, 1.5 / std::sqrt(p.m_omega()));
      if (x.norm() < 0.1) continue;
      const double h = 1e-4;
      Eigen::Vector4cd hpsi = p.m * (beta() * spinor_at(p, s, pair, x));
      const Eigen::Vector4cd psi = spinor_at(p, s, pair, x);
      for (int a = 0; a < 3; ++a) {
        Eigen::Vector3d e = Eigen::Vector3d::Zero();
        e[a] = h;
        const Eigen::Vector4cd d = (spinor_at(p, s, pair, x + e) - spinor_at(p, s, pair, x - e)) / (2 * h);
        hpsi += -I * (alpha(a) * d) - I * p.m_omega() * x[a] * (alpha(a) * (beta() * psi));
      }
      const double scale = std::max(1e-3, (E * psi).cwiseAbs().maxCoeff());
      eigen3d = std::max(eigen3d, (hpsi - E * psi).cwiseAbs().maxCoeff() / scale);
      const Eigen::Vector4cd mirrored = beta() * spinor_at(p, s, pair, -x);
      const double sign = (s.l % 2 == 0) ? 1.0 : -1.0;
      parity = std::max(parity, (mirrored - sign * psi).cwiseAbs().maxCoeff() /
                                    std::max(1e-3, psi.cwiseAbs().maxCoeff()));
    }
  }
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = a + 1; b < states.size(); ++b) {
      const auto& s1 = states[a];
      const auto& s2 = states[b];
      if (s1.j != s2.j || s1.epsilon != s2.epsilon) continue;
      ortho = std::max(ortho, std::abs(radial_overlap(eigenstate(p, s1), eigenstate(p, s2), 240)));
    }

  const std::string n_states = std::to_string(states.size()) + " multiplets, N <= " + std::to_string(n_max);
  out.push_back(identity("radial_normalization", norm, 1e-10,
                         n_states + ", re-measured with doubled quadrature"));
  out.push_back(identity("full_normalization_3d", norm3d, 1e-8,
                         std::to_string(checked_3d) + " multiplets with N <= 2, product quadrature"));
  out.push_back(identity("orthogonality", ortho, 1e-8, "same (j, eps), both branches"));
  out.push_back(identity("node_counts", node_derived, 0.0,
                         "F has upper_nodes and G lower_nodes sign changes; mismatching states"));
  out.push_back(discrepancy("node_counts_both_equal_n", node_literal, 0.0,
                            "states where F or G does not have exactly n nodes (eps = -1: "
                            "n_G = n_F - 1 is forced)"));
  out.push_back(identity("second_order_radial_equation", so_resid, 1e-6,
                         "relative L2 residual, both components"));
  out.push_back(identity("origin_power_law", origin, 1e-4, "F ~ r^(l+1), G ~ r^(l'+1)"));
  out.push_back(identity("hamiltonian_eigen_equation_3d", eigen3d, 1e-6,
                         "pointwise H psi = E psi at random points"));
  out.push_back(identity("parity", parity, 1e-12, "gamma^0 psi(-x) = (-1)^l psi(x)"));
  out.push_back(discrepancy("published_norm_constant", eq33, 1e-8,
                            "max |A_published / A_quadrature - 1|"));

  {
    const auto ct = gauss_legendre(24, -1.0, 1.0);
    const int n_phi = 32;
    double worst = 0.0;
    for (int j2 = 1; j2 <= 7; j2 += 2)
      for (int l : {(j2 - 1) / 2, (j2 + 1) / 2})
        for (int m2 = -j2; m2 <= j2; m2 += 2)
          for (int l2 : {(j2 - 1) / 2, (j2 + 1) / 2})
            for (int m2b = -j2; m2b <= j2; m2b += 2) {
              std::complex<double> ip = 0.0;
              for (std::size_t b = 0; b < ct.size(); ++b)
                for (int c = 0; c < n_phi; ++c) {
                  const double th = std::acos(ct.nodes[b]);
                  const double ph = 2.0 * std::numbers::pi * c / n_phi;
                  const auto y1 = spinor_harmonic(HalfInt::from_twice(j2), HalfInt::from_twice(m2), l, th, ph);
                  const auto y2 = spinor_harmonic(HalfInt::from_twice(j2), HalfInt::from_twice(m2b), l2, th, ph);
                  ip += ct.weights[b] * (2.0 * std::numbers::pi / n_phi) * y1.dot(y2);
                }
              const double expect = (l == l2 && m2 == m2b) ? 1.0 : 0.0;
              worst = std::max(worst, std::abs(ip - expect));
            }
    out.push_back(identity("spinor_harmonic_orthonormality", worst, 1e-10, "j <= 7/2"));
  }

  // Spectral identities.
  int law = 0, spin_orbit = 0, l_squared = 0;
  for (int n = 0; n <= 10; ++n)
    for (int j2 = 1; j2 <= 21; j2 += 2) {
      const HalfInt j = HalfInt::from_twice(j2);
      const auto s = make_state(n, j, j, Sign::minus, Sign::plus);
      if (shifted_spectrum_value(s) != 4 * n) ++law;
      for (Sign eps : {Sign::minus, Sign::plus}) {
        const auto t = make_state(n, j, j, eps, Sign::plus);
        for (Sign beta_sign : {Sign::plus, Sign::minus}) {
          const int orb = beta_sign == Sign::plus ? t.l : t.l_prime();
          if (l_squared_eigenvalue(t, beta_sign) != orb * (orb + 1.0)) ++l_squared;
          const double textbook = 0.5 * (j.value() * (j.value() + 1) - orb * (orb + 1.0) - 0.75);
          if (spin_orbit_scalar(t, beta_sign) != textbook) ++spin_orbit;
        }
      }
    }
  out.push_back(identity("shifted_spectrum_4n_law", law, 0.0, "eps = -1, n <= 10, j <= 21/2"));
  out.push_back(identity("angular_momentum_squared", l_squared, 0.0, "(j+1/2)(j+1/2+eps beta) = l(l+1)"));
  out.push_back(identity("spin_orbit_consistency", spin_orbit, 0.0,
                         "S.L = [j(j+1) - l(l+1) - 3/4] / 2 on both pairs"));
  const auto susy = susy_pattern_check(p, std::max(2, n_max));
  out.push_back(identity("susy_pattern", static_cast<double>(susy.violations.size()), 0.0,
                         std::to_string(susy.pairs.size()) + " pairs"));
  double nonrel = 0.0;
  for (const auto& s : enumerate_multiplets(n_max, Sign::plus)) {
    const double E = energy(p, s).E;
    const double k = E * E - p.m * p.m;
    const double excess = std::abs(E - p.m - k / (2 * p.m)) - k * k / (8 * std::pow(p.m, 3));
    nonrel = std::max(nonrel, excess);
  }
  out.push_back(identity("nonrelativistic_bound", std::max(0.0, nonrel), 1e-15,
                         "|E - m - (E^2 - m^2)/2m| <= (E^2 - m^2)^2 / 8m^3"));
  return out;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options) {
  if (!is_verify_suite(suite)) throw DomainError("unknown verify suite: " + suite);
  VerifyReport rep{suite, options, {}};
  auto append = [&](std::vector<CheckResult> v) {
    for (auto& c : v) rep.checks.push_back(std::move(c));
  };
  if (suite == "operators" || suite == "all") append(verify_operators(options));
  if (suite == "covariance" || suite == "all") append(verify_covariance(options));
  if (suite == "ode" || suite == "all") append(verify_ode(options));
  if (suite == "norms" || suite == "all") append(verify_norms(options));
  return rep;
}

}  // namespace dosc
