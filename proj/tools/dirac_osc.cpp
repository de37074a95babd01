// Command-line front end: spectra, degeneracy tables, sampled
// eigenfunctions, radial-oracle comparisons and the verification suites.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirac_osc/core.hpp"
#include "dirac_osc/error.hpp"
#include "dirac_osc/radial_oracle.hpp"
#include "dirac_osc/spectrum.hpp"
#include "dirac_osc/verify.hpp"
#include "dirac_osc/wavefun.hpp"

namespace {

using dosc::HalfInt;
using dosc::Sign;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitFailed = 1;

struct RunConfig {
  double m = 1.0;
  double omega = 1.0;
  int n_max = 4;
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 42;
  int grid_npts = 0;      // 0: command default
  double r_max = 0.0;     // 0: command default
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

HalfInt parse_half(const std::string& text, const char* what) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return HalfInt::from_int(std::stoi(text));
    if (text.substr(slash + 1) != "2") throw std::invalid_argument("denominator");
    return HalfInt::from_twice(std::stoi(text.substr(0, slash)));
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "' (expected e.g. 3/2)");
  }
}

Sign parse_sign(const std::string& text, const char* what) {
  if (text == "+" || text == "+1" || text == "1") return Sign::plus;
  if (text == "-" || text == "-1") return Sign::minus;
  throw UsageError(std::string("invalid ") + what + ": '" + text + "' (expected + or -)");
}

dosc::OscillatorParams params_of(const RunConfig& cfg) {
  try {
    return dosc::make_params(cfg.m, cfg.omega);
  } catch (const dosc::DomainError& e) {
    throw UsageError(e.what());
  }
}

void check_common(const RunConfig& cfg) {
  params_of(cfg);
  if (cfg.n_max < 0) throw UsageError("--n-max must be >= 0");
  if (cfg.grid_npts < 0) throw UsageError("--grid-npts must be positive");
  if (cfg.r_max < 0.0) throw UsageError("--r-max must be positive");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot open output file " + cfg.out);
  f << text;
}

// ------------------------------------------------------------------- spectrum

std::string cmd_spectrum(const RunConfig& cfg) {
  const auto p = params_of(cfg);
  json rows = json::array();
  std::ostringstream csv;
  csv << "N,n,l,j2,mj2,epsilon,branch,E,shifted\n";
  for (Sign branch : {Sign::plus, Sign::minus})
    for (const auto& s : dosc::enumerate_states(cfg.n_max, branch)) {
      const auto lvl = dosc::energy(p, s);
      csv << s.N << ',' << s.n << ',' << s.l << ',' << s.j.twice() << ',' << s.m_j.twice()
          << ',' << dosc::to_int(s.epsilon) << ',' << dosc::sign_char(branch) << ','
          << num(lvl.E) << ',' << lvl.shifted << '\n';
      rows.push_back({{"N", s.N}, {"n", s.n}, {"l", s.l}, {"j2", s.j.twice()},
                      {"mj2", s.m_j.twice()}, {"epsilon", dosc::to_int(s.epsilon)},
                      {"branch", std::string(1, dosc::sign_char(branch))}, {"E", lvl.E},
                      {"shifted", lvl.shifted}});
    }
  return cfg.format == "json" ? rows.dump(2) + "\n" : csv.str();
}

// ----------------------------------------------------------------- degeneracy

std::string cmd_degeneracy(const RunConfig& cfg) {
  const auto p = params_of(cfg);
  struct Class {
    std::vector<dosc::StateLabel> members;
    int degeneracy = 0;
  };
  // key: (branch, epsilon, shifted)
  std::map<std::tuple<int, int, int>, Class> classes;
  for (Sign branch : {Sign::plus, Sign::minus})
    for (const auto& s : dosc::enumerate_states(cfg.n_max, branch)) {
      auto& c = classes[{-dosc::to_int(branch), dosc::to_int(s.epsilon), dosc::shifted_value(s)}];
      if (s.m_j == s.j) c.members.push_back(s);
      ++c.degeneracy;
    }

  json rows = json::array();
  std::ostringstream csv;
  csv << "branch,epsilon,shifted,E,degeneracy,members,susy_partner_shifted,delta_E2_over_m_omega\n";
  for (const auto& [key, c] : classes) {
    const auto [neg_branch, eps, shifted] = key;
    const Sign branch = neg_branch < 0 ? Sign::plus : Sign::minus;
    const double e2 = p.m * p.m + p.m_omega() * shifted;
    const double E = (branch == Sign::plus ? 1.0 : -1.0) * std::sqrt(e2);
    std::string members;
    json member_list = json::array();
    for (const auto& s : c.members) {
      if (!members.empty()) members += ' ';
      members += "N" + std::to_string(s.N) + ":j" + s.j.str();
      member_list.push_back({{"N", s.N}, {"n", s.n}, {"l", s.l}, {"j2", s.j.twice()}});
    }
    std::string partner, delta;
    json partner_json = nullptr, delta_json = nullptr;
    if (branch == Sign::plus && eps == 1) {
      // E^2(+, eps=+1) - E^2(-, eps=-1) = 2 m omega
      const int target = shifted - 2;
      if (classes.count({1, -1, target})) {
        partner = std::to_string(target);
        delta = "2";
        partner_json = target;
        delta_json = 2;
      }
    }
    csv << dosc::sign_char(branch) << ',' << eps << ',' << shifted << ',' << num(E) << ','
        << c.degeneracy << ',' << members << ',' << partner << ',' << delta << '\n';
    rows.push_back({{"branch", std::string(1, dosc::sign_char(branch))}, {"epsilon", eps},
                    {"shifted", shifted}, {"E", E}, {"degeneracy", c.degeneracy},
                    {"members", member_list}, {"susy_partner_shifted", partner_json},
                    {"delta_E2_over_m_omega", delta_json}});
  }
  return cfg.format == "json" ? rows.dump(2) + "\n" : csv.str();
}

// --------------------------------------------------------------- wavefunction

struct WaveArgs {
  int n = 0;
  std::string j = "1/2";
  std::string mj;
  std::string eps = "-1";
  std::string branch = "+";
  double r_min = 0.0;
};

std::string cmd_wavefunction(const RunConfig& cfg, const WaveArgs& w) {
  const auto p = params_of(cfg);
  const HalfInt j = parse_half(w.j, "--j");
  const HalfInt mj = w.mj.empty() ? j : parse_half(w.mj, "--mj");
  dosc::StateLabel s;
  try {
    s = dosc::make_state(w.n, j, mj, parse_sign(w.eps, "--eps"), parse_sign(w.branch, "--branch"));
  } catch (const dosc::DomainError& e) {
    throw UsageError(std::string("invalid state: ") + e.what());
  }
  const int npts = cfg.grid_npts > 0 ? cfg.grid_npts : 200;
  if (npts < 2) throw UsageError("--grid-npts must be >= 2");
  if (w.r_min < 0.0) throw UsageError("--r-min must be >= 0");
  const double r_max = cfg.r_max > 0.0 ? cfg.r_max : dosc::radial_cutoff(p, s);
  if (!(r_max > w.r_min)) throw UsageError("--r-max must exceed --r-min");

  const auto pair = dosc::eigenstate(p, s);
  const double cut = dosc::radial_cutoff(p, s);
  json header;
  header["schema_version"] = dosc::kReportSchemaVersion;
  header["label"] = {{"n", s.n}, {"l", s.l}, {"j2", s.j.twice()}, {"mj2", s.m_j.twice()},
                     {"epsilon", dosc::to_int(s.epsilon)},
                     {"branch", std::string(1, dosc::sign_char(s.energy_sign))}, {"N", s.N}};
  header["m"] = p.m;
  header["omega"] = p.omega;
  header["E"] = dosc::energy(p, s).E;
  header["norm_residual"] = std::abs(dosc::norm_integral(pair, 320) - 1.0);
  header["nodes_F"] = dosc::count_nodes([&](double r) { return pair.F(r); }, cut);
  header["nodes_G"] = dosc::count_nodes([&](double r) { return pair.G(r); }, cut);
  header["norm_constant"] = pair.norm_constant;
  header["relative_weight"] = pair.g_weight;

  json samples = json::array();
  std::ostringstream csv;
  csv << "# " << header.dump() << '\n' << "r,F,G,probability_density\n";
  for (int i = 0; i < npts; ++i) {
    const double r = w.r_min + (r_max - w.r_min) * i / (npts - 1);
    const double F = pair.F(r);
    const double G = pair.G(r);
    csv << num(r) << ',' << num(F) << ',' << num(G) << ',' << num(F * F + G * G) << '\n';
    samples.push_back({{"r", r}, {"F", F}, {"G", G}, {"probability_density", F * F + G * G}});
  }
  if (cfg.format == "json") {
    header["samples"] = samples;
    return header.dump(2) + "\n";
  }
  return csv.str();
}

// ----------------------------------------------------------------- ode-compare

std::string cmd_ode_compare(const RunConfig& cfg) {
  const auto p = params_of(cfg);
  dosc::RadialGrid grid = dosc::default_grid(p, cfg.n_max);
  if (cfg.r_max > 0.0 || cfg.grid_npts > 0)
    grid = dosc::make_grid(cfg.r_max > 0.0 ? cfg.r_max : grid.r_max,
                           cfg.grid_npts > 0 ? cfg.grid_npts : grid.npts);

  json rows = json::array();
  std::ostringstream csv;
  csv << "channel,level,E_closed,E_fd,E_shoot,rel_err_fd,rel_err_shoot,conv_order\n";
  const int j2_max = std::min(9, 2 * cfg.n_max + 1);
  for (Sign branch : {Sign::plus, Sign::minus})
    for (Sign eps : {Sign::minus, Sign::plus})
      for (int j2 = 1; j2 <= j2_max; j2 += 2) {
        const dosc::Channel ch{HalfInt::from_twice(j2), eps, branch};
        const int l = (j2 + dosc::to_int(eps)) / 2;
        if (l > cfg.n_max) continue;
        const int levels = (cfg.n_max - l) / 2 + 1;
        const auto fd = dosc::fd_eigensolve(p, ch, grid, levels);
        const dosc::RadialGrid g0 = dosc::make_grid(grid.r_max, 199);
        for (int k = 0; k < levels; ++k) {
          const double e_closed = dosc::energy(p, ch.level_label(k)).E;
          const auto [lo, hi] = dosc::shooting_bracket(fd, static_cast<std::size_t>(k));
          const double e_shoot = dosc::shooting_solve(p, ch, lo, hi).E;
          const auto conv = dosc::convergence_report(
              p, ch, {g0, dosc::refine(g0), dosc::refine(dosc::refine(g0))}, k);
          const double err_fd = std::abs(fd[k].E / e_closed - 1.0);
          const double err_sh = std::abs(e_shoot / e_closed - 1.0);
          csv << ch.str() << ',' << k << ',' << num(e_closed) << ',' << num(fd[k].E) << ','
              << num(e_shoot) << ',' << num(err_fd) << ',' << num(err_sh) << ','
              << num(conv.order) << '\n';
          rows.push_back({{"channel", ch.str()}, {"level", k}, {"E_closed", e_closed},
                          {"E_fd", fd[k].E}, {"E_shoot", e_shoot}, {"rel_err_fd", err_fd},
                          {"rel_err_shoot", err_sh}, {"conv_order", conv.order}});
        }
      }
  return cfg.format == "json" ? rows.dump(2) + "\n" : csv.str();
}

// --------------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  if (!dosc::is_verify_suite(suite)) throw UsageError("unknown verify suite: " + suite);
  dosc::VerifyOptions opt;
  opt.params = params_of(cfg);
  opt.n_max = cfg.n_max;
  opt.seed = cfg.seed;
#ifdef DOSC_INJECT_MUTATION
  opt.inject_mutation = true;
#endif
  const auto report = dosc::run_verify(suite, opt);
  if (cfg.format == "json") {
    emit(cfg, report.to_json().dump(2) + "\n");
  } else {
    std::ostringstream csv;
    csv << "name,kind,max_residual,comparator,tolerance,status\n";
    for (const auto& c : report.checks)
      csv << c.name << ',' << (c.kind == dosc::CheckKind::identity ? "identity" : "discrepancy")
          << ',' << num(c.max_residual) << ','
          << (c.comparator == dosc::Comparator::at_most ? "<=" : ">") << ',' << num(c.tolerance)
          << ',' << (c.kind == dosc::CheckKind::discrepancy ? "reported"
                     : c.passed()                           ? "pass"
                                                            : "fail")
          << '\n';
    emit(cfg, csv.str());
  }
  for (const auto& name : report.failing()) std::cerr << "FAILED: " << name << '\n';
  return report.passed() ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac oscillator: closed-form spectrum, eigenfunctions and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--m", cfg.m, "Particle mass (natural units)");
  app.add_option("--omega", cfg.omega, "Oscillator frequency (natural units)");
  app.add_option("--n-max", cfg.n_max, "Largest principal quantum number N");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "Write output to PATH instead of stdout");
  app.add_option("--seed", cfg.seed, "Seed for randomized ensembles");
  app.add_option("--grid-npts", cfg.grid_npts, "Sample / grid point count override");
  app.add_option("--r-max", cfg.r_max, "Outer radius override");

  auto* spectrum = app.add_subcommand("spectrum", "All states with N <= n-max, both branches");
  auto* degeneracy = app.add_subcommand("degeneracy", "Degeneracy classes of (E^2 - m^2)/(m omega)");
  degeneracy->alias("figure1");
  auto* wave = app.add_subcommand("wavefunction", "Sample a normalized radial pair");
  WaveArgs w;
  wave->add_option("--n", w.n, "Radial quantum number");
  wave->add_option("--j", w.j, "Total angular momentum, e.g. 3/2");
  wave->add_option("--mj", w.mj, "Magnetic quantum number (default j)");
  wave->add_option("--eps", w.eps, "Parity label epsilon: + or -");
  wave->add_option("--branch", w.branch, "Energy branch: + or -");
  wave->add_option("--r-min", w.r_min, "First sample radius");
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  std::string suite;
  verify->add_option("suite", suite, "operators | covariance | ode | norms | all")->required();
  auto* ode = app.add_subcommand("ode-compare", "Closed form vs finite differences vs shooting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    check_common(cfg);
    if (*spectrum) emit(cfg, cmd_spectrum(cfg));
    else if (*degeneracy) emit(cfg, cmd_degeneracy(cfg));
    else if (*wave) emit(cfg, cmd_wavefunction(cfg, w));
    else if (*ode) emit(cfg, cmd_ode_compare(cfg));
    else if (*verify) return cmd_verify(cfg, suite);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return 0;
}
