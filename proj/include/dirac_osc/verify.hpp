#pragma once

// Invariant ensembles behind the `verify` command. Each check records the
// largest residual it saw and the tolerance it was held to. Identity checks
// decide the exit status; discrepancy checks measure how far a published
// formula is from the verified one and never fail the run.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirac_osc/core.hpp"

namespace dosc {

enum class CheckKind { identity, discrepancy };

/// How max_residual is compared with tolerance for an identity check.
enum class Comparator {
  at_most,   // residual <= tolerance
  above,     // residual > tolerance (mutation controls must be detected)
};

struct CheckResult {
  std::string name;
  CheckKind kind = CheckKind::identity;
  Comparator comparator = Comparator::at_most;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string detail;

  bool within_tolerance() const;
  /// Discrepancy entries always pass.
  bool passed() const;
};

struct VerifyOptions {
  OscillatorParams params{1.0, 1.0};
  int n_max = 4;
  std::uint64_t seed = 42;
  /// Random members per polynomial-Gaussian ensemble.
  int ensemble = 50;
  /// Drop beta from the oscillator coupling everywhere the Hamiltonian is
  /// applied (mutation-control builds only).
  bool inject_mutation = false;
};

struct VerifyReport {
  std::string suite;
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::vector<std::string> failing() const;
  nlohmann::ordered_json to_json() const;
};

inline constexpr int kReportSchemaVersion = 1;

/// "operators", "covariance", "ode", "norms", "all".
const std::vector<std::string>& verify_suites();
bool is_verify_suite(const std::string& name);

/// Throws DomainError for an unknown suite.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options);

std::vector<CheckResult> verify_operators(const VerifyOptions& options);
std::vector<CheckResult> verify_covariance(const VerifyOptions& options);
std::vector<CheckResult> verify_ode(const VerifyOptions& options);
std::vector<CheckResult> verify_norms(const VerifyOptions& options);

}  // namespace dosc
