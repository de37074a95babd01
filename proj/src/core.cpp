#include "dirac_osc/core.hpp"

#include <cstdlib>

#include "dirac_osc/error.hpp"

namespace dosc {

std::string HalfInt::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Sign sign_from_int(int value) {
  if (value == 1) return Sign::plus;
  if (value == -1) return Sign::minus;
  throw DomainError("sign must be +1 or -1, got " + std::to_string(value));
}

OscillatorParams make_params(double m, double omega) {
  if (!(m > 0.0)) throw DomainError("mass must be positive");
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  return {m, omega};
}

int StateLabel::upper_nodes() const {
  if (energy_sign == Sign::plus) return n;
  return n + (epsilon == Sign::minus ? 1 : 0);
}

int StateLabel::lower_nodes() const {
  if (energy_sign == Sign::minus) return n;
  return n - (epsilon == Sign::minus ? 1 : 0);
}

int StateLabel::dominant_principal() const {
  return energy_sign == Sign::plus ? 2 * n + l : 2 * n + l_prime();
}

std::string StateLabel::str() const {
  return "n=" + std::to_string(n) + " l=" + std::to_string(l) +
         " j=" + j.str() + " mj=" + m_j.str() +
         " eps=" + std::to_string(to_int(epsilon)) + " " +
         sign_char(energy_sign);
}

StateLabel make_state(int n, HalfInt j, HalfInt m_j, Sign epsilon,
                      Sign energy_sign) {
  if (n < 0) throw DomainError("radial quantum number must be >= 0");
  if (j.twice() < 1 || !j.is_half_odd())
    throw DomainError("j must be a positive half-odd integer");
  if (!m_j.is_half_odd()) throw DomainError("m_j must be half-odd");
  if (std::abs(m_j.twice()) > j.twice()) throw DomainError("|m_j| > j");
  const int l_prime_twice = j.twice() - to_int(epsilon);
  if (l_prime_twice < 0) throw DomainError("l' = j - epsilon/2 is negative");

  StateLabel s;
  s.n = n;
  s.j = j;
  s.m_j = m_j;
  s.epsilon = epsilon;
  s.energy_sign = energy_sign;
  s.l = (j.twice() + to_int(epsilon)) / 2;
  s.N = 2 * n + s.l;
  return s;
}

Sign parity_of(const StateLabel& s) {
  return (s.l % 2 == 0) ? Sign::plus : Sign::minus;
}

namespace {

template <typename Visit>
void for_each_multiplet(int n_max, Visit&& visit) {
  if (n_max < 0) throw DomainError("N_max must be >= 0");
  for (int big_n = 0; big_n <= n_max; ++big_n) {
    // l = j + eps/2 <= N bounds j by N + 1/2.
    for (int j2 = 1; j2 <= 2 * big_n + 1; j2 += 2) {
      for (int eps : {-1, 1}) {
        const int l = (j2 + eps) / 2;
        if (l > big_n || (big_n - l) % 2 != 0) continue;
        visit((big_n - l) / 2, j2, eps);
      }
    }
  }
}

}  // namespace

std::vector<StateLabel> enumerate_states(int n_max, Sign energy_sign) {
  std::vector<StateLabel> out;
  for_each_multiplet(n_max, [&](int n, int j2, int eps) {
    for (int mj2 = -j2; mj2 <= j2; mj2 += 2)
      out.push_back(make_state(n, HalfInt::from_twice(j2),
                               HalfInt::from_twice(mj2), sign_from_int(eps),
                               energy_sign));
  });
  return out;
}

std::vector<StateLabel> enumerate_multiplets(int n_max, Sign energy_sign) {
  std::vector<StateLabel> out;
  for_each_multiplet(n_max, [&](int n, int j2, int eps) {
    out.push_back(make_state(n, HalfInt::from_twice(j2),
                             HalfInt::from_twice(j2), sign_from_int(eps),
                             energy_sign));
  });
  return out;
}

}  // namespace dosc
