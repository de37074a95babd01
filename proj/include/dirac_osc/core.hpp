#pragma once

// Quantum-number bookkeeping for single-particle Dirac-oscillator states.
// Natural units throughout: hbar = c = 1, so energies are multiples of m and
// lengths multiples of 1/sqrt(m*omega).

#include <compare>
#include <string>
#include <vector>

namespace dosc {

/// A half-integer stored as twice its value so that all angular-momentum
/// arithmetic stays in the integers.
class HalfInt {
public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_half_odd() const { return (twice_ % 2) != 0; }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "1/2", "-3/2", "2"
  std::string str() const;

private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

enum class Sign : int { minus = -1, plus = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
Sign sign_from_int(int value);

struct OscillatorParams {
  double m = 1.0;
  double omega = 1.0;

  double m_omega() const { return m * omega; }
};

/// Throws DomainError unless m > 0 and omega > 0.
OscillatorParams make_params(double m, double omega);

/// Labels of one eigenstate. l is the orbital number of the upper spinor
/// pair, l' = j - epsilon/2 that of the lower pair. N = 2n + l always.
///
/// For positive-energy states n counts the nodes of the upper radial
/// function F; for negative-energy states it counts the nodes of the lower
/// radial function G, which is the dominant one on that branch.
struct StateLabel {
  int n = 0;
  int l = 0;
  HalfInt j = kHalf;
  HalfInt m_j = kHalf;
  Sign epsilon = Sign::minus;
  Sign energy_sign = Sign::plus;
  int N = 0;

  /// l' = j - epsilon/2.
  int l_prime() const { return (j.twice() - to_int(epsilon)) / 2; }
  /// kappa = epsilon (j + 1/2); eigenvalue of -(1 + sigma.L) on the upper pair.
  int kappa() const { return to_int(epsilon) * (j.twice() + 1) / 2; }

  /// Node count of the upper radial function F (-1 if F vanishes).
  int upper_nodes() const;
  /// Node count of the lower radial function G (-1 if G vanishes).
  int lower_nodes() const;
  /// Principal number 2n + l of the dominant component on this branch.
  int dominant_principal() const;

  bool operator==(const StateLabel&) const = default;

  /// Compact text form, e.g. "n=0 l=0 j=1/2 mj=1/2 eps=-1 +".
  std::string str() const;
};

StateLabel make_state(int n, HalfInt j, HalfInt m_j, Sign epsilon,
                      Sign energy_sign);

/// (-1)^l
Sign parity_of(const StateLabel& s);

/// All states with N <= n_max in the order N, j, epsilon, m_j.
std::vector<StateLabel> enumerate_states(int n_max, Sign energy_sign);

/// One representative per (n, j, epsilon) multiplet (m_j = j), same order.
std::vector<StateLabel> enumerate_multiplets(int n_max, Sign energy_sign);

}  // namespace dosc
