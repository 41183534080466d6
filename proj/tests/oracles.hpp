// Independent reference implementations used only by the tests. Everything
// here is deliberately brute force: explicit factorial sums, power series and
// small dense eigenproblems, evaluated in extended precision, with no code
// shared with the library paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracles {

inline long double factorial(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Explicit factorial-sum Wigner d-function in the toolkit's convention
// (d^S_{0k} here equals the textbook d^S_{k0}); exact for S <= 8 where all
// factorials are representable.
inline long double wigner_d0k(int S, int k, long double beta) {
  const long double ch = std::cos(beta / 2.0L);
  const long double sh = std::sin(beta / 2.0L);
  const long double pref = std::sqrt(factorial(S + k) * factorial(S - k)) * factorial(S);
  const int s_min = std::max(0, -k);
  const int s_max = std::min(S, S - k);
  long double sum = 0.0L;
  for (int s = s_min; s <= s_max; ++s) {
    const long double denom =
        factorial(S - s) * factorial(s) * factorial(k + s) * factorial(S - k - s);
    const long double sign = ((k + s) % 2 == 0) ? 1.0L : -1.0L;
    sum += sign * pref / denom * std::pow(ch, 2 * S - k - 2 * s) * std::pow(sh, k + 2 * s);
  }
  return sum;
}

inline std::vector<double> wigner_row(int S, double beta) {
  std::vector<double> row(static_cast<std::size_t>(2 * S + 1));
  for (int k = -S; k <= S; ++k)
    row[static_cast<std::size_t>(k + S)] =
        static_cast<double>(wigner_d0k(S, k, static_cast<long double>(beta)));
  return row;
}

// Truncated power series sum_j (-1)^j (x/2)^(n+2j) / (j! (n+j)!); adequate
// for the small arguments the tests use.
inline long double bessel_series(int n, long double x) {
  long double term = std::pow(x / 2.0L, n) / factorial(n);
  long double sum = term;
  for (int j = 1; j < 80; ++j) {
    term *= -(x / 2.0L) * (x / 2.0L) / (static_cast<long double>(j) * (n + j));
    sum += term;
  }
  return sum;
}

inline double binary_entropy_ref(double x) {
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

// Von Neumann entropy of rho = (|a><a| + |b><b|)/2 for two pure states with
// real overlap psi, via the explicit 2x2 matrix in an orthonormalized basis.
inline double two_state_mixture_entropy(double psi) {
  const double s = std::sqrt(std::max(0.0, 1.0 - psi * psi));
  // rho in the basis {|a>, (|b> - psi |a>)/s}
  const double r11 = 0.5 * (1.0 + psi * psi);
  const double r12 = 0.5 * psi * s;
  const double r22 = 0.5 * s * s;
  const double tr = r11 + r22;
  const double det = r11 * r22 - r12 * r12;
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  const double l1 = tr / 2.0 + disc;
  const double l2 = tr / 2.0 - disc;
  auto ent = [](double l) { return l > 0.0 ? -l * std::log2(l) : 0.0; };
  return ent(l1) + ent(l2);
}

}  // namespace oracles
