#include "scw/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scw::wigner {

namespace {

// Recurrences below run along rays that grow by many orders of magnitude;
// carried values are renormalized whenever they pass this threshold so the
// stored doubles never overflow.
constexpr double kRescaleTrigger = 1e250;
constexpr double kRescaleFactor = 1e-250;

}  // namespace

SidebandCount::SidebandCount(int s) : value(s) {
  if (s < 1) throw std::invalid_argument("SidebandCount: S must be >= 1");
}

DFunctionRow::DFunctionRow(SidebandCount S, double beta, std::vector<double> values)
    : S_(S.value), beta_(beta), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(2 * S_ + 1))
    throw std::invalid_argument("DFunctionRow: value vector must have 2S+1 entries");
}

double DFunctionRow::value(int k) const {
  if (k < -S_ || k > S_) throw std::out_of_range("DFunctionRow: k outside [-S, S]");
  return values_[static_cast<std::size_t>(k + S_)];
}

double beta_from_modulation(double m, SidebandCount S) {
  if (!std::isfinite(m) || m < 0.0)
    throw std::invalid_argument("beta_from_modulation: modulation index must be finite and >= 0");
  return 2.0 * m / (2.0 * S.value + 1.0);
}

double d00(SidebandCount S, double beta) {
  if (!std::isfinite(beta) || beta < 0.0 || beta > std::numbers::pi)
    throw std::invalid_argument("d00: beta must lie in [0, pi]");
  // P_S(cos beta) by the upward three-term recurrence, carried in extended
  // precision so the k=0 entry of d_row and this fast path agree to ~1e-14
  // even at S ~ 2000.
  const long double x = std::cos(static_cast<long double>(beta));
  long double p_prev = 1.0L;  // P_0
  long double p = x;          // P_1
  for (int l = 1; l < S.value; ++l) {
    const long double p_next = ((2.0L * l + 1.0L) * x * p - l * p_prev) / (l + 1.0L);
    p_prev = p;
    p = p_next;
  }
  return static_cast<double>(p);
}

DFunctionRow d_row(SidebandCount Sc, double beta) {
  if (!std::isfinite(beta) || beta < 0.0 || beta > std::numbers::pi)
    throw std::invalid_argument("d_row: beta must lie in [0, pi]");
  const int S = Sc.value;
  std::vector<double> row(static_cast<std::size_t>(2 * S + 1), 0.0);

  if (beta < 1e-30) {  // identity rotation: exact Kronecker delta
    row[static_cast<std::size_t>(S)] = 1.0;
    return {Sc, beta, std::move(row)};
  }

  const long double x = std::cos(static_cast<long double>(beta));
  const long double s = std::sin(static_cast<long double>(beta));
  const long double g = 2.0L * x / s;

  // Downward three-term recurrence in the order k,
  //   c_k f_{k+1} + (2 k cos(beta)/sin(beta)) f_k + c_{k-1} f_{k-1} = 0,
  //   c_k = sqrt((S+k+1)(S-k)),
  // seeded at the exact boundary k = S (c_S = 0), so the computed ray is the
  // true row up to one overall scale. The seed sign (-1)^S matches
  // P_S^S(cos beta), making that scale positive. Downward is the stable
  // direction through the decaying region k > S sin(beta).
  std::vector<double> f(static_cast<std::size_t>(S + 1), 0.0);
  long double f_up = 0.0L;                          // f_{k+1}
  long double f_k = (S % 2 == 0) ? 1.0L : -1.0L;    // f_S
  f[static_cast<std::size_t>(S)] = static_cast<double>(f_k);
  for (int k = S; k >= 1; --k) {
    const long double c_k = std::sqrt(static_cast<long double>(S + k + 1) * (S - k));
    const long double c_km = std::sqrt(static_cast<long double>(S + k) * (S - k + 1));
    long double f_dn = -(c_k * f_up + g * k * f_k) / c_km;
    if (std::fabs(static_cast<double>(f_dn)) > kRescaleTrigger) {
      f_dn *= kRescaleFactor;
      f_k *= kRescaleFactor;
      for (int j = k; j <= S; ++j) f[static_cast<std::size_t>(j)] *= kRescaleFactor;
    }
    f[static_cast<std::size_t>(k - 1)] = static_cast<double>(f_dn);
    f_up = f_k;
    f_k = f_dn;
  }

  // Fix the scale with the unitarity sum f_0^2 + 2 sum_{k>=1} f_k^2 = 1.
  double max_abs = 0.0;
  for (double v : f) max_abs = std::max(max_abs, std::fabs(v));
  long double norm2 = 0.0L;
  {
    const long double t0 = f[0] / max_abs;
    norm2 = t0 * t0;
    for (int k = 1; k <= S; ++k) {
      const long double t = f[static_cast<std::size_t>(k)] / max_abs;
      norm2 += 2.0L * t * t;
    }
  }
  const long double scale = 1.0L / (static_cast<long double>(max_abs) * std::sqrt(norm2));

  for (int k = 0; k <= S; ++k) {
    const double v = static_cast<double>(f[static_cast<std::size_t>(k)] * scale);
    row[static_cast<std::size_t>(S + k)] = v;
    row[static_cast<std::size_t>(S - k)] = (k % 2 == 0) ? v : -v;  // d_{0,-k} = (-1)^k d_{0k}
  }
  return {Sc, beta, std::move(row)};
}

std::vector<double> bessel_j_row(int n_max, double x) {
  if (n_max < 0) throw std::invalid_argument("bessel_j_row: order must be >= 0");
  if (!std::isfinite(x) || std::fabs(x) > 50.0)
    throw std::invalid_argument("bessel_j: |x| must be <= 50");
  std::vector<double> out(static_cast<std::size_t>(n_max + 1), 0.0);
  const double ax = std::fabs(x);
  if (ax == 0.0) {
    out[0] = 1.0;
    return out;
  }

  // Downward recurrence from well past the turning point, normalized with
  // J_0 + 2 sum_{k even} J_k = 1.
  const int top = static_cast<int>(std::ceil(ax)) + 60;
  std::vector<long double> j(static_cast<std::size_t>(top + 1), 0.0L);
  long double j_up = 0.0L;
  long double j_k = 1.0L;
  j[static_cast<std::size_t>(top)] = j_k;
  for (int k = top; k >= 1; --k) {
    long double j_dn = (2.0L * k / ax) * j_k - j_up;
    if (std::fabs(static_cast<double>(j_dn)) > kRescaleTrigger) {
      j_dn *= kRescaleFactor;
      j_k *= kRescaleFactor;
      for (int q = k; q <= top; ++q) j[static_cast<std::size_t>(q)] *= kRescaleFactor;
    }
    j[static_cast<std::size_t>(k - 1)] = j_dn;
    j_up = j_k;
    j_k = j_dn;
  }
  long double norm = j[0];
  for (int k = 2; k <= top; k += 2) norm += 2.0L * j[static_cast<std::size_t>(k)];

  const int copy_to = std::min(n_max, top);
  for (int k = 0; k <= copy_to; ++k) {
    const double v = static_cast<double>(j[static_cast<std::size_t>(k)] / norm);
    out[static_cast<std::size_t>(k)] = (x < 0.0 && (k & 1)) ? -v : v;
  }
  return out;  // orders beyond `top` are below double range and stay 0
}

double bessel_j(int n, double x) {
  if (n < 0) throw std::invalid_argument("bessel_j: order must be >= 0");
  return bessel_j_row(n, x)[static_cast<std::size_t>(n)];
}

}  // namespace scw::wigner
