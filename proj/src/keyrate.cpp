#include "scw/keyrate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "scw/attack.hpp"

namespace scw {

double sifting_factor(Protocol proto) {
  return proto == Protocol::B92 ? 1.0 : 0.5;
}

std::vector<Phase> protocol_phases(Protocol proto) {
  if (proto == Protocol::B92) return {Phase::from_index(0), Phase::from_index(2)};
  return {Phase::from_index(0), Phase::from_index(1), Phase::from_index(2),
          Phase::from_index(3)};
}

double binary_entropy(double x) {
  if (!(x >= 0.0) || x > 1.0)
    throw std::domain_error("binary_entropy: argument must lie in [0, 1]");
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

KeyRatePoint secure_rate(const SystemParams& p, const DetectorModel& d, Protocol proto,
                         ECModel ec, double L_km) {
  if (proto == Protocol::BB84_TWO_DETECTOR)
    throw std::invalid_argument(
        "secure_rate: two-detector BB84 is covered by the count-rate comparison only");
  if (!(ec.f_EC >= 1.0))
    throw std::invalid_argument("secure_rate: f_EC must be >= 1");
  const BseeChannel ch = channel_from_system(p, d, L_km);
  const double f = sifting_factor(proto);

  KeyRatePoint pt{};
  pt.L_km = L_km;
  pt.loss_dB = p.xi * L_km;
  pt.G = ch.G;
  pt.chi = holevo_cbs(p, L_km).chi;
  pt.P_B = (1.0 - ch.G) * f;
  if (ch.G >= 1.0) {
    pt.Q = std::numeric_limits<double>::quiet_NaN();
    pt.K = 0.0;
    pt.status = RateStatus::NoConclusiveEvents;
    return pt;
  }
  pt.Q = qber(ch);
  const double bracket = 1.0 - ec.f_EC * binary_entropy(pt.Q) - pt.chi;
  // f is 1 or 1/2, so K_B92 = 2 K_BB84-OSD holds bit-exactly.
  pt.K = p.nu_S * (1.0 - ch.G) * std::max(0.0, bracket) * f;
  pt.status = bracket > 0.0 ? RateStatus::Positive : RateStatus::ZeroByFloor;
  return pt;
}

double sideband_mu(const SystemParams& p) {
  p.validate();
  const double d = p.mode == EvalMode::Exact
                       ? wigner::d00(p.S, wigner::beta_from_modulation(p.m, p.S))
                       : wigner::bessel_j(0, p.m);
  return p.mu0 * (1.0 - d * d);
}

std::optional<OptimalModulation> optimal_mu(const SystemParams& p, const DetectorModel& d,
                                            Protocol proto, ECModel ec, double L_km) {
  constexpr int kGridPoints = 200;
  constexpr double kMLow = 1e-3;
  constexpr double kMHigh = 1.5;
  constexpr double kRelTol = 1e-4;

  SystemParams q = p;
  const auto rate_at = [&](double m) {
    q.m = m;
    return secure_rate(q, d, proto, ec, L_km).K;
  };

  // Coarse logarithmic grid guards against missing the mode.
  std::vector<double> grid_m(kGridPoints), grid_k(kGridPoints);
  const double ratio = kMHigh / kMLow;
  int best = -1;
  for (int i = 0; i < kGridPoints; ++i) {
    grid_m[i] = kMLow * std::pow(ratio, static_cast<double>(i) / (kGridPoints - 1));
    grid_k[i] = rate_at(grid_m[i]);
    if (best < 0 || grid_k[i] > grid_k[best]) best = i;
  }
  if (grid_k[best] <= 0.0) return std::nullopt;

  // Golden-section refinement inside the bracketing grid cells.
  double lo = grid_m[std::max(0, best - 1)];
  double hi = grid_m[std::min(kGridPoints - 1, best + 1)];
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double k1 = rate_at(x1), k2 = rate_at(x2);
  while ((b - a) > kRelTol * b) {
    if (k1 < k2) {
      a = x1;
      x1 = x2;
      k1 = k2;
      x2 = a + invphi * (b - a);
      k2 = rate_at(x2);
    } else {
      b = x2;
      x2 = x1;
      k2 = k1;
      x1 = b - invphi * (b - a);
      k1 = rate_at(x1);
    }
  }
  double m_star = k1 > k2 ? x1 : x2;
  double k_star = std::max(k1, k2);
  if (grid_k[best] > k_star) {  // refinement never loses to the grid
    m_star = grid_m[best];
    k_star = grid_k[best];
  }
  q.m = m_star;
  return OptimalModulation{sideband_mu(q), m_star, k_star};
}

double bb84_two_detector_mu(double mu_s, double mu_bar) {
  if (!(mu_s >= 0.0) || !(mu_bar >= 0.0) || 2.0 * mu_s > mu_bar)
    throw std::invalid_argument("bb84_two_detector_mu: need 0 <= 2 mu_s <= mu_bar");
  const double diff = std::sqrt(mu_bar) - std::sqrt(mu_bar - 2.0 * mu_s);
  return mu_s + 0.5 * diff * diff;
}

Bb84Comparison compare_bb84_variants(const SystemParams& p, double L_km) {
  p.validate();
  const double eta = channel_transmittance(p.xi, L_km);
  // Carrier weight for a correctly guessed basis (beta' = 2 beta).
  const auto arg = detail::demod_arg(p, 0.0);
  const double d = detail::mode_d00(p, arg.beta_prime, arg.m_prime);
  const double dd = d * d;

  Bb84Comparison r{};
  r.mu_bar = p.mu0 * eta;
  r.mu_bar_c = p.mu0 * eta * dd;
  r.mu_s = p.mu0 * eta * (1.0 - dd) / 2.0;
  r.mu_s_prime = bb84_two_detector_mu(r.mu_s, r.mu_bar);
  r.rate_bb84_per_detector = p.eta_B * r.mu_s_prime;
  r.rate_bb84_total = 2.0 * p.eta_B * r.mu_s_prime;
  r.rate_osd = 2.0 * p.eta_B * r.mu_s;
  r.relative_difference = r.mu_s > 0.0 ? r.mu_s_prime / r.mu_s - 1.0 : 0.0;
  r.low_modulation = r.mu_s <= 0.05 * r.mu_bar;
  return r;
}

}  // namespace scw
