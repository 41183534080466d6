#include "scw/attack.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scw/keyrate.hpp"

namespace scw {

namespace {

// Tap-side d-function argument: cos(beta_minus) = 1 - sin^2(beta)(1 - cos d).
// Asymptotic limit of (2S+1) beta_minus / 2 is 2 m |sin(d/2)|.
double tap_d00(const SystemParams& p, double phase_diff) {
  if (p.mode == EvalMode::Exact) {
    const double sb = std::sin(wigner::beta_from_modulation(p.m, p.S));
    const double c = 1.0 - sb * sb * (1.0 - std::cos(phase_diff));
    return wigner::d00(p.S, std::acos(std::min(1.0, std::max(-1.0, c))));
  }
  // limit of (2S+1) beta_minus / 2 = 2 m |sin(phase_diff/2)|; +-pi gives 2m
  // and 0 gives 0 exactly.
  const double m_minus =
      p.m * std::sqrt(std::max(0.0, 2.0 * (1.0 - std::cos(phase_diff))));
  return wigner::bessel_j(0, m_minus);
}

double eve_overlap_at_tap(const SystemParams& p, double phi1, double phi2, double eta_bar) {
  return std::exp(-p.mu0 * eta_bar * (1.0 - tap_d00(p, phi1 - phi2)));
}

}  // namespace

SidebandState eve_state(const SystemParams& p, double phi_A, double L_km) {
  return attenuate(alice_state(p, phi_A), 1.0 - channel_transmittance(p.xi, L_km));
}

SidebandState eve_state(const SystemParams& p, Phase phi_A, double L_km) {
  return eve_state(p, phi_A.radians(), L_km);
}

SidebandState rotate_basis(const SidebandState& s) {
  // i^k, exact by case instead of polar()
  static constexpr std::complex<double> kQuarterTurn[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  const int S = s.sidebands();
  std::vector<std::complex<double>> amps = s.amplitudes();
  for (int k = -S; k <= S; ++k)
    amps[static_cast<std::size_t>(k + S)] *= kQuarterTurn[((k % 4) + 4) % 4];
  return {wigner::SidebandCount{S}, std::move(amps)};
}

double eve_overlap(const SystemParams& p, double phi1, double phi2, double L_km) {
  p.validate();
  return eve_overlap_at_tap(p, phi1, phi2, 1.0 - channel_transmittance(p.xi, L_km));
}

double eve_overlap(const SystemParams& p, Phase phi1, Phase phi2, double L_km) {
  return eve_overlap(p, phi1.radians(), phi2.radians(), L_km);
}

HolevoBound holevo_cbs_at_tap(const SystemParams& p, double eta_bar) {
  p.validate();
  if (!(eta_bar >= 0.0) || eta_bar > 1.0)
    throw std::invalid_argument("holevo_cbs_at_tap: eta_bar must lie in [0, 1]");
  const double psi = eve_overlap_at_tap(p, 0.0, std::numbers::pi, eta_bar);
  return {binary_entropy(0.5 * (1.0 - psi))};
}

HolevoBound holevo_cbs(const SystemParams& p, double L_km) {
  return holevo_cbs_at_tap(p, 1.0 - channel_transmittance(p.xi, L_km));
}

}  // namespace scw
