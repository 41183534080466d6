#include "scw/states.hpp"

#include <numbers>
#include <stdexcept>

namespace scw {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

double clamp_cos(double c) { return std::min(1.0, std::max(-1.0, c)); }
}  // namespace

void SystemParams::validate() const {
  if (!(mu0 > 0.0) || !std::isfinite(mu0))
    throw std::invalid_argument("SystemParams: mu0 must be positive");
  if (!std::isfinite(m) || m < 0.0)
    throw std::invalid_argument("SystemParams: modulation index must be finite and >= 0");
  if (!(T > 0.0) || !(nu_S > 0.0) || std::fabs(nu_S * T - 1.0) > 1e-9)
    throw std::invalid_argument("SystemParams: nu_S * T must equal 1");
  if (!(delta_phi >= 0.0) || delta_phi >= kHalfPi)
    throw std::invalid_argument("SystemParams: delta_phi must lie in [0, pi/2)");
  if (!(eta_B > 0.0) || eta_B > 1.0)
    throw std::invalid_argument("SystemParams: eta_B must lie in (0, 1]");
  if (!(vartheta >= 0.0) || vartheta > 1.0)
    throw std::invalid_argument("SystemParams: vartheta must lie in [0, 1]");
  if (!(xi >= 0.0) || !std::isfinite(xi))
    throw std::invalid_argument("SystemParams: xi must be finite and >= 0");
  if (mode == EvalMode::Asymptotic) {
    if (S.value < 100)
      throw std::invalid_argument("SystemParams: asymptotic mode needs S >= 100");
    if (2.0 * m > 50.0)
      throw std::invalid_argument("SystemParams: asymptotic mode needs m <= 25");
  } else if (wigner::beta_from_modulation(m, S) > kPi) {
    throw std::invalid_argument("SystemParams: beta = 2m/(2S+1) exceeds pi");
  }
}

Phase::Phase(double radians) : index_(0), value_(0.0) {
  if (!std::isfinite(radians)) throw std::invalid_argument("Phase: non-finite value");
  const double turns = radians / kHalfPi;
  const double r = std::round(turns);
  if (std::fabs(turns - r) > 1e-12 / kHalfPi)
    throw std::invalid_argument("Phase: value not in {0, pi/2, pi, 3pi/2}");
  index_ = static_cast<int>(std::fmod(std::fmod(r, 4.0) + 4.0, 4.0));
  value_ = index_ * kHalfPi;
}

Phase Phase::from_index(int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("Phase: index must be 0..3");
  return Phase(i, i * kHalfPi);
}

SidebandState::SidebandState(wigner::SidebandCount S)
    : S_(S.value), amps_(static_cast<std::size_t>(2 * S.value + 1)) {}

SidebandState::SidebandState(wigner::SidebandCount S, std::vector<std::complex<double>> amps)
    : S_(S.value), amps_(std::move(amps)) {
  if (amps_.size() != static_cast<std::size_t>(2 * S_ + 1))
    throw std::invalid_argument("SidebandState: amplitude vector must have 2S+1 entries");
}

std::complex<double> SidebandState::amp(int k) const {
  if (k < -S_ || k > S_) throw std::out_of_range("SidebandState: k outside [-S, S]");
  return amps_[static_cast<std::size_t>(k + S_)];
}

void SidebandState::set_amp(int k, std::complex<double> a) {
  if (k < -S_ || k > S_) throw std::out_of_range("SidebandState: k outside [-S, S]");
  amps_[static_cast<std::size_t>(k + S_)] = a;
}

double SidebandState::total_photons() const {
  long double sum = 0.0L;
  for (const auto& a : amps_) sum += static_cast<long double>(std::norm(a));
  return static_cast<double>(sum);
}

namespace detail {

std::vector<double> mode_row(const SystemParams& p, double beta, double m_eff) {
  const int S = p.S.value;
  if (p.mode == EvalMode::Exact) return wigner::d_row(p.S, beta).values();
  // d^S_{0k} -> J_{-k}(m_eff) = (-1)^k J_k(m_eff)
  const std::vector<double> j = wigner::bessel_j_row(S, m_eff);
  std::vector<double> row(static_cast<std::size_t>(2 * S + 1));
  for (int k = 0; k <= S; ++k) {
    const double v = j[static_cast<std::size_t>(k)];
    row[static_cast<std::size_t>(S + k)] = (k % 2 == 0) ? v : -v;
    row[static_cast<std::size_t>(S - k)] = v;
  }
  return row;
}

double mode_d00(const SystemParams& p, double beta, double m_eff) {
  if (p.mode == EvalMode::Exact) return wigner::d00(p.S, beta);
  return wigner::bessel_j(0, m_eff);
}

DemodArg demod_arg(const SystemParams& p, double psi) {
  DemodArg a{};
  if (p.mode == EvalMode::Exact) {
    a.beta_prime = beta_prime(wigner::beta_from_modulation(p.m, p.S), psi);
    a.m_prime = (2.0 * p.S.value + 1.0) * a.beta_prime / 2.0;
  } else {
    // S -> infinity limit of (2S+1) beta'/2, i.e. 2 m |cos(psi/2)|, written
    // on cos(psi) so that psi = +-pi gives exactly zero.
    a.m_prime = p.m * std::sqrt(std::max(0.0, 2.0 * (1.0 + std::cos(psi))));
    a.beta_prime = 2.0 * a.m_prime / (2.0 * p.S.value + 1.0);
  }
  return a;
}

}  // namespace detail

SidebandState alice_state(const SystemParams& p, double phi_A) {
  p.validate();
  const int S = p.S.value;
  const double beta = wigner::beta_from_modulation(p.m, p.S);
  const std::vector<double> row = detail::mode_row(p, beta, p.m);
  const double a0 = std::sqrt(p.mu0);
  std::vector<std::complex<double>> amps(static_cast<std::size_t>(2 * S + 1));
  for (int k = -S; k <= S; ++k) {
    const double d = row[static_cast<std::size_t>(k + S)];
    amps[static_cast<std::size_t>(k + S)] = std::polar(a0 * d, -(p.theta1 + phi_A) * k);
  }
  return {p.S, std::move(amps)};
}

SidebandState alice_state(const SystemParams& p, Phase phi_A) {
  return alice_state(p, phi_A.radians());
}

double channel_transmittance(double xi_db_per_km, double length_km) {
  if (!(length_km >= 0.0) || !std::isfinite(length_km))
    throw std::invalid_argument("channel_transmittance: length must be finite and >= 0");
  if (!(xi_db_per_km >= 0.0))
    throw std::invalid_argument("channel_transmittance: xi must be >= 0");
  return std::pow(10.0, -xi_db_per_km * length_km / 10.0);
}

SidebandState attenuate(const SidebandState& s, double eta) {
  if (!(eta >= 0.0) || eta > 1.0)
    throw std::invalid_argument("attenuate: eta must lie in [0, 1]");
  const double r = std::sqrt(eta);
  std::vector<std::complex<double>> amps = s.amplitudes();
  for (auto& a : amps) a *= r;
  return {wigner::SidebandCount{s.sidebands()}, std::move(amps)};
}

double beta_prime(double beta, double psi) {
  const double sb = std::sin(beta);
  // cos beta' = cos^2 - sin^2 cos(psi), written as 1 - sin^2 (1 + cos psi)
  // so that psi = +-pi gives exactly beta' = 0.
  const double c = 1.0 - sb * sb * (1.0 + std::cos(psi));
  return std::acos(clamp_cos(c));
}

SidebandState bob_state(const SystemParams& p, double phi_A, double phi_B, double L_km) {
  p.validate();
  const int S = p.S.value;
  const auto arg = detail::demod_arg(p, phi_A - phi_B);
  const std::vector<double> row = detail::mode_row(p, arg.beta_prime, arg.m_prime);
  const double eta = channel_transmittance(p.xi, L_km);
  const double a0 = std::sqrt(p.mu0 * eta * p.eta_B);
  std::vector<std::complex<double>> amps(static_cast<std::size_t>(2 * S + 1));
  for (int k = -S; k <= S; ++k) {
    const double d = row[static_cast<std::size_t>(k + S)];
    amps[static_cast<std::size_t>(k + S)] = std::polar(a0 * d, -(p.theta3 + phi_A + phi_B) * k);
  }
  amps[static_cast<std::size_t>(S)] *= std::sqrt(p.vartheta);  // carrier filtering
  return {p.S, std::move(amps)};
}

SidebandState bob_state(const SystemParams& p, Phase phi_A, Phase phi_B, double L_km) {
  return bob_state(p, phi_A.radians(), phi_B.radians(), L_km);
}

double mean_photons_at_phase_diff(const SystemParams& p, double psi, double L_km) {
  p.validate();
  const auto arg = detail::demod_arg(p, psi);
  const double d = detail::mode_d00(p, arg.beta_prime, arg.m_prime);
  const double eta = channel_transmittance(p.xi, L_km);
  return p.mu0 * eta * p.eta_B * (1.0 - (1.0 - p.vartheta) * d * d);
}

double mean_photons_at_detector(const SystemParams& p, double phi_A, double phi_B, double L_km) {
  return mean_photons_at_phase_diff(p, phi_A - phi_B, L_km);
}

double mean_photons_at_detector(const SystemParams& p, Phase phi_A, Phase phi_B, double L_km) {
  return mean_photons_at_phase_diff(p, phi_A.radians() - phi_B.radians(), L_km);
}

std::complex<double> overlap(const SidebandState& a, const SidebandState& b) {
  if (a.sidebands() != b.sidebands())
    throw std::invalid_argument("overlap: states must have the same mode count");
  long double re = 0.0L, im = 0.0L;
  const auto& va = a.amplitudes();
  const auto& vb = b.amplitudes();
  for (std::size_t i = 0; i < va.size(); ++i) {
    const std::complex<double> cross = std::conj(va[i]) * vb[i];
    re += -0.5L * (std::norm(va[i]) + std::norm(vb[i])) + cross.real();
    im += cross.imag();
  }
  const double mag = std::exp(static_cast<double>(re));
  return {mag * std::cos(static_cast<double>(im)), mag * std::sin(static_cast<double>(im))};
}

}  // namespace scw
