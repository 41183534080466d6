#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "scw/wigner.hpp"

namespace scw {

// Exact mode keeps the finite-S Wigner d-functions; asymptotic mode replaces
// every d^S_{0k} with the Bessel limit J_{-k} of the corresponding effective
// modulation index. Asymptotic is the default for key-rate sweeps.
enum class EvalMode { Exact, Asymptotic };

// Full description of the link: source, modulator, fiber, Bob module,
// spectral filter and timing.
struct SystemParams {
  double mu0 = 4.0;    // mean carrier photons per transmission window
  double m = 0.319;    // modulation index
  wigner::SidebandCount S{1024};
  double T = 1e-8;     // window duration, s
  double nu_S = 1e8;   // repetition rate, Hz; nu_S * T == 1
  double delta_phi = 5.0 * std::numbers::pi / 180.0;  // phase instability, rad
  double eta_B = std::pow(10.0, -0.64);  // Bob-module transmittance (6.4 dB)
  double vartheta = 1e-3;  // residual carrier transmission after the filter
  double xi = 0.18;        // fiber loss, dB/km
  // Constant device phases; every reported quantity depends on them only
  // through |.|^2 or compensated differences, so they default to 0.
  double theta1 = 0.0;
  double theta3 = 0.0;
  double phi0 = 0.0;
  EvalMode mode = EvalMode::Asymptotic;

  void validate() const;  // throws std::invalid_argument
  bool operator==(const SystemParams&) const = default;
};

// Protocol phase, a member of {0, pi/2, pi, 3pi/2} (before any instability
// offset). Index 0..3 counts quarter turns.
class Phase {
 public:
  explicit Phase(double radians);
  static Phase from_index(int i);

  double radians() const { return value_; }
  int index() const { return index_; }
  int bit() const { return index_ >= 2 ? 1 : 0; }    // {0, pi/2} -> 0
  int basis() const { return index_ & 1; }           // {0, pi} -> 0

  bool operator==(const Phase&) const = default;

 private:
  Phase(int index, double value) : index_(index), value_(value) {}
  int index_;
  double value_;
};

// Multimode coherent state over the 2S+1 spectral modes; amplitudes indexed
// k = -S..S. Immutable in practice: built once, then only read.
class SidebandState {
 public:
  explicit SidebandState(wigner::SidebandCount S);
  SidebandState(wigner::SidebandCount S, std::vector<std::complex<double>> amps);

  int sidebands() const { return S_; }
  std::complex<double> amp(int k) const;
  void set_amp(int k, std::complex<double> a);
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  double total_photons() const;  // sum_k |amp_k|^2

 private:
  int S_;
  std::vector<std::complex<double>> amps_;
};

// alpha_k = sqrt(mu0) d^S_{0k}(beta) exp(-i (theta1 + phi_A) k).
SidebandState alice_state(const SystemParams& p, double phi_A);
SidebandState alice_state(const SystemParams& p, Phase phi_A);

// eta(L) = 10^(-xi L / 10).
double channel_transmittance(double xi_db_per_km, double length_km);

// Every amplitude multiplied by sqrt(eta), eta in [0, 1].
SidebandState attenuate(const SidebandState& s, double eta);

// beta' = arccos(cos^2 beta - sin^2 beta cos psi), psi the compensated phase
// difference phi_A - phi_B (the constant modulator offset phi_0 is already
// absorbed). Doubles at psi = 0, vanishes at psi = +-pi.
double beta_prime(double beta, double psi);

// State after Bob's modulator, his losses eta_B, and the carrier filter:
// abar_k = sqrt(mu0 eta(L) eta_B) d^S_{0k}(beta') exp(-i (theta3+phiA+phiB) k),
// then the k = 0 amplitude scaled by sqrt(vartheta).
SidebandState bob_state(const SystemParams& p, double phi_A, double phi_B, double L_km);
SidebandState bob_state(const SystemParams& p, Phase phi_A, Phase phi_B, double L_km);

// n_ph = mu0 eta(L) eta_B (1 - (1 - vartheta) |d^S_{00}(beta')|^2).
double mean_photons_at_detector(const SystemParams& p, double phi_A, double phi_B, double L_km);
double mean_photons_at_detector(const SystemParams& p, Phase phi_A, Phase phi_B, double L_km);

// Same quantity on the raw phase difference psi; this is the entry point for
// callers that add the instability offset delta_phi themselves.
double mean_photons_at_phase_diff(const SystemParams& p, double psi, double L_km);

// Product over modes of single-mode coherent overlaps
// <a|b> = exp(-(|a|^2+|b|^2)/2 + conj(a) b).
std::complex<double> overlap(const SidebandState& a, const SidebandState& b);

namespace detail {
// d^S_{0k} row in the active mode. `beta` is the exact-mode argument,
// `m_eff` the matching asymptotic-mode modulation index.
std::vector<double> mode_row(const SystemParams& p, double beta, double m_eff);
// Carrier element d^S_{00} in the active mode.
double mode_d00(const SystemParams& p, double beta, double m_eff);
// Demodulation argument pair for a phase difference psi.
struct DemodArg {
  double beta_prime;
  double m_prime;
};
DemodArg demod_arg(const SystemParams& p, double psi);
}  // namespace detail

}  // namespace scw
