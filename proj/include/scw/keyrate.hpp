#pragma once

#include <optional>
#include <vector>

#include "scw/bsee.hpp"
#include "scw/detection.hpp"
#include "scw/states.hpp"

namespace scw {

// BB84_TWO_DETECTOR exists for the count-rate comparison only; the secure
// rate and the Monte Carlo model the B92 and BB84-OSD protocols.
enum class Protocol { B92, BB84_OSD, BB84_TWO_DETECTOR };

// Fraction of windows surviving basis reconciliation: 1/2 for the BB84
// variants, 1 for B92.
double sifting_factor(Protocol proto);

// Alice/Bob phase alphabet of the protocol.
std::vector<Phase> protocol_phases(Protocol proto);

// Error-correction model: leak = f_EC * h(Q), f_EC >= 1 (1 = Shannon limit).
struct ECModel {
  double f_EC = 1.0;
  bool operator==(const ECModel&) const = default;
};

enum class RateStatus {
  Positive,             // K > 0
  ZeroByFloor,          // bracket 1 - leak - chi went negative
  NoConclusiveEvents,   // G = 1, QBER undefined
};

// One sweep sample of the Devetak-Winter rate K = nu_S P_B [1 - leak - chi].
struct KeyRatePoint {
  double L_km;
  double loss_dB;  // xi * L
  double Q;
  double G;
  double chi;
  double P_B;      // (1 - G) * f
  double K;        // bits/s, floored at 0
  RateStatus status;
};

// Binary Shannon entropy; 0 log2 0 := 0. Throws outside [0, 1].
double binary_entropy(double x);

KeyRatePoint secure_rate(const SystemParams& p, const DetectorModel& d, Protocol proto,
                         ECModel ec, double L_km);

// Mean photon number in all sidebands, mu = mu0 (1 - |d^S_{00}(beta)|^2),
// asymptotically mu0 (1 - J_0(m)^2).
double sideband_mu(const SystemParams& p);

struct OptimalModulation {
  double mu;  // sideband photon number at the optimum
  double m;   // modulation index at the optimum
  double K;   // bits/s
};

// Maximizes K over the modulation index at fixed L: logarithmic grid of 200
// points in m within [1e-3, 1.5], then golden-section refinement to 1e-4
// relative tolerance. Empty result when K = 0 over the whole grid.
std::optional<OptimalModulation> optimal_mu(const SystemParams& p, const DetectorModel& d,
                                            Protocol proto, ECModel ec, double L_km);

// Sideband photon number of the two-detector BB84 demodulation:
// mu_s' = mu_s + (sqrt(mu_bar) - sqrt(mu_bar - 2 mu_s))^2 / 2.
double bb84_two_detector_mu(double mu_s, double mu_bar);

// Count-rate comparison of two-detector BB84 against BB84-OSD at distance L.
struct Bb84Comparison {
  double mu_s;        // photons per sideband group after demodulation
  double mu_bar_c;    // carrier photons, constructive case
  double mu_bar;      // carrier photons, destructive case (= mu_bar_c + 2 mu_s)
  double mu_s_prime;  // per-detector photons in two-detector BB84
  double rate_bb84_per_detector;  // eta_B * mu_s'
  double rate_bb84_total;         // 2 eta_B * mu_s'
  double rate_osd;                // 2 eta_B * mu_s
  double relative_difference;     // mu_s'/mu_s - 1
  bool low_modulation;            // mu_s / mu_bar <= 0.05
};

Bb84Comparison compare_bb84_variants(const SystemParams& p, double L_km);

}  // namespace scw
