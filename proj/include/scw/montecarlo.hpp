#pragma once

#include <cstdint>

#include "scw/bsee.hpp"
#include "scw/detection.hpp"
#include "scw/keyrate.hpp"
#include "scw/states.hpp"

namespace scw {

// One stochastic session: individual transmission windows with random
// protocol phases, Bernoulli click sampling and sifting. Serves as an
// independent check of the analytic channel model.
struct SessionConfig {
  SystemParams params;
  DetectorModel detector;
  Protocol protocol = Protocol::BB84_OSD;
  double L_km = 0.0;
  std::uint64_t n_windows = 1'000'000;
  std::uint64_t seed = 1;
};

struct SessionStats {
  std::uint64_t n_windows = 0;
  std::uint64_t sifted = 0;       // windows surviving basis reconciliation
  std::uint64_t destructive = 0;  // sifted windows with opposite phases
  std::uint64_t constructive = 0; // sifted windows with equal phases
  std::uint64_t conclusive = 0;   // sifted windows with a click
  std::uint64_t errors = 0;       // clicks in destructive windows
  std::uint64_t correct = 0;      // clicks in constructive windows

  // Estimates of the channel parameters (E from the destructive branch,
  // 1 - E - G from the constructive one) with binomial standard errors.
  double E_hat = 0.0, se_E = 0.0;
  double G_hat = 0.0, se_G = 0.0;
  double Q_hat = 0.0, se_Q = 0.0;
};

// Deterministic for a fixed seed; the generator is std::mt19937_64 with
// uniform variates mapped as (x >> 11) * 2^-53, so runs reproduce across
// platforms.
SessionStats simulate_session(const SessionConfig& cfg);

struct ValidationReport {
  SessionStats stats;
  double E = 0.0, G = 0.0, Q = 0.0;      // analytic values
  double z_E = 0.0, z_G = 0.0, z_Q = 0.0;
  bool pass = false;                     // all |z| < 3
};

ValidationReport validate_against_analytic(const SessionConfig& cfg);

}  // namespace scw
