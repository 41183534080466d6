#include "scw/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace scw {

namespace {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double binomial_se(double p, std::uint64_t n) {
  return n > 0 ? std::sqrt(p * (1.0 - p) / static_cast<double>(n)) : 0.0;
}

// z-statistic under the analytic null hypothesis.
double zscore(double estimate, double truth, double se) {
  const double diff = estimate - truth;
  if (se == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / se;
}

}  // namespace

SessionStats simulate_session(const SessionConfig& cfg) {
  cfg.params.validate();
  cfg.detector.validate(cfg.params.T);
  if (cfg.n_windows < 1) throw std::invalid_argument("simulate_session: n_windows must be >= 1");
  if (cfg.protocol == Protocol::BB84_TWO_DETECTOR)
    throw std::invalid_argument("simulate_session: no event model for two-detector BB84");

  const std::vector<Phase> phases = protocol_phases(cfg.protocol);
  const std::uint64_t n = phases.size();       // 2 or 4
  const std::uint64_t mask = n - 1;
  const bool sift_basis = cfg.protocol == Protocol::BB84_OSD;

  // Click probability per (phi_A, phi_B) pair, with the instability offset
  // added to Bob's phase.
  double click_p[4][4] = {};
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      const double psi =
          phases[a].radians() - (phases[b].radians() + cfg.params.delta_phi);
      const double n_ph = mean_photons_at_phase_diff(cfg.params, psi, cfg.L_km);
      click_p[a][b] = click_probability(n_ph, cfg.detector, cfg.params.T).value;
    }

  std::mt19937_64 rng(cfg.seed);
  SessionStats st{};
  st.n_windows = cfg.n_windows;
  for (std::uint64_t w = 0; w < cfg.n_windows; ++w) {
    const std::uint64_t a = rng() & mask;
    const std::uint64_t b = rng() & mask;
    const double u = uniform01(rng);  // drawn every window to keep the stream aligned
    if (sift_basis && phases[a].basis() != phases[b].basis()) continue;
    ++st.sifted;
    const bool destructive = phases[a].bit() != phases[b].bit();
    if (destructive)
      ++st.destructive;
    else
      ++st.constructive;
    if (u < click_p[a][b]) {
      ++st.conclusive;
      if (destructive)
        ++st.errors;  // Bob decodes his own phase's bit
      else
        ++st.correct;
    }
  }

  st.E_hat = st.destructive > 0
                 ? static_cast<double>(st.errors) / static_cast<double>(st.destructive)
                 : 0.0;
  const double p_ok = st.constructive > 0 ? static_cast<double>(st.correct) /
                                                static_cast<double>(st.constructive)
                                          : 0.0;
  st.se_E = binomial_se(st.E_hat, st.destructive);
  const double se_ok = binomial_se(p_ok, st.constructive);
  const double g_raw = 1.0 - st.E_hat - p_ok;
  st.G_hat = std::min(1.0, std::max(0.0, g_raw));
  st.se_G = std::sqrt(st.se_E * st.se_E + se_ok * se_ok);
  st.Q_hat = st.conclusive > 0
                 ? static_cast<double>(st.errors) / static_cast<double>(st.conclusive)
                 : 0.0;
  st.se_Q = binomial_se(st.Q_hat, st.conclusive);
  return st;
}

ValidationReport validate_against_analytic(const SessionConfig& cfg) {
  ValidationReport r{};
  r.stats = simulate_session(cfg);
  const BseeChannel ch = channel_from_system(cfg.params, cfg.detector, cfg.L_km);
  r.E = ch.E;
  r.G = ch.G;
  r.Q = ch.G < 1.0 ? qber(ch) : 0.0;

  const double p_ok_true = 1.0 - ch.E - ch.G;
  const double p_ok_hat =
      r.stats.constructive > 0 ? static_cast<double>(r.stats.correct) /
                                     static_cast<double>(r.stats.constructive)
                               : 0.0;
  const double g_hat_raw = 1.0 - r.stats.E_hat - p_ok_hat;

  const double se_E = binomial_se(ch.E, r.stats.destructive);
  const double se_ok = binomial_se(p_ok_true, r.stats.constructive);
  const double se_G = std::sqrt(se_E * se_E + se_ok * se_ok);
  const double se_Q = binomial_se(r.Q, r.stats.conclusive);

  r.z_E = zscore(r.stats.E_hat, ch.E, se_E);
  r.z_G = zscore(g_hat_raw, ch.G, se_G);
  r.z_Q = zscore(r.stats.Q_hat, r.Q, se_Q);
  r.pass = std::fabs(r.z_E) < 3.0 && std::fabs(r.z_G) < 3.0 && std::fabs(r.z_Q) < 3.0;
  return r;
}

}  // namespace scw
