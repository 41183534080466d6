#pragma once

#include <string>
#include <vector>

#include "scw/config.hpp"
#include "scw/keyrate.hpp"
#include "scw/montecarlo.hpp"

namespace scw::cli {

// One sweep sample, always carrying both coordinates (linked by xi).
struct SweepPoint {
  double loss_dB;
  double L_km;
};

std::vector<SweepPoint> sweep_points(const RunConfig& cfg);

// CSV with at least 9 significant digits per number; deterministic for a
// fixed config and seed.
std::string csv_number(double v);

// Rows (loss_dB, L_km, E, G, Q) over the sweep.
std::string cmd_qber_curve(const RunConfig& cfg);

// Rows (loss_dB, L_km, Q, G, chi, K...) with one K column per requested
// protocol.
std::string cmd_keyrate_curve(const RunConfig& cfg);

// Rows (loss_dB, L_km, mu_star, m_star, K_star, status).
std::string cmd_optimal_mu(const RunConfig& cfg);

struct Report {
  std::string text;
  std::string csv;
  bool pass = true;
};

// Monte Carlo channel estimates against the analytic values, 3-sigma gate.
Report cmd_validate(const RunConfig& cfg);

// Count-rate comparison of two-detector BB84 against BB84-OSD over the sweep.
Report cmd_compare_bb84(const RunConfig& cfg);

}  // namespace scw::cli
