#include "scw/bsee.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scw {

namespace {

// 0 log2 0 := 0
double plog2p(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

void check_channel(const BseeChannel& c) {
  if (!(c.E >= 0.0) || !(c.G >= 0.0) || c.E + c.G > 1.0 + 1e-12)
    throw std::logic_error("BseeChannel: invariants E >= 0, G >= 0, E + G <= 1 violated");
}

}  // namespace

BseeChannel channel_from_system(const SystemParams& p, const DetectorModel& d, double L_km) {
  const double n_err = mean_photons_at_phase_diff(p, std::numbers::pi + p.delta_phi, L_km);
  const double n_sig = mean_photons_at_phase_diff(p, p.delta_phi, L_km);
  const double E = click_probability(n_err, d, p.T).value;
  const double p_conclusive_ok = click_probability(n_sig, d, p.T).value;
  double G = 1.0 - E - p_conclusive_ok;
  if (G < 0.0 && G >= -1e-12) G = 0.0;  // rounding at the E + P = 1 boundary
  BseeChannel c{E, G};
  check_channel(c);
  return c;
}

double qber(const BseeChannel& c) {
  check_channel(c);
  if (c.G >= 1.0) throw std::domain_error("qber: undefined, no conclusive events (G = 1)");
  return c.E / (1.0 - c.G);
}

double capacity(const BseeChannel& c) {
  check_channel(c);
  const double g1 = 1.0 - c.G;
  return g1 - plog2p(g1) + plog2p(c.E) + plog2p(g1 - c.E);
}

}  // namespace scw
