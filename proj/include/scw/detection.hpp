#pragma once

#include <optional>
#include <string_view>

namespace scw {

// Single-photon detector: quantum efficiency, dark count rate, and gating.
// An absent gate_dt means continuous operation (the gate spans the whole
// window T).
struct DetectorModel {
  double eta_D = 0.2;
  double gamma_dark = 20.0;        // Hz
  std::optional<double> gate_dt;   // s

  void validate(double T) const;   // throws std::invalid_argument
  bool operator==(const DetectorModel&) const = default;
};

DetectorModel snspd_detector();  // eta_D = 0.2,   20 Hz,  continuous
DetectorModel apd_detector();    // eta_D = 0.125, 400 Hz, gated 4 ns

// Preset lookup for the CLI ("snspd" / "apd").
std::optional<DetectorModel> detector_by_name(std::string_view name);

struct ClickProbability {
  double value;
  bool clamped;  // the n_ph << 1 validity condition was violated
};

// P = (eta_D n_ph / T + gamma_dark) * dt, clamped to 1.
ClickProbability click_probability(double n_ph, const DetectorModel& d, double T);

}  // namespace scw
