#include "scw/detection.hpp"

#include <cmath>
#include <stdexcept>

namespace scw {

void DetectorModel::validate(double T) const {
  if (!(eta_D > 0.0) || eta_D > 1.0)
    throw std::invalid_argument("DetectorModel: eta_D must lie in (0, 1]");
  if (!(gamma_dark >= 0.0) || !std::isfinite(gamma_dark))
    throw std::invalid_argument("DetectorModel: gamma_dark must be finite and >= 0");
  if (gate_dt && (!(*gate_dt > 0.0) || *gate_dt > T))
    throw std::invalid_argument("DetectorModel: gate must lie in (0, T]");
}

DetectorModel snspd_detector() { return {0.2, 20.0, std::nullopt}; }

DetectorModel apd_detector() { return {0.125, 400.0, 4e-9}; }

std::optional<DetectorModel> detector_by_name(std::string_view name) {
  if (name == "snspd") return snspd_detector();
  if (name == "apd") return apd_detector();
  return std::nullopt;
}

ClickProbability click_probability(double n_ph, const DetectorModel& d, double T) {
  if (!(n_ph >= 0.0) || !std::isfinite(n_ph))
    throw std::invalid_argument("click_probability: n_ph must be finite and >= 0");
  if (!(T > 0.0)) throw std::invalid_argument("click_probability: T must be positive");
  d.validate(T);
  const double dt = d.gate_dt.value_or(T);
  const double p = (d.eta_D * n_ph / T + d.gamma_dark) * dt;
  if (p > 1.0) return {1.0, true};
  return {p, false};
}

}  // namespace scw
