#pragma once

#include "scw/detection.hpp"
#include "scw/states.hpp"

namespace scw {

// Binary symmetric error-and-erasure channel between Alice and Bob:
// E is the probability of a flipped conclusive bit, G the probability of an
// inconclusive window. The QBER is Q = E / (1 - G).
struct BseeChannel {
  double E;
  double G;
  bool operator==(const BseeChannel&) const = default;
};

// E and G from the click probabilities at the two relevant phase
// differences: a click at pi + delta_phi is an error, a click at delta_phi a
// correct bit. Identical for B92 and BB84-OSD.
BseeChannel channel_from_system(const SystemParams& p, const DetectorModel& d, double L_km);

// Q = E / (1 - G); throws std::domain_error at G = 1 (no conclusive events).
double qber(const BseeChannel& c);

// Channel capacity, bits per symbol:
// C = 1 - G - (1-G) log2(1-G) + E log2 E + (1-G-E) log2(1-G-E),
// equal to (1 - h(Q)) (1 - G).
double capacity(const BseeChannel& c);

}  // namespace scw
