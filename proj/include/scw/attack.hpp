#pragma once

#include "scw/states.hpp"

namespace scw {

// Upper bound on Eve's information per sifted bit under the collective
// beam-splitting attack, in bits.
struct HolevoBound {
  double chi;
};

// Eve's reflected state: Alice's state scaled by sqrt(1 - eta(L)). Her beam
// splitter sits at the very beginning of the line, so the tap fraction is
// exactly 1 - eta(L).
SidebandState eve_state(const SystemParams& p, double phi_A, double L_km);
SidebandState eve_state(const SystemParams& p, Phase phi_A, double L_km);

// Basis rotation U = exp(i pi/2 sum_k k n_k): the k-th amplitude picks up
// i^k. Maps the {pi/2, 3pi/2} basis pair onto the {0, pi} pair.
SidebandState rotate_basis(const SidebandState& s);

// Overlap of Eve's states for Alice phases phi1, phi2 (closed form):
// psi = exp(-mu0 (1 - eta(L)) (1 - d^S_{00}(beta_minus))),
// cos(beta_minus) = cos^2 beta + sin^2 beta cos(phi1 - phi2).
double eve_overlap(const SystemParams& p, double phi1, double phi2, double L_km);
double eve_overlap(const SystemParams& p, Phase phi1, Phase phi2, double L_km);

// chi(A:E) = h((1 - psi(0, pi)) / 2), identical for B92 and BB84-OSD.
HolevoBound holevo_cbs(const SystemParams& p, double L_km);

// Same bound as a function of Eve's tap fraction eta_bar = 1 - eta(L).
HolevoBound holevo_cbs_at_tap(const SystemParams& p, double eta_bar);

}  // namespace scw
