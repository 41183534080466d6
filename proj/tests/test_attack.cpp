#include <doctest.h>

#include "testutil.hpp"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "scw/attack.hpp"
#include "scw/keyrate.hpp"

using namespace scw;

namespace {
constexpr double kPi = std::numbers::pi;

// Loss so large that eta(L) underflows: Eve holds the full beam.
constexpr double kFullTapKm = 20000.0;
}  // namespace

TEST_CASE("eve_state: nothing at L = 0, everything in the far limit") {
  const SystemParams p;
  const SidebandState nothing = eve_state(p, Phase(0.0), 0.0);
  CHECK(nothing.total_photons() == 0.0);

  const SidebandState all = eve_state(p, Phase(0.0), kFullTapKm);
  const SidebandState alice = alice_state(p, Phase(0.0));
  CHECK(all.total_photons() == doctest::Approx(alice.total_photons()).epsilon(1e-12));

  for (double L : {5.0, 60.0, 150.0}) {
    const double expect = p.mu0 * (1.0 - channel_transmittance(p.xi, L));
    CHECK(eve_state(p, Phase(0.0), L).total_photons() ==
          doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("rotate_basis: squares to (-1)^k and preserves overlaps") {
  const SystemParams p;
  const SidebandState s = eve_state(p, Phase(kPi / 2), 40.0);
  const SidebandState twice = rotate_basis(rotate_basis(s));
  for (int k = -5; k <= 5; ++k) {
    const auto expect = (k % 2 == 0 ? 1.0 : -1.0) * s.amp(k);
    CHECK(std::abs(twice.amp(k) - expect) < 1e-15);
  }

  const SidebandState a = eve_state(p, Phase(0.0), 40.0);
  const SidebandState b = eve_state(p, Phase(kPi), 40.0);
  CHECK(std::abs(overlap(rotate_basis(a), rotate_basis(b))) ==
        doctest::Approx(std::abs(overlap(a, b))).epsilon(1e-12));
}

TEST_CASE("rotate_basis maps the second BB84 basis onto the first") {
  const SystemParams p;
  const double L = 60.0;
  // U|psi_E(pi/2)> has the amplitudes of |psi_E(0)>
  const SidebandState rotated = rotate_basis(eve_state(p, Phase(kPi / 2), L));
  const SidebandState ref = eve_state(p, Phase(0.0), L);
  for (int k = -6; k <= 6; ++k) CHECK(std::abs(rotated.amp(k) - ref.amp(k)) < 1e-12);
  // pairwise overlap geometry is that of the B92 pair
  const double pair_b92 = std::abs(overlap(eve_state(p, Phase(0.0), L),
                                           eve_state(p, Phase(kPi), L)));
  const double pair_rot = std::abs(overlap(rotate_basis(eve_state(p, Phase(kPi / 2), L)),
                                           rotate_basis(eve_state(p, Phase(3 * kPi / 2), L))));
  CHECK_NEAR(pair_rot, pair_b92, 1e-10);
}

TEST_CASE("eve_overlap: closed form") {
  const SystemParams p;
  SUBCASE("identical phases overlap to exactly 1") {
    for (double L : {0.0, 30.0, 200.0})
      CHECK(eve_overlap(p, Phase(0.0), Phase(0.0), L) == 1.0);
  }
  SUBCASE("opposite phases, full tap, against the chained oracle") {
    const double j0 = static_cast<double>(oracles::bessel_series(0, 2.0 * p.m));
    const double expect = std::exp(-p.mu0 * (1.0 - j0));
    const double got = eve_overlap(p, Phase(0.0), Phase(kPi), kFullTapKm);
    CHECK_NEAR(got, expect, 1e-12);
    CHECK_NEAR(got, 0.67247, 1e-5);
  }
}

TEST_CASE("eve_overlap equals the explicit mode-sum product") {
  for (int S : {8, 64, 512}) {
    SystemParams p;
    p.mode = EvalMode::Exact;
    p.S = wigner::SidebandCount{S};
    p.m = 0.4;
    p.mu0 = 2.5;
    for (double L : {15.0, 80.0}) {
      for (int i : {1, 2, 3}) {
        const Phase a = Phase::from_index(0);
        const Phase b = Phase::from_index(i);
        const double closed = eve_overlap(p, a, b, L);
        const auto modal = overlap(eve_state(p, a, L), eve_state(p, b, L));
        CHECK(std::abs(modal - std::complex<double>(closed, 0.0)) < 1e-10);
      }
    }
  }
}

TEST_CASE("holevo_cbs: limits and the operating-point value") {
  SystemParams p;
  CHECK(holevo_cbs(p, 0.0).chi == 0.0);

  // almost-orthogonal states: chi -> 1
  SystemParams strong = p;
  strong.mu0 = 1e6;
  CHECK(holevo_cbs(strong, kFullTapKm).chi == doctest::Approx(1.0).epsilon(1e-12));

  // full-tap operating point against the chained oracle
  const double j0 = static_cast<double>(oracles::bessel_series(0, 0.638));
  const double lambda = 0.5 * (1.0 - std::exp(-4.0 * (1.0 - j0)));
  CHECK_NEAR(holevo_cbs_at_tap(p, 1.0).chi, oracles::binary_entropy_ref(lambda), 1e-12);
  CHECK_NEAR(holevo_cbs_at_tap(p, 1.0).chi, 0.6433, 2e-3);
}

TEST_CASE("holevo_cbs: strictly increasing in loss and in mu0, zero only when it must be") {
  const SystemParams p;
  double prev = -1.0;
  for (double loss = 0.0; loss <= 60.0; loss += 5.0) {
    const double chi = holevo_cbs(p, loss / p.xi).chi;
    CHECK(chi > prev);
    prev = chi;
  }
  prev = -1.0;
  for (double mu0 : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    SystemParams q = p;
    q.mu0 = mu0;
    const double chi = holevo_cbs_at_tap(q, 0.7).chi;
    CHECK(chi > prev);
    prev = chi;
  }
  SystemParams nosig = p;
  nosig.m = 0.0;
  CHECK(holevo_cbs(nosig, 300.0).chi == 0.0);
  CHECK(holevo_cbs_at_tap(p, 0.0).chi == 0.0);
}

TEST_CASE("two-pure-state mixture: eigenvalues (1 +- |psi|)/2 reproduce the entropy") {
  for (double psi : {0.0, 0.3, 0.672465, 0.95, 1.0}) {
    const double lambda = 0.5 * (1.0 - psi);
    CHECK_NEAR(binary_entropy(lambda), oracles::two_state_mixture_entropy(psi), 1e-12);
  }
}
