#include <doctest.h>

#include <stdexcept>

#include "scw/detection.hpp"

using namespace scw;

TEST_CASE("detector presets carry the reference parameters") {
  const DetectorModel s = snspd_detector();
  CHECK(s.eta_D == 0.2);
  CHECK(s.gamma_dark == 20.0);
  CHECK(!s.gate_dt.has_value());
  const DetectorModel a = apd_detector();
  CHECK(a.eta_D == 0.125);
  CHECK(a.gamma_dark == 400.0);
  REQUIRE(a.gate_dt.has_value());
  CHECK(*a.gate_dt == 4e-9);
  CHECK(detector_by_name("snspd") == s);
  CHECK(detector_by_name("apd") == a);
  CHECK(!detector_by_name("pmt").has_value());
}

TEST_CASE("click_probability: dark-count-only windows") {
  const double T = 1e-8;
  CHECK(click_probability(0.0, snspd_detector(), T).value ==
        doctest::Approx(2e-7).epsilon(1e-14));
  CHECK(click_probability(0.0, apd_detector(), T).value ==
        doctest::Approx(1.6e-6).epsilon(1e-14));
}

TEST_CASE("click_probability: signal term, direct arithmetic") {
  const double T = 1e-8;
  const auto p = click_probability(0.1, snspd_detector(), T);
  CHECK(p.value == doctest::Approx(0.0200002).epsilon(1e-12));
  CHECK(!p.clamped);
}

TEST_CASE("click_probability: continuous detector reduces to eta_D n + gamma T") {
  const double T = 1e-8;
  for (double n : {0.0, 0.01, 0.3}) {
    CHECK(click_probability(n, snspd_detector(), T).value ==
          doctest::Approx(0.2 * n + 20.0 * T).epsilon(1e-14));
  }
}

TEST_CASE("click_probability: monotone in n_ph, bounded, clamped with a flag") {
  const double T = 1e-8;
  double prev = -1.0;
  for (double n : {0.0, 1e-6, 1e-3, 0.1, 1.0, 4.0, 10.0}) {
    const auto p = click_probability(n, apd_detector(), T);
    CHECK(p.value >= prev);
    CHECK(p.value >= 0.0);
    CHECK(p.value <= 1.0);
    prev = p.value;
  }
  const auto clamped = click_probability(1e3, snspd_detector(), T);
  CHECK(clamped.value == 1.0);
  CHECK(clamped.clamped);
}

TEST_CASE("click_probability: validation") {
  CHECK_THROWS_AS(click_probability(-1e-9, snspd_detector(), 1e-8), std::invalid_argument);
  DetectorModel bad = apd_detector();
  bad.gate_dt = 2e-8;  // longer than the window
  CHECK_THROWS_AS(click_probability(0.0, bad, 1e-8), std::invalid_argument);
  bad = snspd_detector();
  bad.eta_D = 0.0;
  CHECK_THROWS_AS(click_probability(0.0, bad, 1e-8), std::invalid_argument);
}
