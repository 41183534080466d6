#include <doctest.h>

#include "testutil.hpp"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "scw/wigner.hpp"

using scw::wigner::SidebandCount;
using scw::wigner::bessel_j;
using scw::wigner::bessel_j_row;
using scw::wigner::beta_from_modulation;
using scw::wigner::d00;
using scw::wigner::d_row;

namespace {
constexpr double kPi = std::numbers::pi;

double row_norm2(const scw::wigner::DFunctionRow& r) {
  long double s = 0.0L;
  for (double v : r.values()) s += static_cast<long double>(v) * v;
  return static_cast<double>(s);
}
}  // namespace

TEST_CASE("beta_from_modulation") {
  CHECK(beta_from_modulation(0.0, SidebandCount{100}) == 0.0);
  CHECK(beta_from_modulation(0.319, SidebandCount{1000}) ==
        doctest::Approx(0.638 / 2001.0).epsilon(1e-15));
  CHECK(beta_from_modulation(0.319, SidebandCount{10}) ==
        doctest::Approx(0.638 / 21.0).epsilon(1e-15));
  CHECK_THROWS_AS(beta_from_modulation(-0.1, SidebandCount{10}), std::invalid_argument);
  CHECK_THROWS_AS(beta_from_modulation(std::nan(""), SidebandCount{10}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SidebandCount{0}, std::invalid_argument);
}

TEST_CASE("d_row: identity rotation is the exact Kronecker delta") {
  for (int S : {1, 5, 100}) {
    const auto row = d_row(SidebandCount{S}, 0.0);
    for (int k = -S; k <= S; ++k) CHECK(row.value(k) == (k == 0 ? 1.0 : 0.0));
  }
}

TEST_CASE("d_row: S = 1 carrier element is cos(beta)") {
  for (double beta : {0.1, 0.7, 1.3, 2.9}) {
    const auto row = d_row(SidebandCount{1}, beta);
    CHECK(row.value(0) == doctest::Approx(std::cos(beta)).epsilon(1e-14));
  }
}

TEST_CASE("d_row: S = 5, beta = 0.3 against the frozen factorial-sum values") {
  // Generated from the explicit Wigner sum in long double.
  const double expected[11] = {
      1.11811429799732112e-03,  1.14302409450359574e-02,  6.88418196160231193e-02,
      2.62664280374887551e-01,  5.78140918097223742e-01,  4.28694431783646249e-01,
      -5.78140918097223742e-01, 2.62664280374887551e-01,  -6.88418196160231193e-02,
      1.14302409450359574e-02,  -1.11811429799732112e-03,
  };
  const auto row = d_row(SidebandCount{5}, 0.3);
  for (int k = -5; k <= 5; ++k)
    CHECK_NEAR(row.value(k), expected[k + 5], 1e-12);
}

TEST_CASE("d_row matches the brute-force oracle for S <= 8") {
  for (int S = 1; S <= 8; ++S) {
    for (double beta : {0.01, 0.3, 1.0, 2.0, kPi - 0.1}) {
      const auto row = d_row(SidebandCount{S}, beta);
      const auto ref = oracles::wigner_row(S, beta);
      for (int k = -S; k <= S; ++k)
        CHECK_NEAR(row.value(k), ref[k + S], 1e-9);
    }
  }
}

TEST_CASE("d_row: unitarity and parity over a wide (S, beta) grid") {
  for (int S : {1, 8, 64, 512, 2048}) {
    for (double beta : {0.01, 0.1, 0.5, 1.0, 2.0, 3.0}) {
      const auto row = d_row(SidebandCount{S}, beta);
      CHECK_NEAR(row_norm2(row), 1.0, 1e-10);
      for (int k = 1; k <= S; k += std::max(1, S / 7))
        CHECK_NEAR(row.value(-k), (k % 2 == 0 ? 1.0 : -1.0) * row.value(k), 1e-10);
    }
  }
}

TEST_CASE("d00 equals the d_row carrier entry") {
  for (int S : {8, 64, 512, 2048}) {
    for (double beta : {0.01, 0.1, 0.5, 1.0, 2.5}) {
      const auto row = d_row(SidebandCount{S}, beta);
      CHECK_NEAR(d00(SidebandCount{S}, beta), row.value(0), 1e-12);
    }
  }
}

TEST_CASE("d00 endpoints") {
  CHECK(d00(SidebandCount{100}, 0.0) == 1.0);
  CHECK(d00(SidebandCount{100}, kPi) == 1.0);  // P_100(-1) = 1, S even
  CHECK(d00(SidebandCount{101}, kPi) == -1.0);
  CHECK_THROWS_AS(d00(SidebandCount{100}, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(d00(SidebandCount{100}, 3.2), std::invalid_argument);
}

TEST_CASE("d00 approaches J0(m) at beta = 2m/(2S+1)") {
  const SidebandCount S{1000};
  for (double m : {0.1, 0.319, 0.5, 1.0}) {
    const double d = d00(S, beta_from_modulation(m, S));
    const double j0 = static_cast<double>(oracles::bessel_series(0, m));
    CHECK(std::fabs(d - j0) < 1e-3);
  }
  CHECK_NEAR(d00(S, beta_from_modulation(0.319, S)), static_cast<double>(oracles::bessel_series(0, 0.319)), 1e-3);
}

TEST_CASE("d-row asymptotics: d^S_{0k} -> J_{-k}(m), improving with S") {
  for (double m : {0.5, 2.0}) {
    double prev_err = 1e9;
    for (int S : {200, 500, 1000}) {
      const SidebandCount sc{S};
      const auto row = d_row(sc, beta_from_modulation(m, sc));
      double err = 0.0;
      for (int k = -5; k <= 5; ++k) {
        const double jk = static_cast<double>(oracles::bessel_series(std::abs(k), m));
        // J_{-k}(m): positive order for k <= 0, (-1)^k J_k for k > 0
        const double target = (k > 0 && k % 2 == 1) ? -jk : jk;
        err = std::max(err, std::fabs(row.value(k) - target));
      }
      CHECK(err < prev_err);
      prev_err = err;
      if (S == 1000) CHECK(err < 1e-2);
    }
  }
}

TEST_CASE("bessel_j basics") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(bessel_j(5, 0.0) == 0.0);
  // direct arithmetic example
  CHECK_NEAR(bessel_j(0, 0.319), 0.974722, 1e-6);
  // frozen series values
  CHECK_NEAR(bessel_j(0, 0.319), 0.97472109494286411, 1e-14);
  CHECK_NEAR(bessel_j(1, 0.5), 0.24226845767487389, 1e-14);
  CHECK_NEAR(bessel_j(0, 0.638), 0.90079873941957653, 1e-14);
  CHECK_THROWS_AS(bessel_j(0, 50.5), std::invalid_argument);
  CHECK_THROWS_AS(bessel_j(-1, 1.0), std::invalid_argument);
}

TEST_CASE("bessel_j against the power series on a grid") {
  for (int n = 0; n <= 20; ++n) {
    for (double x : {0.05, 0.3, 1.0, 2.5, 5.0, 10.0}) {
      const double ref = static_cast<double>(oracles::bessel_series(n, x));
      CHECK_NEAR(bessel_j(n, x), ref, 1e-10);
    }
  }
}

TEST_CASE("bessel_j: parity in x and the sum rule") {
  for (double x : {0.5, 3.0, 17.0, 49.0}) {
    for (int n : {0, 1, 2, 7}) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      CHECK(bessel_j(n, -x) == doctest::Approx(sign * bessel_j(n, x)).epsilon(1e-14));
    }
    const auto row = bessel_j_row(120, x);
    long double sum = row[0];
    for (std::size_t k = 2; k < row.size(); k += 2) sum += 2.0L * row[k];
    CHECK_NEAR(static_cast<double>(sum), 1.0, 1e-12);
  }
}

TEST_CASE("bessel_j_row: huge orders underflow to zero") {
  const auto row = bessel_j_row(2048, 0.319);
  CHECK_NEAR(row[0], 0.974721094942864, 1e-13);
  CHECK(row[500] == 0.0);
  CHECK(row[2048] == 0.0);
}
