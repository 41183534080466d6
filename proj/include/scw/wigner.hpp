#pragma once

#include <vector>

namespace scw::wigner {

// Number of sidebands on each side of the carrier; the field has 2S+1
// spectral modes in total.
struct SidebandCount {
  int value;
  explicit SidebandCount(int s);
  bool operator==(const SidebandCount&) const = default;
};

// One row d^S_{0k}(beta) of the Wigner d-matrix, k = -S..S.
//
// Convention: the row is fixed by three anchors rather than by any
// particular textbook's sign choices:
//   d^S_{0k}(0) = delta_{0k},
//   d^S_{0,-k}(beta) = (-1)^k d^S_{0k}(beta),
//   d^S_{0k}(2m/(2S+1)) -> J_{-k}(m) for S -> infinity.
// Equivalently d^S_{0k}(beta) = sqrt((S-k)!/(S+k)!) P_S^k(cos beta) with
// Condon-Shortley associated Legendre functions.
class DFunctionRow {
 public:
  DFunctionRow(SidebandCount S, double beta, std::vector<double> values);

  int sidebands() const { return S_; }
  double beta() const { return beta_; }

  // k in [-S, S].
  double value(int k) const;

  // Flat storage, index k + S.
  const std::vector<double>& values() const { return values_; }

 private:
  int S_;
  double beta_;
  std::vector<double> values_;
};

// beta = 2m/(2S+1). Throws for negative or non-finite modulation index.
double beta_from_modulation(double m, SidebandCount S);

// Exact d^S_{0k}(beta) for all k, beta in [0, pi]. Stable for S up to a
// few thousand; intermediate overflow is handled internally.
DFunctionRow d_row(SidebandCount S, double beta);

// d^S_{00}(beta) = P_S(cos beta), the fast path used by the intensity and
// Holevo formulas.
double d00(SidebandCount S, double beta);

// Bessel function of the first kind, n >= 0, |x| <= 50.
double bessel_j(int n, double x);

// J_0(x)..J_nmax(x) in one downward pass.
std::vector<double> bessel_j_row(int n_max, double x);

}  // namespace scw::wigner
