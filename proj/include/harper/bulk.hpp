// Bulk spectral law of the circulant+diagonal family: AGM-based complete
// elliptic integrals, the closed-form limiting density
//
//   f2(x) = (4 / (pi^2 (1+|x|))) K((1-|x|)/(1+|x|)),   0 < |x| <= 1,
//
// (the law of (X+Y)/2 for independent arcsine X, Y; log-singular at 0),
// empirical spectral measures, quantile-form Wasserstein-2 distances, and
// histogram-vs-density tables.
#pragma once

#include <cstddef>
#include <vector>

#include "harper/common.hpp"

namespace harper {

// Arithmetic-geometric mean of a, b > 0, to relative accuracy ~1e-15.
double agm_mean(double a, double b);

// Complete elliptic integral K(m) = int_0^{pi/2} dt / sqrt(1 - m^2 sin^2 t),
// computed as pi / (2 AGM(1, sqrt(1-m^2))).  Requires 0 <= m < 1; m >= 1 is
// a singularity (domain_error).
double elliptic_k(double m);

// K expressed through the complementary modulus kc = sqrt(1 - m^2):
// pi / (2 AGM(1, kc)), for 0 < kc <= 1.  Used where m is so close to 1 that
// forming 1 - m^2 by subtraction would lose all precision.
double elliptic_k_from_complement(double kc);

// 1/(pi sqrt(1-x^2)) on (-1,1); exactly +-1 returns +infinity (flagged
// singularity); |x| > 1 returns 0.
double arcsine_density(double x);
double arcsine_cdf(double x);       // 1/2 + asin(x)/pi, clamped outside [-1,1]
double arcsine_quantile(double u);  // -cos(pi u), u in [0,1]

// f3(x) = int dt / sqrt((1-t^2)(1-(x-t)^2)) = (4/(2+|x|)) K((2-|x|)/(2+|x|))
// for 0 < |x| <= 2; even; x = 0 returns +infinity; |x| > 2 returns 0.
double f3_integral(double x);

// Limiting bulk density f2 (see file header); f2(x) = (2/pi^2) f3(2x).
// x = 0 returns +infinity (flagged singularity); |x| > 1 returns 0.
double f2_density(double x);

// Sorted eigenvalue atoms, each carrying mass 1/n.
struct EmpiricalMeasure {
  std::vector<double> atoms;  // ascending
  std::size_t n() const { return atoms.size(); }
};

// Sorts a copy of the values; rejects empty input.
EmpiricalMeasure make_empirical(std::vector<double> values);

// Eigenvalues of build_harper(n, a), ascending; all atoms lie in [-1, 1].
EmpiricalMeasure harper_spectrum_measure(std::size_t n, std::size_t a);

// The limiting law on [-1, 1] with a cached CDF grid: density evaluation,
// interpolated CDF, and quantiles by monotone cubic interpolation on the
// grid with a bisection fallback.  The grid is symmetric, avoids the
// log-singular point 0, and is geometrically refined toward 0 where the CDF
// is computed through a logarithmic change of variable.
class DensityCurve {
 public:
  // 2 * half_points grid nodes; the default gives the 1e4-point grid.
  static DensityCurve bulk(std::size_t half_points = 5000);

  double density(double x) const;   // f2
  double cdf(double x) const;
  double quantile(double u) const;  // u in [0, 1]

  const std::vector<double>& grid() const { return x_; }
  const std::vector<double>& cdf_values() const { return f_; }

 private:
  DensityCurve() = default;

  std::vector<double> x_;       // ascending grid
  std::vector<double> f_;       // CDF at the grid, strictly increasing
  std::vector<double> slope_;   // monotone cubic (PCHIP) slopes dF/dx
};

// Quantile-form Wasserstein-2 distances:
//   W2^2 = int_0^1 (Q_left(u) - Q_right(u))^2 du.
// Against a curve the integral uses a 16-point Gauss-Legendre rule on each
// atom's quantile interval (a grid of 16 n >= 10 n points); between two
// empirical measures it is evaluated exactly on the merged breakpoints.
double wasserstein2(const EmpiricalMeasure& emp, const DensityCurve& curve);
double wasserstein2(const EmpiricalMeasure& lhs, const EmpiricalMeasure& rhs);

// One histogram bin of the spectrum of build_harper(n, a) on [-1, 1],
// with the limiting density sampled at the bin midpoint.
struct HistogramRow {
  double bin_left = 0.0;
  double bin_right = 0.0;
  std::size_t count = 0;
  double empirical_density = 0.0;  // count / (n * bin width)
  double f2_at_midpoint = 0.0;
};

// Equal-width bins over [-1, 1]; requires n <= 1e4 (runtime guard) and
// bins >= 20.
std::vector<HistogramRow> figure1_data(std::size_t n, std::size_t a,
                                       std::size_t bins);

}  // namespace harper
