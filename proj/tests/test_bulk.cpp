#include "harper/bulk.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "harper/eigen.hpp"
#include "harper/matrix.hpp"
#include "harper/rng.hpp"
#include "oracles.hpp"

using namespace harper;

namespace {

// Independent oracle for K(m): (pi/2) * 2F1(1/2, 1/2; 1; m^2) by its series,
// term ratio ((2j+1)/(2j+2))^2 m^2.  Converges usefully for m <= 0.6.
double elliptic_series(double m) {
  const double z = m * m;
  double coeff = 1.0, power = 1.0, total = 1.0;
  for (int j = 0; j < 4000; ++j) {
    const double r = (2.0 * j + 1.0) / (2.0 * j + 2.0);
    coeff *= r * r;
    power *= z;
    const double term = coeff * power;
    total += term;
    if (term < 1e-18 * total) break;
  }
  return pi / 2.0 * total;
}

// 99th percentile of the chi-square distribution with 49 degrees of freedom.
constexpr double chi_square_99_49dof = 74.92;

}  // namespace

TEST_CASE("complete elliptic integral: exact points, series, quadrature") {
  CHECK(elliptic_k(0.0) == doctest::Approx(pi / 2).epsilon(1e-15));

  // Monotone divergence toward the modulus-1 singularity.
  CHECK(elliptic_k(0.999) > elliptic_k(0.99));
  CHECK(elliptic_k(0.99) > elliptic_k(0.9));
  CHECK(elliptic_k(0.9) > elliptic_k(0.5));
  CHECK(elliptic_k(0.5) > elliptic_k(0.0));

  for (double m : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6}) {
    CAPTURE(m);
    CHECK(std::abs(elliptic_k(m) - elliptic_series(m)) < 1e-10);
  }

  for (double m : {0.3, 0.5, 0.9}) {
    const double quad = oracle::integrate(
        [m](double t) {
          const double s = std::sin(t);
          return 1.0 / std::sqrt(1.0 - m * m * s * s);
        },
        0.0, pi / 2);
    CAPTURE(m);
    CHECK(std::abs(elliptic_k(m) - quad) < 1e-9);
  }

  CHECK_THROWS_AS(elliptic_k(1.0), std::domain_error);
  CHECK_THROWS_AS(elliptic_k(1.5), std::domain_error);
  CHECK_THROWS_AS(elliptic_k(-0.1), std::domain_error);
  CHECK_THROWS_AS(agm_mean(0.0, 1.0), std::domain_error);
  CHECK(agm_mean(3.0, 3.0) == doctest::Approx(3.0));
}

TEST_CASE("arcsine law: density, cdf, quantile, sampling fit") {
  CHECK(arcsine_density(0.0) == doctest::Approx(1.0 / pi).epsilon(1e-15));
  CHECK(std::isinf(arcsine_density(1.0)));
  CHECK(std::isinf(arcsine_density(-1.0)));
  CHECK(arcsine_density(1.5) == 0.0);
  CHECK(arcsine_density(-2.0) == 0.0);

  // Unit mass via the substitution x = sin(theta), which removes the
  // endpoint singularities; where sin(t) rounds to +-1 the integrand takes
  // its removable-limit value 1/pi.
  const double mass = oracle::integrate(
      [](double t) {
        const double s = std::sin(t);
        return std::abs(s) < 1.0 ? arcsine_density(s) * std::cos(t) : 1.0 / pi;
      },
      -pi / 2, pi / 2);
  CHECK(std::abs(mass - 1.0) < 1e-8);

  CHECK(arcsine_cdf(0.0) == doctest::Approx(0.5));
  CHECK(arcsine_cdf(-1.0) == 0.0);
  CHECK(arcsine_cdf(1.0) == 1.0);
  CHECK(arcsine_quantile(0.0) == doctest::Approx(-1.0));
  CHECK(arcsine_quantile(1.0) == doctest::Approx(1.0));
  for (double x : {-0.9, -0.3, 0.0, 0.4, 0.8})
    CHECK(arcsine_quantile(arcsine_cdf(x)) == doctest::Approx(x).epsilon(1e-12));
  CHECK_THROWS_AS(arcsine_quantile(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(arcsine_quantile(1.01), std::invalid_argument);

  // cos(2 pi a U) is arcsine-distributed for every integer a >= 1:
  // chi-square fit over 50 equal-probability bins at the 1% level.
  for (std::size_t a : {1u, 7u}) {
    CounterRng rng(314, a);
    const std::size_t samples = 1000000;
    std::vector<std::size_t> counts(50, 0);
    for (std::size_t i = 0; i < samples; ++i) {
      const double x =
          std::cos(2.0 * pi * static_cast<double>(a) * rng.next_unit());
      const double u = arcsine_cdf(x);
      const auto bin = std::min<std::size_t>(
          49, static_cast<std::size_t>(u * 50.0));
      ++counts[bin];
    }
    const double expected = static_cast<double>(samples) / 50.0;
    double chi = 0.0;
    for (std::size_t c : counts) {
      const double d = static_cast<double>(c) - expected;
      chi += d * d / expected;
    }
    CAPTURE(a);
    CAPTURE(chi);
    CHECK(chi < chi_square_99_49dof);
  }
}

TEST_CASE("f3: boundary value, parity, defining-integral quadrature") {
  CHECK(f3_integral(2.0) == doctest::Approx(pi / 2).epsilon(1e-14));
  CHECK(f3_integral(-2.0) == doctest::Approx(pi / 2).epsilon(1e-14));
  CHECK(std::isinf(f3_integral(0.0)));
  CHECK(f3_integral(2.5) == 0.0);
  for (double x : {0.2, 0.7, 1.3, 1.9})
    CHECK(f3_integral(x) == doctest::Approx(f3_integral(-x)).epsilon(1e-15));

  // Defining integral at x = 1: int_0^1 dt / sqrt((1-t^2)(1-(1-t)^2)).
  // The substitution t = sin^2(phi) absorbs both square-root endpoints:
  //   2 int_0^{pi/2} dphi / sqrt((1+sin^2 phi)(2-sin^2 phi)).
  const double quad = oracle::integrate(
      [](double phi) {
        const double s2 = std::sin(phi) * std::sin(phi);
        return 2.0 / std::sqrt((1.0 + s2) * (2.0 - s2));
      },
      0.0, pi / 2);
  CHECK(std::abs(f3_integral(1.0) - quad) < 1e-7);
}

TEST_CASE("f2: figure anchor, symmetry, relation to f3, unit mass") {
  CHECK(std::abs(f2_density(0.99) - 0.32) < 0.02);
  CHECK(std::abs(f2_density(-0.99) - 0.32) < 0.02);
  CHECK(std::isinf(f2_density(0.0)));
  CHECK(f2_density(1.2) == 0.0);
  // At the support edge the formula gives 1/pi (the modulus degenerates
  // to 0), not 0.
  CHECK(f2_density(1.0) == doctest::Approx(1.0 / pi).epsilon(1e-14));

  for (double x : {0.05, 0.33, 0.61, 0.97}) {
    CHECK(f2_density(x) == doctest::Approx(f2_density(-x)).epsilon(1e-15));
    CHECK(f2_density(x) ==
          doctest::Approx(2.0 / (pi * pi) * f3_integral(2.0 * x))
              .epsilon(1e-10));
  }

  // Unit mass, integrating in s = log x to tame the singularity at 0:
  // 2 int_{-inf}^0 f2(e^s) e^s ds, truncated where the mass is ~1e-16.
  const double mass = 2.0 * oracle::integrate(
                                [](double s) {
                                  const double x = std::exp(s);
                                  return f2_density(x) * x;
                                },
                                -40.0, 0.0);
  CHECK(std::abs(mass - 1.0) < 1e-8);
}

TEST_CASE("density curve: grid, cdf/quantile inversion, symmetry") {
  const DensityCurve curve = DensityCurve::bulk();

  const auto& grid = curve.grid();
  const auto& cdf = curve.cdf_values();
  REQUIRE(grid.size() == 10000);
  REQUIRE(cdf.size() == 10000);
  CHECK(grid.front() == doctest::Approx(-1.0));
  CHECK(grid.back() == doctest::Approx(1.0));
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    REQUIRE(grid[i] < grid[i + 1]);
    REQUIRE(cdf[i] < cdf[i + 1]);
  }
  CHECK(std::none_of(grid.begin(), grid.end(),
                     [](double x) { return x == 0.0; }));

  // Total curve mass is the quadrature-built integral of f2.
  CHECK(std::abs((cdf.back() - cdf.front()) - 1.0) < 1e-6);

  CHECK(curve.density(0.5) == f2_density(0.5));

  for (double x : {-0.99, -0.7, -0.2, 0.3, 0.85})
    CHECK(curve.quantile(curve.cdf(x)) == doctest::Approx(x).epsilon(1e-9));
  for (double u : {0.01, 0.2, 0.499, 0.73, 0.97})
    CHECK(curve.cdf(curve.quantile(u)) == doctest::Approx(u).epsilon(1e-9));

  CHECK(std::abs(curve.quantile(0.5)) < 1e-11);  // median at the singular point
  for (double u : {0.05, 0.2, 0.35})
    CHECK(curve.quantile(u) ==
          doctest::Approx(-curve.quantile(1.0 - u)).epsilon(1e-9));
  CHECK(curve.quantile(0.0) == doctest::Approx(-1.0));
  CHECK(curve.quantile(1.0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(curve.quantile(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(curve.quantile(1.1), std::invalid_argument);
  CHECK_THROWS_AS(DensityCurve::bulk(8), std::invalid_argument);
}

TEST_CASE("monte-carlo convolution: (X+Y)/2 of arcsine pairs fits f2") {
  const DensityCurve curve = DensityCurve::bulk();
  CounterRng rng(2718, 0);
  const std::size_t samples = 400000;
  std::vector<std::size_t> counts(50, 0);
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = std::cos(2.0 * pi * rng.next_unit());
    const double y = std::cos(2.0 * pi * rng.next_unit());
    const double u = curve.cdf(0.5 * (x + y));
    const auto bin =
        std::min<std::size_t>(49, static_cast<std::size_t>(u * 50.0));
    ++counts[bin];
  }
  const double expected = static_cast<double>(samples) / 50.0;
  double chi = 0.0;
  for (std::size_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    chi += d * d / expected;
  }
  CAPTURE(chi);
  CHECK(chi < chi_square_99_49dof);
}

TEST_CASE("empirical measures and wasserstein-2 hand values") {
  CHECK_THROWS_AS(make_empirical({}), std::invalid_argument);
  const auto sorted = make_empirical({0.5, -0.5, 0.0});
  CHECK(sorted.atoms == std::vector<double>{-0.5, 0.0, 0.5});

  const auto measure = harper_spectrum_measure(64, 1);
  REQUIRE(measure.n() == 64);
  CHECK(std::is_sorted(measure.atoms.begin(), measure.atoms.end()));
  CHECK(measure.atoms.front() >= -1.0 - 1e-9);
  CHECK(measure.atoms.back() <= 1.0 + 1e-9);

  const auto delta0 = make_empirical({0.0});
  const auto delta1 = make_empirical({1.0});
  CHECK(wasserstein2(delta0, delta0) == 0.0);
  CHECK(wasserstein2(delta0, delta1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(wasserstein2(measure, measure) == 0.0);

  // {0} against {0, 1}: the difference is 1 on half the quantile interval.
  CHECK(wasserstein2(delta0, make_empirical({0.0, 1.0})) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  // Different atom counts exercise the merged breakpoints.
  CHECK(wasserstein2(make_empirical({-1.0, 1.0}),
                     make_empirical({-1.0, 0.0, 1.0})) ==
        doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("wasserstein-2 against the curve: self-samples and spectra") {
  const DensityCurve curve = DensityCurve::bulk();

  // A measure sampled from the curve's own quantiles is W2-close to it.
  {
    const std::size_t n = 2000;
    std::vector<double> atoms(n);
    for (std::size_t i = 0; i < n; ++i)
      atoms[i] = curve.quantile((static_cast<double>(i) + 0.5) /
                                static_cast<double>(n));
    const double w = wasserstein2(make_empirical(std::move(atoms)), curve);
    CAPTURE(w);
    CHECK(w < 2e-3);
  }

  // Spectral convergence to the limit law: decreasing distance along
  // doubling sizes, ending below the acceptance threshold.
  std::vector<double> distances;
  for (std::size_t n : {512u, 1024u, 2048u, 4096u}) {
    distances.push_back(wasserstein2(harper_spectrum_measure(n, 1), curve));
    CAPTURE(n);
    CAPTURE(distances.back());
  }
  for (std::size_t i = 0; i + 1 < distances.size(); ++i)
    CHECK(distances[i + 1] < distances[i]);
  CHECK(distances.back() <= 0.05);

  // Bulk law does not depend on the frequency parameter a.
  const double cross = wasserstein2(harper_spectrum_measure(512, 1),
                                    harper_spectrum_measure(512, 7));
  CAPTURE(cross);
  CHECK(cross <= 0.05);

  CHECK_THROWS_AS(wasserstein2(EmpiricalMeasure{}, curve),
                  std::invalid_argument);
}

TEST_CASE("figure data: counts, densities, band agreement, guards") {
  const std::size_t n = 2048, bins = 50;
  const auto rows = figure1_data(n, 1, bins);
  REQUIRE(rows.size() == bins);

  std::size_t total = 0;
  for (std::size_t k = 0; k < bins; ++k) {
    total += rows[k].count;
    CHECK(rows[k].bin_left ==
          doctest::Approx(-1.0 + 2.0 * static_cast<double>(k) / bins));
    CHECK(rows[k].bin_right ==
          doctest::Approx(-1.0 + 2.0 * static_cast<double>(k + 1) / bins));
    const double mid = 0.5 * (rows[k].bin_left + rows[k].bin_right);
    CHECK(rows[k].f2_at_midpoint ==
          doctest::Approx(f2_density(mid)).epsilon(1e-13));
    CHECK(rows[k].empirical_density ==
          doctest::Approx(static_cast<double>(rows[k].count) /
                          (static_cast<double>(n) * 2.0 / bins)));
  }
  CHECK(total == n);

  double worst = 0.0;
  for (const auto& row : rows) {
    const double mid = 0.5 * (row.bin_left + row.bin_right);
    if (std::abs(mid) < 0.1 || std::abs(mid) > 0.9) continue;
    worst = std::max(worst, std::abs(row.empirical_density - row.f2_at_midpoint));
  }
  CAPTURE(worst);
  CHECK(worst <= 0.06);

  CHECK_THROWS_AS(figure1_data(10001, 1, 100), std::invalid_argument);
  CHECK_THROWS_AS(figure1_data(256, 1, 19), std::invalid_argument);
}
