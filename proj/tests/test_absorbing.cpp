#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "harper/absorbing.hpp"
#include "harper/eigen.hpp"
#include "harper/matrix.hpp"
#include "harper/rng.hpp"

using harper::cplx;
using harper::KillRates;

namespace {

harper::DenseHermitian to_dense_real(const harper::SubstochasticMatrix& mp) {
  harper::DenseHermitian dense(mp.n);
  for (std::size_t i = 0; i < mp.n; ++i)
    for (std::size_t j = 0; j < mp.n; ++j)
      dense.at(i, j) = cplx{mp.at(i, j), 0.0};
  return dense;
}

std::vector<double> random_rates(std::size_t len, harper::CounterRng& rng) {
  std::vector<double> v(len);
  for (double& x : v) x = 2.0 * rng.next_unit();
  return v;
}

// Direct product-form evaluation (no log space) as an independent oracle.
double g_b_naive(const std::vector<double>& v) {
  const double bp1 = static_cast<double>(v.size());
  double prod = 1.0;
  for (std::size_t k = 0; k < v.size(); ++k)
    prod *= 1.0 / (1.0 + bp1 * (bp1 - static_cast<double>(k)) * v[k] / 2.0);
  return std::pow(prod, 1.0 / bp1);
}

double f_b_naive(const std::vector<double>& v) {
  const double bp1 = static_cast<double>(v.size());
  double prod = 1.0 / (1.0 + bp1 * bp1 * v[0] / 2.0);
  for (std::size_t l = 1; l < v.size(); ++l)
    prod *= 1.0 / (1.0 + bp1 * (bp1 - static_cast<double>(l)) * v[l]);
  return std::pow(prod, 1.0 / bp1);
}

}  // namespace

TEST_CASE("substochastic transform of the Harper family") {
  const auto mp = harper::build_substochastic(harper::build_harper(4, 1));
  REQUIRE(mp.n == 4);
  // Row sums (2 + cos(2*pi*j/4))/3 = 1, 2/3, 1/3, 2/3.
  const double expected_rows[4] = {1.0, 2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0};
  for (std::size_t i = 0; i < 4; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      row += mp.at(i, j);
      CHECK(mp.at(i, j) >= 0.0);
      if (j == (i + 1) % 4 || i == (j + 1) % 4)
        CHECK(mp.at(i, j) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    }
    CHECK(row == doctest::Approx(expected_rows[i]).epsilon(1e-14));
    CHECK(mp.absorb_rate(i) ==
          doctest::Approx(1.0 - expected_rows[i]).epsilon(1e-13));
  }
  // Diagonal (1 + cos(2*pi*j/4))/3.
  CHECK(mp.at(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(mp.at(1, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(mp.at(2, 2) == doctest::Approx(0.0));
}

TEST_CASE("substochastic transform maps the spectrum affinely") {
  const std::size_t n = 16;
  const auto m = harper::build_harper(n, 3);
  const auto base = harper::dense_hermitian_eigen(to_dense(m), false);
  const auto mapped =
      harper::dense_hermitian_eigen(to_dense_real(harper::build_substochastic(m)),
                                    false);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(mapped.values[i] ==
          doctest::Approx(1.0 / 3.0 + 2.0 * base.values[i] / 3.0)
              .epsilon(1e-12));
}

TEST_CASE("substochastic transform rejects unusable inputs") {
  // Large negative diagonal makes entries negative.
  harper::CirculantPlusDiagonal bad_neg{
      harper::make_hermitian_circulant(
          harper::nearest_neighbour_circulant(4, 0.25).first_row),
      harper::RealDiagonal{{-10.0, -10.0, -10.0, -10.0}}};
  CHECK_THROWS_AS(harper::build_substochastic(bad_neg), std::domain_error);

  // Large positive diagonal overflows the row-sum budget.
  harper::CirculantPlusDiagonal bad_row{
      harper::nearest_neighbour_circulant(4, 0.25),
      harper::RealDiagonal{{10.0, 10.0, 10.0, 10.0}}};
  CHECK_THROWS_AS(harper::build_substochastic(bad_row), std::domain_error);

  // Complex off-diagonal entries cannot form a nonnegative chain.
  std::vector<cplx> row(4, cplx{0.0, 0.0});
  row[1] = cplx{0.0, 0.125};
  row[3] = cplx{0.0, -0.125};
  harper::CirculantPlusDiagonal bad_cplx{
      harper::make_hermitian_circulant(std::move(row)),
      harper::RealDiagonal{{0.0, 0.0, 0.0, 0.0}}};
  CHECK_THROWS_AS(harper::build_substochastic(bad_cplx), std::domain_error);
}

TEST_CASE("absorbing chain: stochastic closure of the Harper walk") {
  const auto mp = harper::build_substochastic(harper::build_harper(4, 1));
  const auto chain = harper::build_absorbing(mp);
  REQUIRE(chain.n == 4);

  // Row 0 is the absorbing state.
  CHECK(chain.at(0, 0) == 1.0);
  for (std::size_t j = 1; j <= 4; ++j) CHECK(chain.at(0, j) == 0.0);

  // Absorption column (0, 1/3, 2/3, 1/3) and unit row sums.
  const double expected_a[4] = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0};
  for (std::size_t i = 1; i <= 4; ++i) {
    CHECK(chain.at(i, 0) == doctest::Approx(expected_a[i - 1]).epsilon(1e-13));
    double row = 0.0;
    for (std::size_t j = 0; j <= 4; ++j) row += chain.at(i, j);
    CHECK(row == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t j = 1; j <= 4; ++j)
      CHECK(chain.at(i, j) == doctest::Approx(mp.at(i - 1, j - 1)));
  }
}

TEST_CASE("Dirichlet eigenvalue of the chain equals the mapped top eigenvalue") {
  const std::size_t n = 64;
  const auto m = harper::build_harper(n, 1);
  const double lambda_m =
      harper::dense_hermitian_eigen(to_dense(m), false).values[0];
  const auto mp = harper::build_substochastic(m);
  const double lambda_mp =
      harper::dense_hermitian_eigen(to_dense_real(mp), false).values[0];
  CHECK(lambda_mp ==
        doctest::Approx(1.0 / 3.0 + 2.0 * lambda_m / 3.0).epsilon(1e-10));
}

TEST_CASE("harper kill rates") {
  const auto rates = harper::harper_kill_rates(8, 1);
  CHECK(rates.u[0] == 0.0);
  CHECK(rates.u[1] ==
        doctest::Approx((1.0 - std::cos(harper::pi / 4)) / 3.0)
            .epsilon(1e-15));
  CHECK(rates.u[4] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  // Consistency with the matrix path: u_xi = absorb rate of the chain.
  for (std::size_t a : {std::size_t{1}, std::size_t{5}}) {
    const auto u = harper::harper_kill_rates(12, a);
    const auto mp = harper::build_substochastic(harper::build_harper(12, a));
    for (std::size_t xi = 0; xi < 12; ++xi)
      CHECK(u.u[xi] == doctest::Approx(mp.absorb_rate(xi)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(harper::harper_kill_rates(2, 1), std::invalid_argument);
}

TEST_CASE("sorted rate prefix keeps the paired listing") {
  // a = 1 on an odd circle: 0 once, then each positive value twice.
  const auto rates = harper::harper_kill_rates(9, 1);
  const auto prefix = harper::sorted_rate_prefix(rates, 4);
  REQUIRE(prefix.size() == 5);
  CHECK(prefix[0] == 0.0);
  CHECK(prefix[1] == doctest::Approx(prefix[2]).epsilon(1e-15));
  CHECK(prefix[3] == doctest::Approx(prefix[4]).epsilon(1e-15));
  CHECK(std::is_sorted(prefix.begin(), prefix.end()));
  CHECK(prefix[1] ==
        doctest::Approx((1.0 - std::cos(2 * harper::pi / 9)) / 3.0)
            .epsilon(1e-15));

  CHECK_THROWS_AS(harper::sorted_rate_prefix(rates, 9),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      harper::sorted_rate_prefix(KillRates{{0.0, -1.0, 0.0}}, 1),
      std::domain_error);
}

TEST_CASE("window functionals F_b and G_b") {
  // All-zero rates: both equal 1.
  for (std::size_t b : {std::size_t{0}, std::size_t{3}, std::size_t{10}}) {
    const std::vector<double> zero(b + 1, 0.0);
    CHECK(harper::f_b(zero) == 1.0);
    CHECK(harper::g_b(zero) == 1.0);
  }

  // b = 0 closed form; F and G coincide there.
  for (double v0 : {0.5, 2.0, 7.25}) {
    CHECK(harper::g_b({v0}) == doctest::Approx(1.0 / (1.0 + v0 / 2.0))
                                   .epsilon(1e-15));
    CHECK(harper::f_b({v0}) == doctest::Approx(harper::g_b({v0}))
                                   .epsilon(1e-15));
  }

  CHECK_THROWS_AS(harper::g_b({0.5, -0.1}), std::domain_error);
  CHECK_THROWS_AS(harper::f_b({-1.0}), std::domain_error);
  CHECK_THROWS_AS(harper::g_b({}), std::invalid_argument);

  harper::CounterRng rng(61, 0);
  for (std::size_t b : {std::size_t{1}, std::size_t{3}, std::size_t{7}}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto v = random_rates(b + 1, rng);

      // Log-space evaluation agrees with the direct product.
      CHECK(harper::g_b(v) == doctest::Approx(g_b_naive(v)).epsilon(1e-12));
      CHECK(harper::f_b(v) == doctest::Approx(f_b_naive(v)).epsilon(1e-12));

      // F <= G, both in (0, 1].
      CHECK(harper::f_b(v) <= harper::g_b(v) + 1e-15);
      CHECK(harper::g_b(v) <= 1.0);
      CHECK(harper::f_b(v) > 0.0);

      // Antitone under a coordinatewise increase.
      auto larger = v;
      larger[rng.next_below(b + 1)] += 0.5;
      CHECK(harper::g_b(larger) <= harper::g_b(v) + 1e-15);

      // Sorting ascending can only increase G.
      auto sorted = v;
      std::sort(sorted.begin(), sorted.end());
      CHECK(harper::g_b(v) <= harper::g_b(sorted) + 1e-15);
    }
  }
}

TEST_CASE("phase-type stage rates of the window exit time") {
  // b = 0: single stage of rate 1 (one unit-mean step exits).
  const auto single = harper::hitting_time_mgf_rates(0);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == doctest::Approx(1.0).epsilon(1e-15));

  for (std::size_t b : {std::size_t{1}, std::size_t{5}, std::size_t{20}}) {
    const auto a = harper::hitting_time_mgf_rates(b);
    REQUIRE(a.size() == b + 1);
    CHECK(std::is_sorted(a.begin(), a.end()));  // a_1 minimal: tail dominant
    double mean = 0.0, var = 0.0;
    for (double ak : a) {
      mean += 1.0 / ak;
      var += 1.0 / (ak * ak);
    }
    const double bp1 = static_cast<double>(b + 1);
    // Gambler's-Ruin mean and the closed-form second moment.
    CHECK(mean == doctest::Approx(bp1 * bp1).epsilon(1e-12));
    CHECK(var == doctest::Approx(bp1 * bp1 * (2.0 * bp1 * bp1 + 1.0) / 3.0)
                     .epsilon(1e-12));
  }
}

TEST_CASE("stage rates equal the folded-generator Dirichlet spectrum") {
  // Fold the window walk to |displacement| on {0..b} in the unit-mean-step
  // clock: rate 1 from 0 to 1, rate 1/2 between interior neighbors, exit at
  // rate 1/2 from b. Symmetrizing with the reversible weights (1, 2, 2, ...)
  // gives a real symmetric matrix whose eigenvalues are the stage rates.
  for (std::size_t b : {std::size_t{1}, std::size_t{5}, std::size_t{20}}) {
    const std::size_t m = b + 1;
    harper::DenseHermitian folded(m);
    for (std::size_t i = 0; i < m; ++i) folded.at(i, i) = 1.0;
    if (m > 1) {
      folded.at(0, 1) = folded.at(1, 0) = -1.0 / std::sqrt(2.0);
      for (std::size_t i = 1; i + 1 < m; ++i)
        folded.at(i, i + 1) = folded.at(i + 1, i) = -0.5;
    }
    auto eig = harper::dense_hermitian_eigen(folded, false);
    std::sort(eig.values.begin(), eig.values.end());
    const auto a = harper::hitting_time_mgf_rates(b);
    for (std::size_t k = 0; k < m; ++k)
      CHECK(a[k] == doctest::Approx(eig.values[k]).epsilon(1e-10));
  }
}
