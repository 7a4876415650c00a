#include <cmath>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "harper/absorbing.hpp"
#include "harper/eigen.hpp"
#include "harper/matrix.hpp"
#include "harper/simulate.hpp"

using harper::KillRates;
using harper::WalkTrace;

namespace {

KillRates zero_rates(std::size_t n) { return KillRates{std::vector<double>(n, 0.0)}; }

KillRates const_rates(std::size_t n, double c) {
  return KillRates{std::vector<double>(n, c)};
}

struct Moments {
  double mean = 0.0;
  double sd = 0.0;      // sample standard deviation
  double se = 0.0;      // standard error of the mean
  std::size_t count = 0;
};

Moments summarize(const std::vector<double>& xs) {
  Moments m;
  m.count = xs.size();
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(m.count);
  double ss = 0.0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.sd = std::sqrt(ss / static_cast<double>(m.count - 1));
  m.se = m.sd / std::sqrt(static_cast<double>(m.count));
  return m;
}

}  // namespace

TEST_CASE("killed walk: determinism and input validation") {
  const auto rates = harper::harper_kill_rates(32, 1);
  const auto t1 = harper::simulate_killed_walk(32, rates, 5, 7, 3);
  const auto t2 = harper::simulate_killed_walk(32, rates, 5, 7, 3);
  CHECK(t1.tau == t2.tau);
  CHECK(t1.absorbed == t2.absorbed);
  CHECK(t1.states == t2.states);
  const auto t3 = harper::simulate_killed_walk(32, rates, 5, 7, 4);
  CHECK(t1.tau != t3.tau);

  CHECK_THROWS_AS(harper::simulate_killed_walk(32, zero_rates(31), 5, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(harper::simulate_killed_walk(32, rates, 15, 0),
                  std::invalid_argument);  // window 2(b+1) >= n
  CHECK_THROWS_AS(
      harper::simulate_killed_walk(32, KillRates{std::vector<double>(32, -1.0)},
                                   5, 0),
      std::domain_error);
  CHECK_THROWS_AS(harper::simulate_killed_walk(32, rates, 5, 0, 0,
                                               std::size_t{32}),
                  std::invalid_argument);
  CHECK(harper::default_start(rates) == 0);
}

TEST_CASE("killed walk: trace bookkeeping invariants") {
  const auto rates = harper::harper_kill_rates(64, 1);
  for (std::uint64_t stream = 0; stream < 50; ++stream) {
    const WalkTrace t = harper::simulate_killed_walk(64, rates, 6, 11, stream);
    REQUIRE(!t.states.empty());
    CHECK(t.states.front() == 0);
    // Each visited state gets one sojourn, except the exit state, which
    // terminates the trajectory on arrival.
    CHECK(t.states.size() ==
          t.holding_times.size() + (t.absorbed ? 0 : 1));

    double hold_sum = 0.0;
    for (double h : t.holding_times) hold_sum += h;
    CHECK(hold_sum == doctest::Approx(t.tau).epsilon(1e-12));

    double local_sum = 0.0;
    for (const auto& [pos, occ] : t.local_times) {
      CHECK(std::labs(pos) <= 7);
      local_sum += occ;
    }
    CHECK(local_sum == doctest::Approx(t.tau).epsilon(1e-12));

    for (std::size_t i = 1; i < t.states.size(); ++i)
      CHECK(std::labs(t.states[i] - t.states[i - 1]) == 1);
    if (!t.absorbed) CHECK(std::labs(t.states.back()) == 7);
    for (long s : t.states) CHECK(std::labs(s) <= 7);
  }
}

TEST_CASE("zero kill rates: the walk always survives the window") {
  for (std::uint64_t stream = 0; stream < 200; ++stream) {
    const WalkTrace t =
        harper::simulate_killed_walk(24, zero_rates(24), 4, 3, stream);
    CHECK(!t.absorbed);
    CHECK(std::labs(t.states.back()) == 5);
  }
  const auto check =
      harper::survival_bound_check(24, zero_rates(24), 4, 1000, 3);
  CHECK(check.empirical_survival == 1.0);
  CHECK(check.g_bound == 1.0);
}

TEST_CASE("gambler's-ruin exit time in the unit-mean-step clock") {
  // b = 20: the exit time (doubled physical time) has mean (b+1)^2 = 441 and
  // variance sum(1/a_k^2); both are sampled to within 3 standard errors.
  const std::size_t b = 20;
  const std::size_t trials = 2000;
  std::vector<double> tau(trials);
  harper::parallel_for(trials, [&](std::size_t i) {
    tau[i] = harper::step_clock_factor *
             harper::simulate_killed_walk(64, zero_rates(64), b, 17,
                                          static_cast<std::uint64_t>(i))
                 .tau;
  });
  const Moments m = summarize(tau);
  CHECK(std::abs(m.mean - 441.0) <= 3.0 * m.se);

  const auto a = harper::hitting_time_mgf_rates(b);
  double target_var = 0.0;
  for (double ak : a) target_var += 1.0 / (ak * ak);
  double m4 = 0.0;
  for (double x : tau) m4 += std::pow(x - m.mean, 4.0);
  m4 /= static_cast<double>(trials);
  const double sample_var = m.sd * m.sd;
  const double var_se =
      std::sqrt((m4 - sample_var * sample_var) / static_cast<double>(trials));
  CHECK(std::abs(sample_var - target_var) <= 3.0 * var_se);
}

TEST_CASE("local-time means across the window") {
  // E[L_y] = b+1-y (unit-mean-step clock) for y >= 1; at the start the
  // physical sojourn has mean (b+1)/2.
  const std::size_t b = 10;
  const std::size_t trials = 2000;
  std::vector<double> l0(trials), l1(trials), l5(trials), l10(trials),
      lm5(trials);
  harper::parallel_for(trials, [&](std::size_t i) {
    const WalkTrace t = harper::simulate_killed_walk(
        64, zero_rates(64), b, 19, static_cast<std::uint64_t>(i));
    const auto occupancy = [&](long y) {
      const auto it = t.local_times.find(y);
      return it == t.local_times.end() ? 0.0 : it->second;
    };
    l0[i] = occupancy(0);  // physical clock
    l1[i] = harper::step_clock_factor * occupancy(1);
    l5[i] = harper::step_clock_factor * occupancy(5);
    lm5[i] = harper::step_clock_factor * occupancy(-5);
    l10[i] = harper::step_clock_factor * occupancy(10);
  });
  const Moments m0 = summarize(l0);
  CHECK(std::abs(m0.mean - 5.5) <= 3.0 * m0.se);
  const Moments m1 = summarize(l1);
  CHECK(std::abs(m1.mean - 10.0) <= 3.0 * m1.se);
  const Moments m5 = summarize(l5);
  CHECK(std::abs(m5.mean - 6.0) <= 3.0 * m5.se);
  const Moments mm5 = summarize(lm5);
  CHECK(std::abs(mm5.mean - 6.0) <= 3.0 * mm5.se);
  const Moments m10 = summarize(l10);
  CHECK(std::abs(m10.mean - 1.0) <= 3.0 * m10.se);
}

TEST_CASE("survival is bounded by G_b on the sorted rates") {
  const std::size_t n = 64;
  const auto rates = harper::harper_kill_rates(n, 1);
  const auto check =
      harper::survival_bound_check(n, rates, 8, 2000, 23, std::size_t{0});
  CHECK(check.empirical_survival <= check.g_bound + 3.0 * check.std_error);
  CHECK(check.g_bound > 0.0);
  CHECK(check.g_bound <= 1.0);

  // Doubling every rate cannot (statistically) increase survival.
  KillRates doubled = rates;
  for (double& u : doubled.u) u *= 2.0;
  const auto check2 =
      harper::survival_bound_check(n, doubled, 8, 2000, 29, std::size_t{0});
  CHECK(check2.empirical_survival <=
        check.empirical_survival + 3.0 * (check.std_error + check2.std_error));
  CHECK(check2.g_bound <= check.g_bound);

  CHECK_THROWS_AS(harper::survival_bound_check(n, rates, 8, 999, 1),
                  std::invalid_argument);
}

TEST_CASE("tail rate estimator: constant killing is recovered exactly") {
  // With u = c everywhere the survival is exactly e^{-ct}.
  const double c = 0.05;
  const double est =
      harper::estimate_lambda_star(16, const_rates(16, c), 20000, 80.0, 31);
  CHECK(std::abs(est - c) <= 0.1 * c);
}

TEST_CASE("tail rate estimator matches the dense Dirichlet eigenvalue") {
  const std::size_t n = 32;
  const auto m = harper::build_harper(n, 1);
  const double lambda1 =
      harper::dense_hermitian_eigen(to_dense(m), false).values[0];
  const double exact = 2.0 * (1.0 - lambda1) / 3.0;  // 1 - lambda_1(M')
  const double horizon = 6.0 / exact;
  const double est = harper::estimate_lambda_star(
      n, harper::harper_kill_rates(n, 1), 30000, horizon, 37);
  CHECK(std::abs(est - exact) <= 0.2 * exact);
}

TEST_CASE("tail rate estimator guards") {
  // Horizon so short that almost everything survives.
  CHECK_THROWS_AS(harper::estimate_lambda_star(16, const_rates(16, 0.001),
                                               2000, 10.0, 41),
                  harper::numerical_error);
  // Killing so strong that nothing reaches the regression window.
  CHECK_THROWS_AS(harper::estimate_lambda_star(16, const_rates(16, 0.2), 200,
                                               100.0, 43),
                  harper::numerical_error);
  CHECK_THROWS_AS(harper::estimate_lambda_star(16, const_rates(16, 0.05), 99,
                                               80.0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(harper::estimate_lambda_star(16, const_rates(16, 0.05), 200,
                                               -1.0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(harper::estimate_lambda_star(16, zero_rates(15), 200, 10.0, 1),
                  std::invalid_argument);
}
