// Monte-Carlo side of the absorbing-chain module: a continuous-time
// nearest-neighbor walk on Z/nZ with position-dependent killing, observed
// either across a window of radius b+1 around the start (survival bound,
// exit-time and local-time laws) or on the whole circle (tail decay rate of
// the survival probability).
//
// Clocks. The walk jumps to each neighbor at rate 1, so holding times have
// mean 1/(2 + u_x); all WalkTrace fields are recorded in this physical
// clock. The classical exit-time statistics (mean (b+1)^2, phase-type stage
// rates from hitting_time_mgf_rates) live in the unit-mean-step clock,
// which runs step_clock_factor = 2 times the physical one; consumers apply
// the factor explicitly.
//
// The tail-rate estimator uses a different normalization: it continuizes
// the absorbing chain M'' at total event rate 1 (neighbor rate 1/6, kill
// rate u_x), so the fitted slope of -log P(tau > t) estimates the smallest
// Dirichlet eigenvalue 1 - lambda_1(M') with no rescaling.
//
// Determinism: every trial draws from CounterRng(seed, stream) with one
// stream per trial, so results are identical for any thread count.
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "harper/absorbing.hpp"
#include "harper/common.hpp"

namespace harper {

// Unit-mean-step time = step_clock_factor * physical time.
inline constexpr double step_clock_factor = 2.0;

struct WalkTrace {
  std::vector<long> states;           // displacements from start; states[0]=0
  std::vector<double> holding_times;  // physical; one entry per visited state
  bool absorbed = false;              // killed before exiting the window
  double tau = 0.0;                   // physical time at kill or exit
  std::map<long, double> local_times;  // displacement -> physical occupation
};

// Start position on the circle: explicit, or the argmin of the kill rates
// (ties toward the smaller index) when unset.
std::size_t default_start(const KillRates& rates);

// One trajectory of the killed walk, run until it is killed or first
// reaches displacement +-(b+1) from the start. Requires rates.u.size() == n,
// nonnegative rates, and 2(b+1) < n so the window embeds in the circle.
// Throws numerical_error if the physical clock exceeds 1e6.
WalkTrace simulate_killed_walk(std::size_t n, const KillRates& rates,
                               std::size_t b, std::uint64_t seed,
                               std::uint64_t stream = 0,
                               std::optional<std::size_t> start = std::nullopt);

struct SurvivalCheck {
  double empirical_survival = 0.0;  // fraction of trials exiting un-killed
  double std_error = 0.0;           // binomial standard error
  double g_bound = 0.0;             // G_b on the sorted rate prefix
};

// Monte-Carlo check of P(survive the window) <= G_b(sorted rates);
// trials >= 1000.
SurvivalCheck survival_bound_check(std::size_t n, const KillRates& rates,
                                   std::size_t b, std::size_t trials,
                                   std::uint64_t seed,
                                   std::optional<std::size_t> start =
                                       std::nullopt);

// Tail decay rate of survival for the continuized absorbing chain: least-
// squares slope of -log S(t) over the last half of [0, horizon]. Throws
// numerical_error when the empirical survival at the horizon is above 0.1
// (horizon too short) or fewer than 100 trajectories survive into the
// regression window.
double estimate_lambda_star(std::size_t n, const KillRates& rates,
                            std::size_t trials, double horizon,
                            std::uint64_t seed,
                            std::optional<std::size_t> start = std::nullopt);

}  // namespace harper
