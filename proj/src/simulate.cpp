#include "harper/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "harper/rng.hpp"

namespace harper {
namespace {

constexpr double physical_time_cap = 1e6;

void validate_walk_inputs(std::size_t n, const KillRates& rates,
                          std::optional<std::size_t> start) {
  if (n < 3) throw std::invalid_argument("killed walk: need n >= 3");
  if (rates.u.size() != n)
    throw std::invalid_argument("killed walk: rates must have length n");
  for (double u : rates.u)
    if (!(u >= 0.0))
      throw std::domain_error("killed walk: negative or non-finite rate");
  if (start && *start >= n)
    throw std::invalid_argument("killed walk: start position out of range");
}

}  // namespace

std::size_t default_start(const KillRates& rates) {
  if (rates.u.empty())
    throw std::invalid_argument("default_start: empty rate vector");
  return static_cast<std::size_t>(
      std::min_element(rates.u.begin(), rates.u.end()) - rates.u.begin());
}

WalkTrace simulate_killed_walk(std::size_t n, const KillRates& rates,
                               std::size_t b, std::uint64_t seed,
                               std::uint64_t stream,
                               std::optional<std::size_t> start) {
  validate_walk_inputs(n, rates, start);
  if (2 * (b + 1) >= n)
    throw std::invalid_argument(
        "simulate_killed_walk: window needs 2(b+1) < n");
  const std::size_t origin = start ? *start : default_start(rates);
  const long radius = static_cast<long>(b) + 1;

  CounterRng rng(seed, stream);
  WalkTrace trace;
  long d = 0;  // displacement from the origin
  trace.states.push_back(d);
  while (true) {
    const std::size_t pos =
        (origin + static_cast<std::size_t>(
                      (d % static_cast<long>(n) + static_cast<long>(n)))) %
        n;
    const double u = rates.u[pos];
    const double total_rate = 2.0 + u;
    const double dt = rng.next_exponential(total_rate);
    trace.holding_times.push_back(dt);
    trace.local_times[d] += dt;
    trace.tau += dt;
    if (trace.tau > physical_time_cap)
      throw numerical_error("simulate_killed_walk: physical time cap 1e6");
    // Competing exponentials: kill with probability u/(2+u), else jump.
    const double coin = rng.next_unit() * total_rate;
    if (coin < u) {
      trace.absorbed = true;
      return trace;
    }
    d += (coin < u + 1.0) ? -1 : 1;
    trace.states.push_back(d);
    if (d == radius || d == -radius) {
      trace.absorbed = false;
      return trace;
    }
  }
}

SurvivalCheck survival_bound_check(std::size_t n, const KillRates& rates,
                                   std::size_t b, std::size_t trials,
                                   std::uint64_t seed,
                                   std::optional<std::size_t> start) {
  if (trials < 1000)
    throw std::invalid_argument("survival_bound_check: need trials >= 1000");
  validate_walk_inputs(n, rates, start);
  if (2 * (b + 1) >= n)
    throw std::invalid_argument("survival_bound_check: window needs 2(b+1) < n");
  const std::size_t origin = start ? *start : default_start(rates);

  std::vector<char> survived(trials, 0);
  parallel_for(trials, [&](std::size_t trial) {
    const WalkTrace trace = simulate_killed_walk(
        n, rates, b, seed, static_cast<std::uint64_t>(trial), origin);
    survived[trial] = trace.absorbed ? 0 : 1;
  });
  std::size_t alive = 0;
  for (char s : survived) alive += static_cast<std::size_t>(s);

  SurvivalCheck check;
  check.empirical_survival =
      static_cast<double>(alive) / static_cast<double>(trials);
  check.std_error = std::sqrt(check.empirical_survival *
                              (1.0 - check.empirical_survival) /
                              static_cast<double>(trials));
  check.g_bound = g_b(sorted_rate_prefix(rates, b));
  return check;
}

double estimate_lambda_star(std::size_t n, const KillRates& rates,
                            std::size_t trials, double horizon,
                            std::uint64_t seed,
                            std::optional<std::size_t> start) {
  validate_walk_inputs(n, rates, start);
  if (trials < 100)
    throw std::invalid_argument("estimate_lambda_star: need trials >= 100");
  if (!(horizon > 0.0))
    throw std::invalid_argument("estimate_lambda_star: need horizon > 0");
  const std::size_t origin = start ? *start : default_start(rates);

  // Kill time per trial, censored at the horizon (recorded as infinity).
  std::vector<double> kill_time(trials);
  parallel_for(trials, [&](std::size_t trial) {
    CounterRng rng(seed, static_cast<std::uint64_t>(trial));
    std::size_t pos = origin;
    double t = 0.0;
    double result = std::numeric_limits<double>::infinity();
    while (true) {
      const double u = rates.u[pos];
      const double total_rate = 1.0 / 3.0 + u;  // neighbor rate 1/6 each
      t += rng.next_exponential(total_rate);
      if (t > horizon) break;
      const double coin = rng.next_unit() * total_rate;
      if (coin < u) {
        result = t;
        break;
      }
      pos = (coin < u + 1.0 / 6.0) ? (pos + n - 1) % n : (pos + 1) % n;
    }
    kill_time[trial] = result;
  });

  std::vector<double> sorted = kill_time;
  std::sort(sorted.begin(), sorted.end());
  const auto survivors_beyond = [&](double t) {
    return static_cast<std::size_t>(
        sorted.end() -
        std::upper_bound(sorted.begin(), sorted.end(), t));
  };

  const double window_start = horizon / 2.0;
  if (survivors_beyond(window_start) < 100)
    throw numerical_error(
        "estimate_lambda_star: fewer than 100 trajectories survive into the "
        "regression window");
  const double final_survival =
      static_cast<double>(survivors_beyond(horizon)) /
      static_cast<double>(trials);
  if (final_survival > 0.1)
    throw numerical_error(
        "estimate_lambda_star: horizon too short, survival " +
        format_float17(final_survival) + " > 0.1 at the horizon");

  // Least squares of -log S(t) on a uniform grid over the tail window.
  constexpr std::size_t grid_points = 64;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t used = 0;
  for (std::size_t g = 0; g < grid_points; ++g) {
    const double t = window_start + (horizon - window_start) *
                                        static_cast<double>(g) /
                                        static_cast<double>(grid_points - 1);
    const std::size_t alive = survivors_beyond(t);
    if (alive == 0) break;
    const double y = -std::log(static_cast<double>(alive) /
                               static_cast<double>(trials));
    sx += t;
    sy += y;
    sxx += t * t;
    sxy += t * y;
    ++used;
  }
  if (used < 2)
    throw numerical_error(
        "estimate_lambda_star: not enough grid points with survivors");
  const double du = static_cast<double>(used);
  const double denom = sxx - sx * sx / du;
  if (denom <= 0.0)
    throw numerical_error("estimate_lambda_star: degenerate regression grid");
  return (sxy - sx * sy / du) / denom;
}

}  // namespace harper
