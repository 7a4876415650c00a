// Substochastic and absorbing chains built from the circulant+diagonal
// family, the kill-rate functionals F_b/G_b, and the phase-type stage rates
// of the window exit time.
//
//   M'  = I/3 + 2M/3        (nonnegative, row sums <= 1; spectrum map
//                            lambda' = 1/3 + 2*lambda/3)
//   M'' = (n+1)x(n+1) stochastic chain absorbing at state 0, with
//         absorption column a_i = 1 - (row sum of M').
//
// For the Harper family the absorption rates are
//   u_xi = (1/3)(1 - cos(2*pi*a*xi/n)),
// and the survival of the killed walk across a window of radius b+1 is
// bounded by G_b evaluated on the nondecreasing rearrangement of the rates:
//
//   F_b(v) = [ 1/(1+(b+1)^2 v_0/2) * prod_{l=1..b} 1/(1+(b+1)(b+1-l)v_l) ]^{1/(b+1)}
//   G_b(v) = [ prod_{k=0..b} 1/(1+(b+1)(b+1-k)v_k/2) ]^{1/(b+1)}
//
// Clock convention (documented in the report output): the exit time from
// the window, observed in the clock where each step's holding time has mean
// one, is a sum of b+1 independent exponentials with rates
// a_k = 1 - cos(pi(2k-1)/(2(b+1))); then sum(1/a_k) = (b+1)^2 is the
// classical mean step count. The walk's own physical clock (rate 1 to each
// neighbor) runs twice as fast.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "harper/common.hpp"
#include "harper/matrix.hpp"

namespace harper {

// Nonnegative square matrix with row sums at most 1 (dense, row-major).
struct SubstochasticMatrix {
  std::size_t n = 0;
  std::vector<double> entries;

  double at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  // 1 - (row sum): the per-step absorption probability out of state i.
  double absorb_rate(std::size_t i) const;
};

// (n+1)x(n+1) stochastic chain; state 0 is absorbing, states 1..n carry the
// substochastic matrix and leak to 0.
struct AbsorbingChain {
  std::size_t n = 0;  // number of transient states
  std::vector<double> entries;

  double at(std::size_t i, std::size_t j) const {
    return entries[i * (n + 1) + j];
  }
};

struct KillRates {
  std::vector<double> u;  // nonnegative, indexed by position on Z/nZ
};

// M' = I/3 + 2M/3. Throws std::domain_error if the input produces negative
// entries, a non-real entry, or a row sum above 1 + 1e-12.
SubstochasticMatrix build_substochastic(const CirculantPlusDiagonal& m);

AbsorbingChain build_absorbing(const SubstochasticMatrix& mp);

// u_xi = (1/3)(1 - cos(2*pi*a*xi/n)); n >= 3.
KillRates harper_kill_rates(std::size_t n, std::size_t a);

// Nondecreasing rearrangement of the rates, truncated to the first b+1
// entries (the window functionals only see that prefix).
std::vector<double> sorted_rate_prefix(const KillRates& rates, std::size_t b);

// F_b and G_b on R_+^{b+1}; v.size() must be b+1 (b is inferred).
// Negative coordinates throw std::domain_error. Evaluated in log space.
double f_b(const std::vector<double>& v);
double g_b(const std::vector<double>& v);

// Stage rates a_1..a_{b+1} of the window exit time's phase-type law in the
// unit-mean-step clock: a_k = 1 - cos(pi(2k-1)/(2(b+1))).
std::vector<double> hitting_time_mgf_rates(std::size_t b);

}  // namespace harper
