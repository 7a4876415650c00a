// The harmonic-oscillator limit of the Harper family at frequency a = 1.
//
// The scaled operator M̃_n = n(I − M_n) concentrates, on smooth vectors
// supported near the grid origin in position and frequency, to the
// harmonic oscillator L = −¼ d²/dx² + π² x² (grid x_j = j/√n), whose k-th
// smallest eigenvalue is μ_k = (2k−1)π/2. Consequently the extreme
// eigenvalues of M_n obey λ_k(M_n) = 1 − μ_k/n + o(1/n) at the top and the
// mirror −1 + μ_k/n at the bottom.
//
// Exact finite-n identity (no asymptotics), with û the unnormalized
// e^{-2πi} transform:
//   u^H M̃_n u = Σ_λ sin²(πλ/n)|û(λ)|² + n Σ_k sin²(πk/n)|u(k)|².
//
// The bottom of the spectrum is reached through the conjugation unitary
// (half-period translation composed with modulation): for even n,
// U M_n U* = −M_n exactly; for odd n the identity holds up to O(n^{-1/2})
// in the quadratic-form sense.
#pragma once

#include <cstddef>
#include <vector>

#include "harper/common.hpp"
#include "harper/matrix.hpp"

namespace harper {

struct ScaledOperator {
  std::size_t n = 0;
  CirculantPlusDiagonal base;  // the Harper matrix M_n; operator is n(I − M_n)
};

ScaledOperator make_scaled_harper(std::size_t n);

struct HermiteApproximant {
  std::size_t k = 0;  // level, 1-based (k=1 is the Gaussian ground state)
  std::size_t n = 0;
  std::vector<double> values;  // unit norm, index 0 at the grid center
};

// μ_k = (2k−1)π/2, the k-th smallest oscillator eigenvalue; k ≥ 1.
double mu_k(std::size_t k);

// u^H M̃_n u by direct application of the matrix stencil.
double quadratic_form_direct(const std::vector<cplx>& u);

// The same value through the Fourier identity quoted above.
double quadratic_form_spectral(const std::vector<cplx>& u);

// Discretized oscillator eigenfunction φ_k(x) = H_{k−1}(√(2π)x)e^{−πx²}
// on x_j = (j − ⌊n/2⌋)/√n, rolled so index 0 is the grid center, unit
// normalized. Requires 1 ≤ k ≤ 5 (explicit H_0..H_4) and n ≥ 100; the
// wrap boundary must carry less than 1e-8 of the peak magnitude.
HermiteApproximant hermite_approximant(std::size_t n, std::size_t k);

// (v^H M̃ v)/(v^H v); v must be nonzero.
double rayleigh_quotient(const ScaledOperator& op, const std::vector<cplx>& v);

// v(k) = e^{2πiαk} u(k − s) with s = (n+1)/2, α = −(n+1)/(2n) for odd n and
// s = n/2, α = −1/2 (so the phase is exactly (−1)^k) for even n.
std::vector<cplx> conjugation_unitary_apply(const std::vector<cplx>& u);

enum class SpectrumEnd { top, bottom };

// 1 − μ_k/n at the top, −1 + μ_k/n at the bottom.
double asymptotic_eigenvalue(std::size_t n, std::size_t k, SpectrumEnd end);

struct ConvergenceRow {
  std::size_t n = 0;
  std::size_t k = 0;
  double scaled = 0.0;     // n·(1 − λ_k(M_n))
  double mu = 0.0;         // μ_k
  double abs_error = 0.0;  // |scaled − mu|
};

// Dense-eigensolver sweep of n·(1 − λ_k) against μ_k for k = 1..k_max.
std::vector<ConvergenceRow> convergence_table(
    const std::vector<std::size_t>& sizes, std::size_t k_max);

}  // namespace harper
