// Discrete Fourier transforms on C^n in the two normalizations used by the
// toolkit:
//
//   forward :  û(λ) = Σ_k u(k) e^{-2πiλk/n}      (unnormalized analysis;
//                                                  Parseval: Σ|û|² = n Σ|u|²)
//   inverse :  u(k) = (1/n) Σ_λ û(λ) e^{+2πiλk/n}
//   unitary :  (F u)(λ) = n^{-1/2} Σ_k u(k) e^{+2πiλk/n},  F⁻¹ = F^*
//
// Power-of-two sizes run an iterative radix-2 FFT; all other sizes are
// evaluated directly against an exact modular twiddle table, which keeps
// the worst-case rounding at a few ulps for every n.
#pragma once

#include <vector>

#include "harper/common.hpp"

namespace harper {

std::vector<cplx> dft_forward(const std::vector<cplx>& u);
std::vector<cplx> dft_inverse(const std::vector<cplx>& spectrum);
std::vector<cplx> dft_unitary(const std::vector<cplx>& u);
std::vector<cplx> dft_unitary_inverse(const std::vector<cplx>& v);

}  // namespace harper
