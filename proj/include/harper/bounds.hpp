// Extreme-eigenvalue bounds for Hermitian circulant + real diagonal sums,
// driven by an uncertainty principle for the discrete Fourier transform.
//
// The chain of results implemented here:
//   * concentration defect ε of a unit vector on an index set S:
//     ε = ‖(z)_{S^c}‖, the mass lying outside S;
//   * the Donoho–Stark inequality |S||T| ≥ n(1−(ε_S+ε_T))² for a unit
//     Fourier pair (z, ẑ) concentrated on S (time) and T (frequency),
//     vacuous when ε_S+ε_T ≥ 1;
//   * its corollary: when |S||T| < n no unit vector can be simultaneously
//     concentrated, quantitatively
//       ‖(z)_{S^c}‖² + ‖(ẑ)_{T^c}‖² ≥ ½(1−√(|S||T|/n))²;
//   * the eigenvalue bound: for C Hermitian circulant and D real diagonal,
//       λ₁(C+D) ≤ λ₁(C) + λ₁(D)
//                 − ½·min{λ₁(D)−λ_{k+1}(D), λ₁(C)−λ_{k′+1}(C)}·(1−√(kk′/n))²
//     for any 1 ≤ k, k′ with kk′ < n (a top eigenvector cannot avoid both
//     the k top diagonal sites and the k′ top circulant frequencies), and
//     its two variants: a + b → (ab/(a+b)) sharpening of ½·min{a,b}, and the
//     mirrored lower bound for the smallest eigenvalue.
//
// All transforms in this module use the 1/√n normalization (ẑ = û/√n with
// the e^{-2πi} analysis kernel) so z and ẑ are simultaneously unit vectors.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "harper/common.hpp"
#include "harper/matrix.hpp"

namespace harper {

using IndexSet = std::vector<std::size_t>;

struct ConcentrationReport {
  IndexSet set_s;
  IndexSet set_t;
  double eps_s = 0.0;
  double eps_t = 0.0;
};

struct DonohoStarkResult {
  ConcentrationReport report;
  double lhs = 0.0;  // |S||T|
  double rhs = 0.0;  // n·max(0, 1-(ε_S+ε_T))²
  bool holds = false;
};

struct BoundReport {
  std::string variant;  // theorem1 | improved | smallest
  std::size_t k = 0;
  std::size_t k_prime = 0;
  double weyl_term = 0.0;   // λ₁(C)+λ₁(D), or λ_n(C)+λ_n(D) for smallest
  double correction = 0.0;  // nonnegative
  double bound = 0.0;       // weyl − correction (+ correction for smallest)
};

// ‖(z)_{S^c}‖ for unit z (‖z‖ = 1 within 1e-10, else std::invalid_argument).
double concentration_defect(const std::vector<cplx>& z, const IndexSet& s);

DonohoStarkResult donoho_stark_holds(const std::vector<cplx>& z,
                                     const IndexSet& s, const IndexSet& t);

// (lhs, rhs) of the corollary inequality; |S||T| >= n → std::domain_error.
std::pair<double, double> corollary_defect_bound(const std::vector<cplx>& z,
                                                 const IndexSet& s,
                                                 const IndexSet& t);

BoundReport theorem1_bound(const HermitianCirculant& c, const RealDiagonal& d,
                           std::size_t k, std::size_t k_prime);

BoundReport improved_bound(const HermitianCirculant& c, const RealDiagonal& d,
                           std::size_t k, std::size_t k_prime);

BoundReport smallest_eigenvalue_bound(const HermitianCirculant& c,
                                      const RealDiagonal& d, std::size_t l,
                                      std::size_t l_prime);

// Minimal upper bound over the grid (⌊c√n⌋, ⌊c′√n⌋), c, c′ ∈ {0.1,…,0.9},
// plus the full diagonal sweep k = k′; ties resolved by lexicographic (k, k′).
// variant: "theorem1" (default) or "improved".
BoundReport optimize_bound(const HermitianCirculant& c, const RealDiagonal& d,
                           const std::string& variant = "theorem1");

}  // namespace harper
