// Dense Hermitian eigensolver and circulant eigendecomposition.
//
// dense_hermitian_eigen reduces the matrix to real tridiagonal form by
// Householder reflections (a real-symmetric fast path skips the complex
// arithmetic) and diagonalizes with implicit-shift QL, capped at 50 sweeps
// per eigenvalue. Eigenvalues are returned in descending order, so
// values[0] = λ₁ is the top of the spectrum throughout the toolkit.
//
// circulant_eigendecomposition evaluates the symbol ν_f = Σ_t c_t e^{2πift/n}
// of a Hermitian circulant; the eigenvalues are the symbol values, the
// eigenvectors the Fourier vectors e^{2πifk/n}/√n, and frequency_perm[i]
// records which frequency produced values[i] (ties resolved toward the
// smaller frequency).
#pragma once

#include <cstddef>
#include <vector>

#include "harper/common.hpp"
#include "harper/matrix.hpp"

namespace harper {

struct EigenResult {
  std::vector<double> values;               // descending
  std::vector<std::vector<cplx>> vectors;   // vectors[i] pairs with values[i]
};

EigenResult dense_hermitian_eigen(const DenseHermitian& m,
                                  bool want_vectors = true);

struct CirculantSpectrum {
  std::vector<double> values;               // descending
  std::vector<std::size_t> frequency_perm;  // values[i] = symbol(frequency_perm[i])
};

CirculantSpectrum circulant_eigendecomposition(const HermitianCirculant& c);

// Unit-norm Fourier vector v_f(k) = e^{2πifk/n}/√n — an eigenvector of every
// circulant, with eigenvalue equal to the symbol at frequency f.
std::vector<cplx> fourier_eigenvector(std::size_t n, std::size_t f);

namespace detail {
// Implicit-shift QL on a symmetric tridiagonal (d = diagonal, e = subdiagonal
// in e[0..n-2]; e must have size n). If z is non-null it must point to a
// row-major n×n matrix whose columns are rotated along; seeding it with the
// identity yields eigenvectors of the tridiagonal. Throws numerical_error
// after 50 sweeps without deflation.
void tql2(std::vector<double>& d, std::vector<double>& e, double* z,
          std::size_t n);
}  // namespace detail

}  // namespace harper
