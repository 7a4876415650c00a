// Matrix model for the toolkit: Hermitian circulants, real diagonals, their
// sums, and dense Hermitian storage, together with the named operator
// families.
//
//   build_harper(n, a):    M_n(a) = C + D_a with C the symmetric circulant
//                          averaging the two neighbours (weight 1/4 at
//                          offsets ±1, wrapping at the corners) and
//                          (D_a)_jj = ½ cos(2πaj/n).  All eigenvalues of
//                          M_n(a) lie in [-1, 1].
//   build_affine_transform(p):
//                          the (p-1)×(p-1) operator with circulant part 1/5
//                          at offsets ±1 and diagonal (1/5)(1+2cos(2πg^m/p))
//                          indexed by powers m = 0..p-2 of the smallest
//                          primitive root g mod p.  In the basis indexed by
//                          powers of g, multiplication by g is a cyclic
//                          shift, which is what makes the shift part an
//                          honest ±1 circulant.
//   build_mp3_diagonal(p, c):
//                          size-p operator with the standard 1/4 circulant
//                          and diagonal ½ cos(2πc(1+jp)/p²), j = 0..p-1.
#pragma once

#include <cstdint>
#include <vector>

#include "harper/common.hpp"

namespace harper {

// Circulant with first row c_0..c_{n-1}; Hermitian iff c_t = conj(c_{n-t}).
struct HermitianCirculant {
  std::vector<cplx> first_row;
  std::size_t n() const { return first_row.size(); }
};

struct RealDiagonal {
  std::vector<double> entries;
  std::size_t n() const { return entries.size(); }
};

struct CirculantPlusDiagonal {
  HermitianCirculant circulant;
  RealDiagonal diagonal;
  std::size_t n() const { return circulant.n(); }
};

// Dense Hermitian matrix, row-major.
struct DenseHermitian {
  std::size_t n = 0;
  std::vector<cplx> a;

  DenseHermitian() = default;
  explicit DenseHermitian(std::size_t size)
      : n(size), a(size * size, cplx{0.0, 0.0}) {}

  cplx& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// Validating constructor: requires n >= 3 and c_t = conj(c_{n-t}) within
// 1e-12 of the largest entry magnitude; violation throws
// std::invalid_argument.
HermitianCirculant make_hermitian_circulant(std::vector<cplx> first_row);

// c_0..c_{n-1} of the circulant with value v at offsets +1 and -1.
HermitianCirculant nearest_neighbour_circulant(std::size_t n, double v);

DenseHermitian to_dense(const HermitianCirculant& c);
DenseHermitian to_dense(const CirculantPlusDiagonal& m);

// y = M u for the structured sum; cost O(n · #nonzero circulant offsets).
std::vector<cplx> apply(const CirculantPlusDiagonal& m,
                        const std::vector<cplx>& u);

double trace_real(const DenseHermitian& m);
double max_abs_entry(const DenseHermitian& m);

// Named families ------------------------------------------------------------

CirculantPlusDiagonal build_harper(std::size_t n, std::size_t a);
CirculantPlusDiagonal build_affine_transform(std::uint64_t p);
CirculantPlusDiagonal build_mp3_diagonal(std::uint64_t p, std::uint64_t c);

// Small number-theory helpers used by the builders and the group module.
bool is_prime(std::uint64_t n);
std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp,
                        std::uint64_t mod);
std::uint64_t smallest_primitive_root(std::uint64_t p);

}  // namespace harper
