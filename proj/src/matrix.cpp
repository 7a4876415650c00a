#include "harper/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace harper {

namespace {

// cos(2π r / n) with the rational phase reduced exactly in integers.
double cos_frac(std::uint64_t r, std::uint64_t n) {
  return std::cos(2.0 * pi * static_cast<double>(r % n) /
                  static_cast<double>(n));
}

}  // namespace

HermitianCirculant make_hermitian_circulant(std::vector<cplx> first_row) {
  const std::size_t n = first_row.size();
  if (n < 3)
    throw std::invalid_argument(
        "hermitian circulant: size must be at least 3, got " +
        std::to_string(n));
  double scale = 0.0;
  for (const cplx& c : first_row) scale = std::max(scale, std::abs(c));
  const double tol = 1e-12 * std::max(1.0, scale);
  if (std::abs(first_row[0].imag()) > tol)
    throw std::invalid_argument(
        "hermitian circulant: c_0 must be real (symmetry violation)");
  for (std::size_t t = 1; t < n; ++t) {
    if (std::abs(first_row[t] - std::conj(first_row[n - t])) > tol)
      throw std::invalid_argument(
          "hermitian circulant: first row violates c_t = conj(c_{n-t}) at t=" +
          std::to_string(t));
  }
  return HermitianCirculant{std::move(first_row)};
}

HermitianCirculant nearest_neighbour_circulant(std::size_t n, double v) {
  if (n < 3)
    throw std::invalid_argument(
        "nearest-neighbour circulant: size must be at least 3");
  std::vector<cplx> row(n, cplx{0.0, 0.0});
  row[1] = cplx{v, 0.0};
  row[n - 1] = cplx{v, 0.0};
  return HermitianCirculant{std::move(row)};
}

DenseHermitian to_dense(const HermitianCirculant& c) {
  const std::size_t n = c.n();
  DenseHermitian m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = c.first_row[(j + n - i) % n];
  return m;
}

DenseHermitian to_dense(const CirculantPlusDiagonal& mat) {
  if (mat.circulant.n() != mat.diagonal.n())
    throw std::invalid_argument(
        "circulant+diagonal: mismatched circulant and diagonal sizes");
  DenseHermitian m = to_dense(mat.circulant);
  for (std::size_t i = 0; i < m.n; ++i)
    m.at(i, i) += mat.diagonal.entries[i];
  return m;
}

std::vector<cplx> apply(const CirculantPlusDiagonal& m,
                        const std::vector<cplx>& u) {
  const std::size_t n = m.n();
  if (u.size() != n)
    throw std::invalid_argument("apply: vector length does not match matrix");
  std::vector<std::size_t> offsets;
  for (std::size_t t = 0; t < n; ++t)
    if (m.circulant.first_row[t] != cplx{0.0, 0.0}) offsets.push_back(t);
  std::vector<cplx> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc = m.diagonal.entries[i] * u[i];
    for (std::size_t t : offsets) acc += m.circulant.first_row[t] * u[(i + t) % n];
    y[i] = acc;
  }
  return y;
}

double trace_real(const DenseHermitian& m) {
  std::vector<double> diag(m.n);
  for (std::size_t i = 0; i < m.n; ++i) diag[i] = m.at(i, i).real();
  return kahan_total(diag);
}

double max_abs_entry(const DenseHermitian& m) {
  double v = 0.0;
  for (const cplx& x : m.a) v = std::max(v, std::abs(x));
  return v;
}

// ── named families ──────────────────────────────────────────────────────────

CirculantPlusDiagonal build_harper(std::size_t n, std::size_t a) {
  if (n < 3)
    throw std::invalid_argument("build_harper: n must be at least 3, got " +
                                std::to_string(n));
  if (a > n - 1)
    throw std::invalid_argument(
        "build_harper: frequency a must satisfy 0 <= a <= n-1");
  CirculantPlusDiagonal m;
  m.circulant = nearest_neighbour_circulant(n, 0.25);
  m.diagonal.entries.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    m.diagonal.entries[j] =
        0.5 * cos_frac(static_cast<std::uint64_t>(a) * j, n);
  return m;
}

CirculantPlusDiagonal build_affine_transform(std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("build_affine_transform: p must be prime");
  if (p < 5)
    throw std::domain_error(
        "build_affine_transform: p must be at least 5 (for p = 3 the "
        "transform is 2x2 and has no well-defined +/-1 circulant part)");
  const std::size_t n = static_cast<std::size_t>(p - 1);
  const std::uint64_t g = smallest_primitive_root(p);
  CirculantPlusDiagonal m;
  m.circulant = nearest_neighbour_circulant(n, 0.2);
  m.diagonal.entries.resize(n);
  std::uint64_t gm = 1;  // g^m mod p
  for (std::size_t mth = 0; mth < n; ++mth) {
    m.diagonal.entries[mth] = 0.2 * (1.0 + 2.0 * cos_frac(gm, p));
    gm = (static_cast<unsigned __int128>(gm) * g) % p;
  }
  return m;
}

CirculantPlusDiagonal build_mp3_diagonal(std::uint64_t p, std::uint64_t c) {
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument(
        "build_mp3_diagonal: p must be a prime >= 3");
  if (c < 1 || c > p - 1)
    throw std::invalid_argument(
        "build_mp3_diagonal: c must satisfy 1 <= c <= p-1");
  const std::size_t n = static_cast<std::size_t>(p);
  const std::uint64_t p2 = p * p;
  CirculantPlusDiagonal m;
  m.circulant = nearest_neighbour_circulant(n, 0.25);
  m.diagonal.entries.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t phase = (c * (1 + j * p)) % p2;
    m.diagonal.entries[j] = 0.5 * cos_frac(phase, p2);
  }
  return m;
}

// ── number theory ───────────────────────────────────────────────────────────

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp,
                        std::uint64_t mod) {
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1) acc = (acc * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument(
        "smallest_primitive_root: p must be a prime >= 3");
  // prime factors of p-1
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t q : factors) {
      if (power_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw numerical_error("smallest_primitive_root: none found (not prime?)");
}

}  // namespace harper
