#include "harper/dft.hpp"

#include <cmath>
#include <stdexcept>

namespace harper {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 transform: v(λ) <- Σ_k v(k) e^{sign·2πiλk/n}.
void fft_pow2(std::vector<cplx>& v, int sign) {
  const std::size_t n = v.size();
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * pi / static_cast<double>(len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx w = std::polar(1.0, ang * static_cast<double>(k));
        const cplx a = v[i + k];
        const cplx b = v[i + k + len / 2] * w;
        v[i + k] = a + b;
        v[i + k + len / 2] = a - b;
      }
    }
  }
}

// Direct transform using the exact twiddle table w[j] = e^{sign·2πij/n};
// exponents are reduced mod n in integer arithmetic.
std::vector<cplx> dft_direct(const std::vector<cplx>& u, int sign) {
  const std::size_t n = u.size();
  std::vector<cplx> w(n);
  for (std::size_t j = 0; j < n; ++j)
    w[j] = std::polar(1.0, sign * 2.0 * pi * static_cast<double>(j) /
                               static_cast<double>(n));
  std::vector<cplx> out(n);
  for (std::size_t f = 0; f < n; ++f) {
    cplx acc{0.0, 0.0};
    std::size_t idx = 0;  // (f*k) mod n, advanced incrementally
    for (std::size_t k = 0; k < n; ++k) {
      acc += u[k] * w[idx];
      idx += f;
      if (idx >= n) idx -= n;
    }
    out[f] = acc;
  }
  return out;
}

std::vector<cplx> transform(const std::vector<cplx>& u, int sign) {
  if (u.empty()) throw std::invalid_argument("dft: input must be non-empty");
  if (u.size() == 1) return u;
  if (is_power_of_two(u.size())) {
    std::vector<cplx> v = u;
    fft_pow2(v, sign);
    return v;
  }
  return dft_direct(u, sign);
}

}  // namespace

std::vector<cplx> dft_forward(const std::vector<cplx>& u) {
  return transform(u, -1);
}

std::vector<cplx> dft_inverse(const std::vector<cplx>& spectrum) {
  std::vector<cplx> v = transform(spectrum, +1);
  const double inv_n = 1.0 / static_cast<double>(v.size());
  for (auto& x : v) x *= inv_n;
  return v;
}

std::vector<cplx> dft_unitary(const std::vector<cplx>& u) {
  std::vector<cplx> v = transform(u, +1);
  const double s = 1.0 / std::sqrt(static_cast<double>(v.size()));
  for (auto& x : v) x *= s;
  return v;
}

std::vector<cplx> dft_unitary_inverse(const std::vector<cplx>& v) {
  std::vector<cplx> u = transform(v, -1);
  const double s = 1.0 / std::sqrt(static_cast<double>(u.size()));
  for (auto& x : u) x *= s;
  return u;
}

}  // namespace harper
