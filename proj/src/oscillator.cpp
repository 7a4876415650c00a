#include "harper/oscillator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "harper/dft.hpp"
#include "harper/eigen.hpp"

namespace harper {
namespace {

double norm_squared(const std::vector<cplx>& u) {
  double s = 0.0;
  for (const cplx& x : u) s += std::norm(x);
  return s;
}

// Physicists' Hermite polynomial H_{level}(y), level = 0..4.
double hermite_value(std::size_t level, double y) {
  switch (level) {
    case 0:
      return 1.0;
    case 1:
      return 2.0 * y;
    case 2:
      return 4.0 * y * y - 2.0;
    case 3:
      return (8.0 * y * y - 12.0) * y;
    case 4:
      return (16.0 * y * y - 48.0) * y * y + 12.0;
    default:
      throw std::domain_error("hermite_value: unsupported level " +
                              std::to_string(level));
  }
}

}  // namespace

ScaledOperator make_scaled_harper(std::size_t n) {
  return ScaledOperator{n, build_harper(n, 1)};
}

double mu_k(std::size_t k) {
  if (k < 1) throw std::domain_error("mu_k: level k must be >= 1");
  return (2.0 * static_cast<double>(k) - 1.0) * pi / 2.0;
}

double quadratic_form_direct(const std::vector<cplx>& u) {
  const std::size_t n = u.size();
  if (n < 3) throw std::invalid_argument("quadratic_form_direct: need n >= 3");
  const ScaledOperator op = make_scaled_harper(n);
  const std::vector<cplx> mu = apply(op.base, u);
  // u^H n(I - M) u; the inner product is real for Hermitian M, so only the
  // real part is accumulated.
  double dot = 0.0;
  double nrm2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    dot += u[j].real() * mu[j].real() + u[j].imag() * mu[j].imag();
    nrm2 += std::norm(u[j]);
  }
  return static_cast<double>(n) * (nrm2 - dot);
}

double quadratic_form_spectral(const std::vector<cplx>& u) {
  const std::size_t n = u.size();
  if (n < 3)
    throw std::invalid_argument("quadratic_form_spectral: need n >= 3");
  const std::vector<cplx> spectrum = dft_forward(u);
  const double nd = static_cast<double>(n);
  double frequency_term = 0.0;
  double position_term = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = std::sin(pi * static_cast<double>(j) / nd);
    frequency_term += s * s * std::norm(spectrum[j]);
    position_term += s * s * std::norm(u[j]);
  }
  return frequency_term + nd * position_term;
}

HermiteApproximant hermite_approximant(std::size_t n, std::size_t k) {
  if (k < 1 || k > 5)
    throw std::domain_error("hermite_approximant: unsupported level " +
                            std::to_string(k) + " (need 1 <= k <= 5)");
  if (n < 100)
    throw std::invalid_argument("hermite_approximant: need n >= 100");
  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(n / 2);
  const double root_n = std::sqrt(static_cast<double>(n));
  std::vector<double> values(n, 0.0);
  // Grid point m runs over {-⌊n/2⌋, ..., ⌈n/2⌉-1}; storage index (m mod n)
  // puts the center m = 0 at index 0.
  for (std::ptrdiff_t m = -half; m < static_cast<std::ptrdiff_t>(n) - half;
       ++m) {
    const double x = static_cast<double>(m) / root_n;
    const std::size_t idx = static_cast<std::size_t>(
        (m % static_cast<std::ptrdiff_t>(n) + static_cast<std::ptrdiff_t>(n)) %
        static_cast<std::ptrdiff_t>(n));
    values[idx] =
        hermite_value(k - 1, std::sqrt(2.0 * pi) * x) * std::exp(-pi * x * x);
  }
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  // Extreme grid points m = -⌊n/2⌋ and m = ⌈n/2⌉-1 sit at these indices.
  const double left_edge = std::abs(values[n - static_cast<std::size_t>(half)]);
  const double right_edge =
      std::abs(values[n - static_cast<std::size_t>(half) - 1]);
  const double wrap = std::max(left_edge, right_edge);
  if (!(wrap < 1e-8 * peak))
    throw std::domain_error(
        "hermite_approximant: grid too coarse, wrap boundary carries " +
        format_float17(wrap / peak) + " of the peak");
  double nrm = 0.0;
  for (double v : values) nrm += v * v;
  nrm = std::sqrt(nrm);
  for (double& v : values) v /= nrm;
  return HermiteApproximant{k, n, std::move(values)};
}

double rayleigh_quotient(const ScaledOperator& op, const std::vector<cplx>& v) {
  if (v.size() != op.n)
    throw std::invalid_argument("rayleigh_quotient: dimension mismatch");
  const double nrm2 = norm_squared(v);
  if (nrm2 == 0.0)
    throw std::invalid_argument("rayleigh_quotient: zero vector");
  return quadratic_form_direct(v) / nrm2;
}

std::vector<cplx> conjugation_unitary_apply(const std::vector<cplx>& u) {
  const std::size_t n = u.size();
  if (n < 2) throw std::invalid_argument("conjugation_unitary_apply: n >= 2");
  std::vector<cplx> v(n);
  if (n % 2 == 0) {
    const std::size_t shift = n / 2;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx src = u[(k + n - shift) % n];
      v[k] = (k % 2 == 0) ? src : -src;
    }
  } else {
    const std::size_t shift = (n + 1) / 2;
    for (std::size_t k = 0; k < n; ++k) {
      // Phase e^{2πiαk} with α = -(n+1)/(2n); the angle is reduced modulo
      // 2π exactly in integer arithmetic before evaluating the polar form.
      const std::size_t r = ((n + 1) * k) % (2 * n);
      const double angle = -pi * static_cast<double>(r) / static_cast<double>(n);
      v[k] = std::polar(1.0, angle) * u[(k + n - shift) % n];
    }
  }
  return v;
}

double asymptotic_eigenvalue(std::size_t n, std::size_t k, SpectrumEnd end) {
  if (n < 3) throw std::invalid_argument("asymptotic_eigenvalue: need n >= 3");
  const double shift = mu_k(k) / static_cast<double>(n);
  return end == SpectrumEnd::top ? 1.0 - shift : -1.0 + shift;
}

std::vector<ConvergenceRow> convergence_table(
    const std::vector<std::size_t>& sizes, std::size_t k_max) {
  if (k_max < 1)
    throw std::invalid_argument("convergence_table: need k_max >= 1");
  std::vector<ConvergenceRow> rows;
  rows.reserve(sizes.size() * k_max);
  for (std::size_t n : sizes) {
    if (n < 2 * k_max)
      throw std::invalid_argument("convergence_table: size too small");
    const EigenResult eig =
        dense_hermitian_eigen(to_dense(build_harper(n, 1)), false);
    for (std::size_t k = 1; k <= k_max; ++k) {
      const double scaled =
          static_cast<double>(n) * (1.0 - eig.values[k - 1]);
      const double mu = mu_k(k);
      rows.push_back(ConvergenceRow{n, k, scaled, mu, std::abs(scaled - mu)});
    }
  }
  return rows;
}

}  // namespace harper
