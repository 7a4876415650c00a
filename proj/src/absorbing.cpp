#include "harper/absorbing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace harper {
namespace {

// cos(2*pi*num/den) with the argument reduced in integer arithmetic first.
double cos_frac(std::uint64_t num, std::uint64_t den) {
  return std::cos(2.0 * pi * static_cast<double>(num % den) /
                  static_cast<double>(den));
}

void check_rates(const std::vector<double>& v, const char* where) {
  for (double x : v)
    if (!(x >= 0.0))
      throw std::domain_error(std::string(where) +
                              ": negative or non-finite coordinate");
}

}  // namespace

double SubstochasticMatrix::absorb_rate(std::size_t i) const {
  double row = 0.0;
  for (std::size_t j = 0; j < n; ++j) row += at(i, j);
  return std::max(0.0, 1.0 - row);
}

SubstochasticMatrix build_substochastic(const CirculantPlusDiagonal& m) {
  const std::size_t n = m.n();
  const DenseHermitian dense = to_dense(m);
  SubstochasticMatrix mp;
  mp.n = n;
  mp.entries.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx base = dense.at(i, j);
      if (std::abs(base.imag()) > 1e-12)
        throw std::domain_error(
            "build_substochastic: input has non-real entries");
      double e = (i == j ? 1.0 / 3.0 : 0.0) + (2.0 / 3.0) * base.real();
      if (e < 0.0) {
        if (e < -1e-12)
          throw std::domain_error(
              "build_substochastic: negative entry after transform");
        e = 0.0;
      }
      mp.entries[i * n + j] = e;
      row += e;
    }
    if (row > 1.0 + 1e-12)
      throw std::domain_error("build_substochastic: row sum exceeds 1");
  }
  return mp;
}

AbsorbingChain build_absorbing(const SubstochasticMatrix& mp) {
  const std::size_t n = mp.n;
  AbsorbingChain chain;
  chain.n = n;
  chain.entries.assign((n + 1) * (n + 1), 0.0);
  chain.entries[0] = 1.0;  // row 0: stay absorbed
  for (std::size_t i = 0; i < n; ++i) {
    double* row = &chain.entries[(i + 1) * (n + 1)];
    row[0] = mp.absorb_rate(i);
    for (std::size_t j = 0; j < n; ++j) row[1 + j] = mp.at(i, j);
  }
  return chain;
}

KillRates harper_kill_rates(std::size_t n, std::size_t a) {
  if (n < 3) throw std::invalid_argument("harper_kill_rates: need n >= 3");
  KillRates rates;
  rates.u.resize(n);
  for (std::size_t xi = 0; xi < n; ++xi)
    rates.u[xi] =
        (1.0 - cos_frac(static_cast<std::uint64_t>(a) * xi, n)) / 3.0;
  return rates;
}

std::vector<double> sorted_rate_prefix(const KillRates& rates, std::size_t b) {
  check_rates(rates.u, "sorted_rate_prefix");
  if (rates.u.size() < b + 1)
    throw std::invalid_argument(
        "sorted_rate_prefix: need at least b+1 rates");
  std::vector<double> v = rates.u;
  // Only the smallest b+1 values survive the truncation.
  std::partial_sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(b + 1),
                    v.end());
  v.resize(b + 1);
  return v;
}

double f_b(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("f_b: empty rate vector");
  check_rates(v, "f_b");
  const double bp1 = static_cast<double>(v.size());  // b+1
  double log_sum = std::log1p(bp1 * bp1 * v[0] / 2.0);
  for (std::size_t l = 1; l < v.size(); ++l)
    log_sum += std::log1p(bp1 * (bp1 - static_cast<double>(l)) * v[l]);
  return std::exp(-log_sum / bp1);
}

double g_b(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("g_b: empty rate vector");
  check_rates(v, "g_b");
  const double bp1 = static_cast<double>(v.size());  // b+1
  double log_sum = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k)
    log_sum += std::log1p(bp1 * (bp1 - static_cast<double>(k)) * v[k] / 2.0);
  return std::exp(-log_sum / bp1);
}

std::vector<double> hitting_time_mgf_rates(std::size_t b) {
  std::vector<double> a(b + 1);
  const double bp1 = static_cast<double>(b + 1);
  for (std::size_t k = 1; k <= b + 1; ++k)
    a[k - 1] =
        1.0 - std::cos(pi * (2.0 * static_cast<double>(k) - 1.0) / (2.0 * bp1));
  return a;
}

}  // namespace harper
