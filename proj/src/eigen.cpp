#include "harper/eigen.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace harper {

namespace detail {

void tql2(std::vector<double>& d, std::vector<double>& e, double* z,
          std::size_t n) {
  if (n == 0) return;
  e[n - 1] = 0.0;
  const double eps = DBL_EPSILON;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw numerical_error(
              "tql2: implicit-shift iteration exceeded 50 sweeps for one "
              "eigenvalue");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t ii = m; ii-- > l;) {
          const std::size_t i = ii;
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {  // rotation underflow: deflate and restart
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            for (std::size_t k = 0; k < n; ++k) {
              f = z[k * n + i + 1];
              z[k * n + i + 1] = s * z[k * n + i] + c * f;
              z[k * n + i] = c * z[k * n + i] - s * f;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

namespace {

struct HouseholderStepR {
  std::size_t m;
  std::vector<double> u;
  double h;
};

struct HouseholderStepC {
  std::size_t m;
  std::vector<cplx> u;
  double h;
};

// Householder reduction of a real symmetric matrix to tridiagonal form.
// Only the lower triangle of a (row-major, n×n) is referenced or updated.
// The inner products and rank-2 updates are organized as row-wise passes
// over the lower triangle so the memory access stays sequential.
void tridiagonalize_real(std::vector<double>& a, std::size_t n,
                         std::vector<double>& d, std::vector<double>& e,
                         std::vector<HouseholderStepR>* steps) {
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  std::vector<double> u(n), p(n), w(n);
  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t m = i;  // active row segment a(i, 0..m-1)
    double* rowi = &a[i * n];
    if (m == 1) {
      e[0] = rowi[0];
      continue;
    }
    double scale = 0.0;
    for (std::size_t k = 0; k < m; ++k) scale += std::abs(rowi[k]);
    if (scale == 0.0) {
      e[i - 1] = 0.0;
      continue;
    }
    double off = 0.0;  // magnitude left of the subdiagonal entry
    for (std::size_t k = 0; k + 1 < m; ++k) off += std::abs(rowi[k]);
    if (off == 0.0) {
      e[i - 1] = rowi[m - 1];
      continue;
    }
    double xn2 = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      u[k] = rowi[k] / scale;
      xn2 += u[k] * u[k];
    }
    const double f = u[m - 1];
    const double alpha = (f >= 0.0) ? -std::sqrt(xn2) : std::sqrt(xn2);
    e[i - 1] = scale * alpha;
    const double h = xn2 - f * alpha;  // = |u|²/2 after the update below
    u[m - 1] = f - alpha;
    // p = A_sub·u / h via one row-wise pass over the lower triangle
    std::fill(p.begin(), p.begin() + m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      const double* row = &a[j * n];
      const double uj = u[j];
      double s = 0.0;
      for (std::size_t k = 0; k < j; ++k) {
        s += row[k] * u[k];
        p[k] += row[k] * uj;
      }
      p[j] += s + row[j] * uj;
    }
    double K = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      p[k] /= h;
      K += u[k] * p[k];
    }
    K /= 2.0 * h;
    for (std::size_t k = 0; k < m; ++k) w[k] = p[k] - K * u[k];
    // rank-2 update of the lower triangle: A -= u wᵀ + w uᵀ
    for (std::size_t j = 0; j < m; ++j) {
      double* row = &a[j * n];
      const double uj = u[j], wj = w[j];
      for (std::size_t k = 0; k <= j; ++k) row[k] -= uj * w[k] + wj * u[k];
    }
    if (steps)
      steps->push_back(
          HouseholderStepR{m, std::vector<double>(u.begin(), u.begin() + m), h});
  }
  for (std::size_t j = 0; j < n; ++j) d[j] = a[j * n + j];
}

// Householder reduction of a Hermitian matrix (lower triangle of a) to a
// complex tridiagonal, followed by the diagonal phase similarity that makes
// the subdiagonal real: T_real = Φ T_c Φ*. phase[j] holds Φ_jj.
void tridiagonalize_hermitian(std::vector<cplx>& a, std::size_t n,
                              std::vector<double>& d, std::vector<double>& e,
                              std::vector<cplx>& phase,
                              std::vector<HouseholderStepC>* steps) {
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  std::vector<cplx> esub(n, cplx{0.0, 0.0});  // esub[j] = A(j+1, j)
  std::vector<cplx> u(n), p(n), w(n);
  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t m = i;
    cplx* rowi = &a[i * n];
    if (m == 1) {
      esub[0] = rowi[0];
      continue;
    }
    double scale = 0.0;
    for (std::size_t k = 0; k < m; ++k)
      scale += std::abs(rowi[k].real()) + std::abs(rowi[k].imag());
    double off = 0.0;
    for (std::size_t k = 0; k + 1 < m; ++k)
      off += std::abs(rowi[k].real()) + std::abs(rowi[k].imag());
    if (scale == 0.0 || off == 0.0) {
      esub[i - 1] = rowi[m - 1];
      continue;
    }
    // Reflect the column segment y_k = conj(A(i,k)) onto α e_{m-1}.
    double yn2 = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      u[k] = std::conj(rowi[k]) / scale;
      yn2 += std::norm(u[k]);
    }
    const double ynorm = std::sqrt(yn2);
    const cplx ylast = u[m - 1];
    const double ylast_abs = std::abs(ylast);
    const cplx dir = (ylast_abs == 0.0) ? cplx{1.0, 0.0} : ylast / ylast_abs;
    const cplx alpha = -dir * ynorm;
    const double h = yn2 + ylast_abs * ynorm;  // = |u|²/2 after update
    u[m - 1] = ylast - alpha;
    esub[i - 1] = std::conj(alpha) * scale;  // stored as A(i, i-1)
    // p = A_sub·u / h via one row-wise pass over the lower triangle
    std::fill(p.begin(), p.begin() + m, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < m; ++j) {
      const cplx* row = &a[j * n];
      const cplx uj = u[j];
      cplx s{0.0, 0.0};
      for (std::size_t k = 0; k < j; ++k) {
        s += row[k] * u[k];
        p[k] += std::conj(row[k]) * uj;
      }
      p[j] += s + row[j].real() * u[j];
    }
    double K = 0.0;  // (u*p)/(2h) is real for Hermitian A
    for (std::size_t k = 0; k < m; ++k) {
      p[k] /= h;
      K += (std::conj(u[k]) * p[k]).real();
    }
    K /= 2.0 * h;
    for (std::size_t k = 0; k < m; ++k) w[k] = p[k] - K * u[k];
    for (std::size_t j = 0; j < m; ++j) {
      cplx* row = &a[j * n];
      const cplx uj = u[j], wj = w[j];
      for (std::size_t k = 0; k <= j; ++k)
        row[k] -= uj * std::conj(w[k]) + wj * std::conj(u[k]);
    }
    if (steps)
      steps->push_back(
          HouseholderStepC{m, std::vector<cplx>(u.begin(), u.begin() + m), h});
  }
  phase.assign(n, cplx{1.0, 0.0});
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const cplx v = esub[j];
    const double av = std::abs(v);
    e[j] = av;
    phase[j + 1] = (av == 0.0) ? phase[j] : phase[j] * (av / v);
  }
  for (std::size_t j = 0; j < n; ++j) d[j] = a[j * n + j].real();
}

void sort_descending(EigenResult& r) {
  const std::size_t n = r.values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return r.values[a] > r.values[b];
  });
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = r.values[idx[i]];
  r.values = std::move(vals);
  if (!r.vectors.empty()) {
    std::vector<std::vector<cplx>> vecs(n);
    for (std::size_t i = 0; i < n; ++i) vecs[i] = std::move(r.vectors[idx[i]]);
    r.vectors = std::move(vecs);
  }
}

}  // namespace
}  // namespace detail

EigenResult dense_hermitian_eigen(const DenseHermitian& m, bool want_vectors) {
  const std::size_t n = m.n;
  if (n == 0 || m.a.size() != n * n)
    throw std::invalid_argument(
        "dense_hermitian_eigen: matrix storage is empty or not square");
  const double scale = max_abs_entry(m);
  const double tol = 1e-12 * std::max(1.0, scale);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > tol)
        throw std::invalid_argument(
            "dense_hermitian_eigen: matrix is not Hermitian within 1e-12 of "
            "its largest entry");
  EigenResult result;
  if (n == 1) {
    result.values = {m.at(0, 0).real()};
    if (want_vectors) result.vectors = {{cplx{1.0, 0.0}}};
    return result;
  }
  bool real_input = true;
  for (const cplx& x : m.a)
    if (x.imag() != 0.0) {
      real_input = false;
      break;
    }

  std::vector<double> d, e;
  if (real_input) {
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        a[i * n + j] = 0.5 * (m.at(i, j).real() + m.at(j, i).real());
    std::vector<detail::HouseholderStepR> steps;
    detail::tridiagonalize_real(a, n, d, e,
                                want_vectors ? &steps : nullptr);
    std::vector<double> z;
    if (want_vectors) {
      z.assign(n * n, 0.0);
      for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
    }
    detail::tql2(d, e, want_vectors ? z.data() : nullptr, n);
    result.values = d;
    if (want_vectors) {
      result.vectors.assign(n, std::vector<cplx>(n));
      std::vector<double> col(n);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) col[k] = z[k * n + j];
        // back-transform through the reflections, innermost first
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
          double dot = 0.0;
          for (std::size_t k = 0; k < it->m; ++k) dot += it->u[k] * col[k];
          dot /= it->h;
          for (std::size_t k = 0; k < it->m; ++k) col[k] -= dot * it->u[k];
        }
        for (std::size_t k = 0; k < n; ++k) result.vectors[j][k] = col[k];
      }
    }
  } else {
    std::vector<cplx> a(n * n, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        a[i * n + j] = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
    std::vector<detail::HouseholderStepC> steps;
    std::vector<cplx> phase;
    detail::tridiagonalize_hermitian(a, n, d, e, phase,
                                     want_vectors ? &steps : nullptr);
    std::vector<double> z;
    if (want_vectors) {
      z.assign(n * n, 0.0);
      for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
    }
    detail::tql2(d, e, want_vectors ? z.data() : nullptr, n);
    result.values = d;
    if (want_vectors) {
      result.vectors.assign(n, std::vector<cplx>(n));
      std::vector<cplx> col(n);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k)
          col[k] = std::conj(phase[k]) * z[k * n + j];
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
          cplx dot{0.0, 0.0};
          for (std::size_t k = 0; k < it->m; ++k)
            dot += std::conj(it->u[k]) * col[k];
          dot /= it->h;
          for (std::size_t k = 0; k < it->m; ++k) col[k] -= dot * it->u[k];
        }
        result.vectors[j] = col;
      }
    }
  }
  detail::sort_descending(result);
  return result;
}

CirculantSpectrum circulant_eigendecomposition(const HermitianCirculant& c) {
  // Re-validate the Hermitian-circulant invariant on the raw first row.
  make_hermitian_circulant(c.first_row);
  const std::size_t n = c.n();
  std::vector<std::pair<std::size_t, cplx>> nz;
  double total = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    if (c.first_row[t] != cplx{0.0, 0.0}) nz.emplace_back(t, c.first_row[t]);
    total += std::abs(c.first_row[t]);
  }
  std::vector<std::pair<double, std::size_t>> symbol(n);
  for (std::size_t f = 0; f < n; ++f) {
    cplx acc{0.0, 0.0};
    for (const auto& [t, ct] : nz) {
      const std::size_t r = (f * t) % n;
      acc += ct * std::polar(1.0, 2.0 * pi * static_cast<double>(r) /
                                      static_cast<double>(n));
    }
    if (std::abs(acc.imag()) > 1e-10 * std::max(1.0, total))
      throw numerical_error(
          "circulant_eigendecomposition: symbol has a non-real component "
          "(first row violates Hermitian symmetry)");
    symbol[f] = {acc.real(), f};
  }
  std::stable_sort(symbol.begin(), symbol.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first != b.first) return a.first > b.first;
                     return a.second < b.second;
                   });
  CirculantSpectrum s;
  s.values.resize(n);
  s.frequency_perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.values[i] = symbol[i].first;
    s.frequency_perm[i] = symbol[i].second;
  }
  return s;
}

std::vector<cplx> fourier_eigenvector(std::size_t n, std::size_t f) {
  if (n == 0) throw std::invalid_argument("fourier_eigenvector: n must be positive");
  if (f >= n)
    throw std::invalid_argument("fourier_eigenvector: frequency out of range");
  std::vector<cplx> v(n);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t r = (f * k) % n;
    v[k] = s * std::polar(1.0, 2.0 * pi * static_cast<double>(r) /
                                   static_cast<double>(n));
  }
  return v;
}

}  // namespace harper
