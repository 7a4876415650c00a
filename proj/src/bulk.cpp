#include "harper/bulk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "harper/eigen.hpp"
#include "harper/matrix.hpp"

namespace harper {
namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// 16-point Gauss-Legendre rule (positive half; nodes are +-x with equal
// weights).
constexpr double gl_x[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr double gl_w[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

template <class F>
double gauss16(F f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double total = 0.0;
  for (int i = 0; i < 8; ++i)
    total += gl_w[i] * (f(mid - half * gl_x[i]) + f(mid + half * gl_x[i]));
  return total * half;
}

// Fritsch-Carlson monotone cubic slopes for strictly increasing data.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const std::size_t k = x.size();
  std::vector<double> h(k - 1), d(k - 1), m(k);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    h[i] = x[i + 1] - x[i];
    d[i] = (y[i + 1] - y[i]) / h[i];
  }
  for (std::size_t i = 1; i + 1 < k; ++i) {
    if (d[i - 1] <= 0.0 || d[i] <= 0.0) {
      m[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  auto endpoint = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0.0) return 0.0;
    if (std::abs(s) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return s;
  };
  m[0] = k > 2 ? endpoint(h[0], h[1], d[0], d[1]) : d[0];
  m[k - 1] = k > 2 ? endpoint(h[k - 2], h[k - 3], d[k - 2], d[k - 3]) : d[k - 2];
  return m;
}

// Hermite cubic on [x0, x1] with values y and slopes s; also its derivative.
double hermite_value(double x, double x0, double x1, double y0, double y1,
                     double s0, double s1) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * h * s0 +
         (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * h * s1;
}

double hermite_derivative(double x, double x0, double x1, double y0, double y1,
                          double s0, double s1) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t;
  return (6.0 * t2 - 6.0 * t) * (y0 - y1) / h + (3.0 * t2 - 4.0 * t + 1.0) * s0 +
         (3.0 * t2 - 2.0 * t) * s1;
}

}  // namespace

double agm_mean(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("agm_mean: arguments must be positive");
  for (int iter = 0; iter < 64 && std::abs(a - b) > 1e-15 * a; ++iter) {
    const double mid = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = mid;
  }
  return 0.5 * (a + b);
}

double elliptic_k(double m) {
  if (!(m >= 0.0)) throw std::domain_error("elliptic_k: modulus must be >= 0");
  if (m >= 1.0)
    throw std::domain_error("elliptic_k: singular at modulus 1 (diverges)");
  if (m == 0.0) return pi / 2.0;
  return pi / (2.0 * agm_mean(1.0, std::sqrt((1.0 - m) * (1.0 + m))));
}

double elliptic_k_from_complement(double kc) {
  if (!(kc > 0.0 && kc <= 1.0))
    throw std::domain_error(
        "elliptic_k_from_complement: complement must lie in (0, 1]");
  return pi / (2.0 * agm_mean(1.0, kc));
}

double arcsine_density(double x) {
  const double ax = std::abs(x);
  if (ax > 1.0) return 0.0;
  if (ax == 1.0) return inf;  // flagged endpoint singularity
  return 1.0 / (pi * std::sqrt((1.0 - x) * (1.0 + x)));
}

double arcsine_cdf(double x) {
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return 0.5 + std::asin(x) / pi;
}

double arcsine_quantile(double u) {
  if (!(u >= 0.0 && u <= 1.0))
    throw std::invalid_argument("arcsine_quantile: u must lie in [0, 1]");
  return -std::cos(pi * u);
}

double f3_integral(double x) {
  const double ax = std::abs(x);
  if (ax > 2.0) return 0.0;
  if (ax == 0.0) return inf;  // flagged logarithmic singularity
  // Modulus (2-ax)/(2+ax); its complement sqrt(8 ax)/(2+ax) stays accurate
  // (and positive) however close ax is to 0.
  return (4.0 / (2.0 + ax)) *
         elliptic_k_from_complement(std::sqrt(8.0 * ax) / (2.0 + ax));
}

double f2_density(double x) {
  const double ax = std::abs(x);
  if (ax > 1.0) return 0.0;
  if (ax == 0.0) return inf;  // flagged logarithmic singularity
  // Modulus (1-ax)/(1+ax); complement 2 sqrt(ax)/(1+ax), as above.
  return (4.0 / (pi * pi * (1.0 + ax))) *
         elliptic_k_from_complement(2.0 * std::sqrt(ax) / (1.0 + ax));
}

EmpiricalMeasure make_empirical(std::vector<double> values) {
  if (values.empty())
    throw std::invalid_argument("make_empirical: no atoms given");
  std::sort(values.begin(), values.end());
  return {std::move(values)};
}

EmpiricalMeasure harper_spectrum_measure(std::size_t n, std::size_t a) {
  auto eig = dense_hermitian_eigen(to_dense(build_harper(n, a)), false);
  std::reverse(eig.values.begin(), eig.values.end());
  if (eig.values.front() < -1.0 - 1e-9 || eig.values.back() > 1.0 + 1e-9)
    throw numerical_error("harper_spectrum_measure: eigenvalue outside [-1,1]");
  return {std::move(eig.values)};
}

DensityCurve DensityCurve::bulk(std::size_t half_points) {
  if (half_points < 32)
    throw std::invalid_argument("DensityCurve: need at least 32 half points");

  // Half grid on (0, 1]: geometric cluster on [1e-12, 0.01) against the
  // logarithmic singularity at 0, then uniform up to 1.
  const double x_min = 1e-12, x_split = 0.01;
  const std::size_t n_log = half_points / 5;
  const std::size_t n_uni = half_points - n_log;
  std::vector<double> g;
  g.reserve(half_points);
  for (std::size_t i = 0; i < n_log; ++i)
    g.push_back(x_min * std::pow(x_split / x_min,
                                 static_cast<double>(i) /
                                     static_cast<double>(n_log)));
  for (std::size_t j = 0; j < n_uni; ++j)
    g.push_back(x_split + (1.0 - x_split) * static_cast<double>(j) /
                              static_cast<double>(n_uni - 1));

  // One-sided mass G(x) = int_0^x f2, accumulated along the half grid.  The
  // region below x_split is integrated in the variable s = log x, where the
  // integrand f2(e^s) e^s is smooth; the tail below x_min is picked up the
  // same way down to e^{-80} (beyond which the mass is ~1e-34).
  const auto log_integrand = [](double s) {
    const double x = std::exp(s);
    return f2_density(x) * x;
  };
  std::vector<double> big(half_points);
  {
    const double s_lo = -80.0, s_hi = std::log(x_min);
    double tail = 0.0;
    const int panels = 8;
    for (int q = 0; q < panels; ++q)
      tail += gauss16(log_integrand, s_lo + (s_hi - s_lo) * q / panels,
                      s_lo + (s_hi - s_lo) * (q + 1) / panels);
    big[0] = tail;
  }
  for (std::size_t i = 0; i + 1 < half_points; ++i) {
    const double piece =
        g[i + 1] <= x_split
            ? gauss16(log_integrand, std::log(g[i]), std::log(g[i + 1]))
            : gauss16(f2_density, g[i], g[i + 1]);
    big[i + 1] = big[i] + piece;
  }

  DensityCurve curve;
  curve.x_.resize(2 * half_points);
  curve.f_.resize(2 * half_points);
  for (std::size_t i = 0; i < half_points; ++i) {
    curve.x_[half_points - 1 - i] = -g[i];
    curve.f_[half_points - 1 - i] = 0.5 - big[i];
    curve.x_[half_points + i] = g[i];
    curve.f_[half_points + i] = 0.5 + big[i];
  }
  curve.slope_ = pchip_slopes(curve.x_, curve.f_);
  return curve;
}

double DensityCurve::density(double x) const { return f2_density(x); }

double DensityCurve::cdf(double x) const {
  if (x <= x_.front()) return f_.front();
  if (x >= x_.back()) return f_.back();
  const std::size_t i =
      static_cast<std::size_t>(std::upper_bound(x_.begin(), x_.end(), x) -
                               x_.begin()) -
      1;
  return hermite_value(x, x_[i], x_[i + 1], f_[i], f_[i + 1], slope_[i],
                       slope_[i + 1]);
}

double DensityCurve::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0))
    throw std::invalid_argument("DensityCurve::quantile: u must lie in [0,1]");
  if (u <= f_.front()) return x_.front();
  if (u >= f_.back()) return x_.back();
  const std::size_t i =
      static_cast<std::size_t>(std::upper_bound(f_.begin(), f_.end(), u) -
                               f_.begin()) -
      1;
  double lo = x_[i], hi = x_[i + 1];
  if (f_[i + 1] - f_[i] < 1e-15) return 0.5 * (lo + hi);

  // Safeguarded Newton on the monotone cubic, bisecting whenever a step
  // leaves the bracket.
  double x = lo + (hi - lo) * (u - f_[i]) / (f_[i + 1] - f_[i]);
  for (int iter = 0; iter < 100; ++iter) {
    const double value = hermite_value(x, x_[i], x_[i + 1], f_[i], f_[i + 1],
                                       slope_[i], slope_[i + 1]) -
                         u;
    if (std::abs(value) <= 1e-15) return x;
    if (value > 0.0)
      hi = x;
    else
      lo = x;
    if (hi - lo <= 1e-16 * (1.0 + std::abs(x))) return x;
    const double deriv = hermite_derivative(x, x_[i], x_[i + 1], f_[i],
                                            f_[i + 1], slope_[i], slope_[i + 1]);
    double next = deriv > 0.0 ? x - value / deriv : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return x;
}

double wasserstein2(const EmpiricalMeasure& emp, const DensityCurve& curve) {
  if (emp.atoms.empty())
    throw std::invalid_argument("wasserstein2: empty measure");
  const double n = static_cast<double>(emp.n());
  std::vector<double> pieces(emp.n());
  for (std::size_t i = 0; i < emp.n(); ++i) {
    const double a = emp.atoms[i];
    pieces[i] = gauss16(
        [&](double u) {
          const double d = a - curve.quantile(u);
          return d * d;
        },
        static_cast<double>(i) / n, static_cast<double>(i + 1) / n);
  }
  return std::sqrt(std::max(0.0, kahan_total(pieces)));
}

double wasserstein2(const EmpiricalMeasure& lhs, const EmpiricalMeasure& rhs) {
  if (lhs.atoms.empty() || rhs.atoms.empty())
    throw std::invalid_argument("wasserstein2: empty measure");
  const double n = static_cast<double>(lhs.n());
  const double m = static_cast<double>(rhs.n());
  std::vector<double> pieces;
  pieces.reserve(lhs.n() + rhs.n());
  std::size_t i = 0, j = 0;
  double u = 0.0;
  while (i < lhs.n() && j < rhs.n()) {
    // Exact merged breakpoints: compare (i+1)/n and (j+1)/m by
    // cross-multiplication (exact in doubles for these sizes).
    const double li = static_cast<double>(i + 1) * m;
    const double rj = static_cast<double>(j + 1) * n;
    const double next = li <= rj ? static_cast<double>(i + 1) / n
                                 : static_cast<double>(j + 1) / m;
    const double d = lhs.atoms[i] - rhs.atoms[j];
    pieces.push_back(d * d * (next - u));
    u = next;
    if (li <= rj) ++i;
    if (rj <= li) ++j;
  }
  return std::sqrt(std::max(0.0, kahan_total(pieces)));
}

std::vector<HistogramRow> figure1_data(std::size_t n, std::size_t a,
                                       std::size_t bins) {
  if (n > 10000)
    throw std::invalid_argument("figure1_data: n exceeds the runtime guard 1e4");
  if (bins < 20) throw std::invalid_argument("figure1_data: need bins >= 20");

  const EmpiricalMeasure measure = harper_spectrum_measure(n, a);
  const double width = 2.0 / static_cast<double>(bins);
  std::vector<HistogramRow> rows(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    rows[k].bin_left = -1.0 + width * static_cast<double>(k);
    rows[k].bin_right = -1.0 + width * static_cast<double>(k + 1);
    rows[k].f2_at_midpoint =
        f2_density(-1.0 + width * (static_cast<double>(k) + 0.5));
  }
  for (double atom : measure.atoms) {
    auto idx = static_cast<std::ptrdiff_t>((atom + 1.0) / width);
    idx = std::clamp<std::ptrdiff_t>(idx, 0,
                                     static_cast<std::ptrdiff_t>(bins) - 1);
    ++rows[static_cast<std::size_t>(idx)].count;
  }
  for (auto& row : rows)
    row.empirical_density = static_cast<double>(row.count) /
                            (static_cast<double>(n) * width);
  return rows;
}

}  // namespace harper
